#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fairrank/fairness.hpp"
#include "fairrank/instance.hpp"

namespace fairrank {

// Raised for any syntactic or semantic problem in instance text; the
// message names the offending field (or line/column for JSON syntax).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The JSON instance format, 1-based elements throughout:
//
//   {
//     "d": 4,
//     "groups": [[1, 2], [3, 4]],
//     "alpha": ["1/2", "1/2"],
//     "beta": ["1/2", "1/2"],
//     "k": 2,
//     "mode": "block",          // "kfair" | "block" | "strict"
//     "block": 2,               // present exactly when mode == "block"
//     "rankings": [[1, 3, 2, 4], [1, 2, 3, 4]]
//   }
//
// parse_instance revalidates every construction invariant and reports the
// offending field; write_instance emits the canonical form above (fixed key
// order, two-space indent, trailing newline), so parse followed by write is
// byte-identical on canonical files.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string write_instance(const Instance& instance);

struct GenConfig {
    int d = 6;
    int n = 3;
    int g = 2;
    uint64_t seed = 0;
    FairMode mode = FairMode::KFair;
    int denominator_cap = 6;  // quota denominators (block lengths for BlockFair) stay <= cap
};

// Deterministic random instance: same config, same instance, on every
// platform (all randomness flows through Xorshift64Star).  Quota draws are
// biased toward each group's share of the universe and the spec is
// feasibility-screened, redrawing until some fair ranking exists.  Throws
// std::runtime_error when 256 attempts all fail.
Instance generate_instance(const GenConfig& config);

}  // namespace fairrank
