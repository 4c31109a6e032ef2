#pragma once

#include <string>
#include <vector>

#include "fairrank/ranking.hpp"
#include "fairrank/rational.hpp"

namespace fairrank {

// The three fairness regimes for the top of a ranking.  With per-group
// lower/upper quota fractions alpha_i <= beta_i and a threshold k:
//
//   KFair      the single prefix of length k contains between
//              floor(alpha_i * k) and ceil(beta_i * k) elements of group i;
//   BlockFair  every prefix length p >= k with p % block == 0 contains
//              between alpha_i * p and beta_i * p elements of group i
//              (exact integers: block * alpha_i and block * beta_i are
//              required to be integral, so no rounding is involved);
//   StrictFair every prefix length p >= k obeys the floor/ceil bounds.
enum class FairMode { KFair, BlockFair, StrictFair };

std::string to_string(FairMode mode);

struct FairnessSpec {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    int k = 1;
    FairMode mode = FairMode::KFair;
    int block = 0;  // used only when mode == BlockFair

    FairnessSpec(std::vector<Rational> alpha_in, std::vector<Rational> beta_in, int k_in,
                 FairMode mode_in, int block_in = 0);

    // Cross-checks against a concrete universe: one quota pair per group,
    // 1 <= k <= d, and for BlockFair 1 <= block <= d.  Dimension mismatches
    // are construction-time errors, so solvers may assume validated inputs.
    void validate_for(const GroupAssignment& groups) const;
};

// Single left-to-right pass deciding whether a ranking satisfies the
// fairness spec.  O(d * g) worst case, exact arithmetic throughout.
bool check_fair(const Ranking& r, const GroupAssignment& groups, const FairnessSpec& spec);

// Whether any ranking of this universe satisfies the spec.  Decided by
// running the exact closest-fair-ranking solver for the spec's mode on the
// identity ranking and checking its output.
bool feasibility_exists(const GroupAssignment& groups, const FairnessSpec& spec);

}  // namespace fairrank
