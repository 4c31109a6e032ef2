#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairrank/fairness.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rational.hpp"

namespace fairrank {

// Output of a closest-fair-ranking solver: a fair ranking plus its distance
// from the input under the solver's metric.  An empty optional from any
// solver means no ranking satisfies the fairness constraints at all.
struct CfrResult {
    Ranking ranking;
    long long distance;
};

// Closest fair ranking under Kendall tau when only the single prefix of
// length k is constrained.  Two-phase greedy over the input order: first the
// floor(alpha_i * k) highest-ranked elements of every group, then the
// remaining highest-ranked elements whose group stays within its
// ceil(beta_i * k) cap.  Elements keep their input-relative order inside the
// prefix and outside it, which is optimal for Kendall tau.  O(d log d)
// including the distance evaluation.
std::optional<CfrResult> cfr_kendall_kfair(const Ranking& pi, const GroupAssignment& groups,
                                           const std::vector<Rational>& alpha,
                                           const std::vector<Rational>& beta, int k);

// Closest fair ranking under Kendall tau with block fairness: every prefix
// length p >= k that is a multiple of the block length is constrained.
// Runs the k-prefix greedy on the full ranking for p = floor(d/b)*b,
// p - b, ..., down to the first block multiple >= k.  O(d^2 / b).
std::optional<CfrResult> cfr_kendall_blockfair(const Ranking& pi, const GroupAssignment& groups,
                                               const std::vector<Rational>& alpha,
                                               const std::vector<Rational>& beta, int k, int block);

// Dynamic program behind the strict-fairness Ulam solver.
//
// State (j, a_1, ..., a_g): the first j elements of the reference sequence
// have been consumed and a_i elements of group i have been placed in the
// ranking under construction.  Cell value = the maximum number of placed
// elements that form a common subsequence with the consumed part of the
// reference.  Transitions: consume-and-place the next reference element
// (match), consume without placing (skip), or place some element of group i
// without consuming (fill).  Any state whose placed-prefix composition
// violates the floor/ceil quota bounds at length gamma = sum a_i >= k is
// forbidden, so every surviving build order corresponds position-for-
// position to a ranking whose prefixes are all fair.  Table size
// (m+1) * prod(|G_i|+1) cells, one tag byte per cell; values live in two
// rolling layers.  Time O(g * d^(g+1)), within the O(d^(g+2)) budget.
class UlamDpTable {
public:
    UlamDpTable(std::vector<int> seq, const GroupAssignment& groups,
                const std::vector<Rational>& alpha, const std::vector<Rational>& beta, int k);

    // Longest common subsequence achievable between the reference sequence
    // and any strictly fair ranking; -1 when no fair ranking exists.
    int best_lcs() const { return best_lcs_; }

    // A fair ranking attaining best_lcs(); empty when best_lcs() < 0.
    std::optional<Ranking> reconstruct() const;

    size_t cell_count() const { return tags_.size(); }
    static size_t estimate_bytes(const GroupAssignment& groups, size_t seq_len);

private:
    enum Tag : uint8_t { kUnreachable = 0, kBase, kSkip, kMatch, kFillBase };

    size_t layer_index(const std::vector<int>& counts) const;

    std::vector<int> seq_;
    const GroupAssignment& groups_;
    std::vector<int> dims_;          // |G_i| + 1 per group
    std::vector<size_t> strides_;
    size_t layer_size_ = 0;
    std::vector<uint8_t> tags_;      // (m+1) layers
    int best_lcs_ = -1;
};

// Closest fair ranking under the Ulam metric with strict fairness (every
// prefix >= k constrained).  The reference may be a full permutation or any
// shorter duplicate-free element sequence; in both cases the output is a
// full fair ranking maximizing the common subsequence with the reference,
// and distance = d - that length (the Ulam distance when the reference is a
// full permutation).
std::optional<CfrResult> cfr_ulam_strict(const std::vector<int>& seq, const GroupAssignment& groups,
                                         const std::vector<Rational>& alpha,
                                         const std::vector<Rational>& beta, int k);

// Dispatch on (metric, mode): Kendall tau pairs with KFair or BlockFair,
// Ulam with StrictFair.  Throws std::invalid_argument for any other
// combination (no exact polynomial solver is provided for those).
std::optional<CfrResult> closest_fair_ranking(const Ranking& pi, const GroupAssignment& groups,
                                              const FairnessSpec& spec, Metric metric);

// True when every group's members appear in the same relative order in
// `input` and `output`.  The Kendall solvers guarantee this on every
// output; tests assert it directly.
bool preserves_relative_group_order(const Ranking& input, const Ranking& output,
                                    const GroupAssignment& groups);

}  // namespace fairrank
