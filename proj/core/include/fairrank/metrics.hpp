#pragma once

#include <string>
#include <vector>

#include "fairrank/ranking.hpp"

namespace fairrank {

enum class Metric { KendallTau, SpearmanFootrule, Ulam };

std::string to_string(Metric m);
// Accepts "kt", "sf", "ulam".  Throws std::invalid_argument otherwise.
Metric parse_metric(const std::string& text);

// Kendall tau: number of element pairs ordered differently by a and b.
// Counted as the inversions of b composed with a^-1 via merge sort,
// O(d log d).  The result fits in long long for any 32-bit d.
long long kendall_tau(const Ranking& a, const Ranking& b);

// Spearman footrule: sum over elements of |rank_a(e) - rank_b(e)|.
long long spearman_footrule(const Ranking& a, const Ranking& b);

// Ulam: minimum number of move-one-element steps turning a into b, equal to
// d minus the length of their longest common subsequence.  Computed as a
// longest increasing subsequence via patience sorting, O(d log d).
long long ulam(const Ranking& a, const Ranking& b);

long long metric_distance(Metric m, const Ranking& a, const Ranking& b);

// Quadratic reference forms.  These recompute the same three distances from
// the definitions (pair enumeration / full DP) and exist so the fast forms
// can be cross-checked; they are exercised heavily by the test suite.
long long kendall_tau_naive(const Ranking& a, const Ranking& b);
long long spearman_footrule_naive(const Ranking& a, const Ranking& b);
long long ulam_naive(const Ranking& a, const Ranking& b);
long long metric_distance_naive(Metric m, const Ranking& a, const Ranking& b);

// Longest common subsequence of two sequences of distinct values (the
// sequences need not have equal length or equal support).
//
// lcs_length maps t's values to positions and reduces to a longest
// increasing subsequence, O((|s| + |t|) log |t|); lcs_length_quadratic is
// the classic O(|s| * |t|) table and serves as its reference.
int lcs_length(const std::vector<int>& s, const std::vector<int>& t);
int lcs_length_quadratic(const std::vector<int>& s, const std::vector<int>& t);

}  // namespace fairrank
