#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "fairrank/aggregate.hpp"
#include "fairrank/cfr.hpp"
#include "fairrank/fairness.hpp"
#include "fairrank/metrics.hpp"
#include "fairrank/ranking.hpp"

namespace fairrank {

// Upper bound on d for the brute-force reference solvers below; they
// enumerate all d! rankings and exist to certify the polynomial solvers on
// small universes (and to serve as the only solver for combinations that
// have no polynomial algorithm here, such as Spearman-footrule repair).
struct EnumerationBudget {
    int max_d = 8;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact closest fair ranking by enumerating every permutation in
// lexicographic order, filtering with check_fair, and scoring with the
// quadratic reference metrics (deliberately independent from the fast
// metric paths).  Ties resolve to the lexicographically smallest optimum.
std::optional<CfrResult> oracle_cfr(const Ranking& pi, const GroupAssignment& groups,
                                    const FairnessSpec& spec, Metric m,
                                    const EnumerationBudget& budget = {});

// Exact fair rank aggregation under the q-mean objective, same enumeration
// scheme and tie-break.
std::optional<AggResult> oracle_fair_aggregate(const std::vector<Ranking>& inputs,
                                               const GroupAssignment& groups,
                                               const FairnessSpec& spec, Metric m, QExponent q,
                                               const EnumerationBudget& budget = {});

// Maximum length of a common subsequence between `seq` and any fair
// ranking, by the same enumeration; -1 when no ranking is fair.
int oracle_lcs_fair(const std::vector<int>& seq, const GroupAssignment& groups,
                    const FairnessSpec& spec, const EnumerationBudget& budget = {});

}  // namespace fairrank
