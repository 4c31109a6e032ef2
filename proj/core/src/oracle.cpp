#include "fairrank/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fairrank {

namespace {

void check_budget(int d, const EnumerationBudget& budget) {
    if (d > budget.max_d)
        throw BudgetExceeded("oracle: d=" + std::to_string(d) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.max_d));
}

// Calls fn(sigma) for every ranking of d elements in lexicographic order.
template <typename Fn>
void for_each_ranking(int d, const Fn& fn) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(Ranking(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

std::optional<CfrResult> oracle_cfr(const Ranking& pi, const GroupAssignment& groups,
                                    const FairnessSpec& spec, Metric m,
                                    const EnumerationBudget& budget) {
    spec.validate_for(groups);
    if (pi.size() != groups.dimension())
        throw std::invalid_argument("oracle: ranking and groups disagree on the element count");
    check_budget(pi.size(), budget);

    std::optional<CfrResult> best;
    for_each_ranking(pi.size(), [&](const Ranking& sigma) {
        if (!check_fair(sigma, groups, spec)) return;
        long long dist = metric_distance_naive(m, pi, sigma);
        if (!best || dist < best->distance) best = CfrResult{sigma, dist};
    });
    return best;
}

std::optional<AggResult> oracle_fair_aggregate(const std::vector<Ranking>& inputs,
                                               const GroupAssignment& groups,
                                               const FairnessSpec& spec, Metric m, QExponent q,
                                               const EnumerationBudget& budget) {
    spec.validate_for(groups);
    if (inputs.empty()) throw std::invalid_argument("oracle: need at least one input ranking");
    for (const Ranking& r : inputs)
        if (r.size() != groups.dimension())
            throw std::invalid_argument("oracle: ranking and groups disagree on the element count");
    check_budget(groups.dimension(), budget);

    std::optional<AggResult> best;
    for_each_ranking(groups.dimension(), [&](const Ranking& sigma) {
        if (!check_fair(sigma, groups, spec)) return;
        ObjectiveValue score(q);
        for (const Ranking& pi : inputs) score.add(metric_distance_naive(m, pi, sigma));
        if (!best || score.compare(best->objective) < 0) best = AggResult{sigma, std::move(score)};
    });
    return best;
}

int oracle_lcs_fair(const std::vector<int>& seq, const GroupAssignment& groups,
                    const FairnessSpec& spec, const EnumerationBudget& budget) {
    spec.validate_for(groups);
    check_budget(groups.dimension(), budget);

    int best = -1;
    for_each_ranking(groups.dimension(), [&](const Ranking& sigma) {
        if (!check_fair(sigma, groups, spec)) return;
        best = std::max(best, lcs_length_quadratic(seq, sigma.perm()));
    });
    return best;
}

}  // namespace fairrank
