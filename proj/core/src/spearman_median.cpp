#include <climits>
#include <stdexcept>
#include <vector>

#include "fairrank/aggregate.hpp"

namespace fairrank {

namespace {

// Minimum-cost perfect matching on a dense square cost matrix by successive
// shortest paths with row/column potentials (Hungarian method): one Dijkstra
// style sweep per row, O(n^3) total.  Returns the matched column per row.
std::vector<int> min_cost_assignment(const std::vector<std::vector<long long>>& cost) {
    const int n = static_cast<int>(cost.size());
    const long long kInf = LLONG_MAX / 4;
    // 1-based with a virtual column 0; p[j] = row currently matched to j.
    std::vector<long long> u(static_cast<size_t>(n) + 1, 0), v(static_cast<size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<size_t>(n) + 1, 0), way(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<long long> minv(static_cast<size_t>(n) + 1, kInf);
        std::vector<char> used(static_cast<size_t>(n) + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {  // strict: smallest column wins ties
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> match(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
    return match;
}

}  // namespace

Ranking spearman_median(const std::vector<Ranking>& inputs) {
    if (inputs.empty()) throw std::invalid_argument("aggregate: need at least one input ranking");
    const int d = inputs.front().size();
    for (const Ranking& r : inputs)
        if (r.size() != d) throw std::invalid_argument("aggregate: input rankings differ in size");

    // The footrule sum decomposes per element, so the optimal sigma is a
    // cheapest assignment of elements to positions.
    std::vector<std::vector<long long>> cost(static_cast<size_t>(d),
                                             std::vector<long long>(static_cast<size_t>(d), 0));
    for (int e = 0; e < d; ++e)
        for (const Ranking& pi : inputs) {
            int r = pi.rank_of(e);
            for (int pos = 0; pos < d; ++pos) cost[e][pos] += r < pos ? pos - r : r - pos;
        }

    std::vector<int> position_of = min_cost_assignment(cost);
    std::vector<int> perm(static_cast<size_t>(d));
    for (int e = 0; e < d; ++e) perm[position_of[e]] = e;
    return Ranking(std::move(perm));
}

}  // namespace fairrank
