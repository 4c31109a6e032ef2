#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "fairrank/aggregate.hpp"

namespace fairrank {

PrecedenceGraph PrecedenceGraph::build(const std::vector<Ranking>& inputs,
                                       const Rational& alpha) {
    if (inputs.empty()) throw std::invalid_argument("aggregate: need at least one input ranking");
    if (alpha > Rational(1, 2))
        throw std::invalid_argument("precedence graph: alpha must be at most 1/2");
    const int d = inputs.front().size();
    const long long n = static_cast<long long>(inputs.size());
    for (const Ranking& r : inputs)
        if (r.size() != d) throw std::invalid_argument("aggregate: input rankings differ in size");

    PrecedenceGraph graph;
    graph.d = d;
    graph.out.assign(static_cast<size_t>(d), {});
    graph.removed.assign(static_cast<size_t>(d), 0);

    // Edge a -> b iff |{pi : a before b}| >= (1 - 2 * alpha) * n, i.e.
    // count * den >= (den - 2 * num) * n in integers.
    const long long num = alpha.num(), den = alpha.den();
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (a == b) continue;
            long long before = 0;
            for (const Ranking& pi : inputs)
                if (pi.rank_of(a) < pi.rank_of(b)) ++before;
            if (before * den >= (den - 2 * num) * n) graph.out[a].push_back(b);
        }
    return graph;
}

void PrecedenceGraph::remove_short_cycles() {
    std::vector<int> parent(static_cast<size_t>(d));
    std::vector<char> seen(static_cast<size_t>(d));
    for (int v = 0; v < d; ++v) {
        if (removed[v]) continue;
        // Shortest cycle through v = shortest BFS path v ~> u over
        // surviving vertices such that the edge u -> v exists.  Neighbors
        // are explored in increasing id, so equal-length cycles resolve
        // deterministically toward smaller ids.
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<int> frontier;
        frontier.push(v);
        seen[v] = 1;
        int closing = -1;
        while (!frontier.empty() && closing == -1) {
            int u = frontier.front();
            frontier.pop();
            if (u != v &&
                std::binary_search(out[u].begin(), out[u].end(), v)) {
                closing = u;
                break;
            }
            for (int w : out[u]) {
                if (seen[w] || removed[w]) continue;
                seen[w] = 1;
                parent[w] = u;
                frontier.push(w);
            }
        }
        if (closing == -1) continue;  // v lies on no surviving cycle
        for (int u = closing; u != v; u = parent[u]) removed[u] = 1;
        removed[v] = 1;
    }
}

std::vector<int> PrecedenceGraph::surviving_topological_order() const {
    std::vector<int> indegree(static_cast<size_t>(d), 0);
    int survivors = 0;
    for (int a = 0; a < d; ++a) {
        if (removed[a]) continue;
        ++survivors;
        for (int b : out[a])
            if (!removed[b]) ++indegree[b];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < d; ++v)
        if (!removed[v] && indegree[v] == 0) ready.push(v);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(survivors));
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int w : out[v]) {
            if (removed[w]) continue;
            if (--indegree[w] == 0) ready.push(w);
        }
    }
    if (static_cast<int>(order.size()) != survivors)
        throw std::logic_error("precedence graph: cycle survived removal");
    return order;
}

std::vector<int> relative_order_sequence(const std::vector<Ranking>& inputs,
                                         const Rational& alpha) {
    PrecedenceGraph graph = PrecedenceGraph::build(inputs, alpha);
    graph.remove_short_cycles();
    return graph.surviving_topological_order();
}

std::optional<Ranking> relative_order_candidate(const std::vector<Ranking>& inputs,
                                                const GroupAssignment& groups,
                                                const FairnessSpec& spec, const Rational& alpha) {
    if (spec.mode != FairMode::StrictFair)
        throw std::invalid_argument("relative_order_candidate requires a strict fairness spec");
    spec.validate_for(groups);
    if (!inputs.empty() && inputs.front().size() != groups.dimension())
        throw std::invalid_argument("aggregate: rankings and groups disagree on the element count");

    std::vector<int> seq = relative_order_sequence(inputs, alpha);
    std::optional<CfrResult> res = cfr_ulam_strict(seq, groups, spec.alpha, spec.beta, spec.k);
    if (!res) return std::nullopt;
    return std::move(res->ranking);
}

}  // namespace fairrank
