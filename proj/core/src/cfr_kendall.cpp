#include <cassert>
#include <stdexcept>

#include "fairrank/cfr.hpp"

namespace fairrank {

namespace {

struct GreedyScratch {
    std::vector<char> in_prefix;
    std::vector<long long> lower, upper, count;
    std::vector<int> rearranged;
};

void validate_quotas(const GroupAssignment& groups, const std::vector<Rational>& alpha,
                     const std::vector<Rational>& beta) {
    if (static_cast<int>(alpha.size()) != groups.num_groups() || alpha.size() != beta.size())
        throw std::invalid_argument("cfr: quota count differs from group count");
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] > beta[i]) throw std::invalid_argument("cfr: alpha exceeds beta");
}

// One greedy pass making the p-prefix of `order` satisfy
// floor(alpha_i * p) <= |prefix ∩ G_i| <= ceil(beta_i * p), keeping the
// relative order of elements inside and outside the prefix.  Returns false
// when the quota bounds cannot be met at this prefix length.
bool greedy_round(std::vector<int>& order, const GroupAssignment& groups,
                  const std::vector<Rational>& alpha, const std::vector<Rational>& beta, int p,
                  GreedyScratch& s) {
    const int d = static_cast<int>(order.size());
    const int g = groups.num_groups();

    s.lower.resize(g);
    s.upper.resize(g);
    s.count.assign(g, 0);
    s.in_prefix.assign(d, 0);

    long long lower_sum = 0;
    for (int i = 0; i < g; ++i) {
        s.lower[i] = alpha[i].floor_mul(p);
        s.upper[i] = beta[i].ceil_mul(p);
        lower_sum += s.lower[i];
    }
    if (lower_sum > p) return false;  // the lower quotas alone overflow the prefix

    // Phase 1: the floor(alpha_i * p) best-ranked elements of each group.
    int taken = 0;
    for (int r = 0; r < d && taken < p; ++r) {
        int e = order[r];
        int z = groups.group_of(e);
        if (s.count[z] < s.lower[z]) {
            s.in_prefix[e] = 1;
            ++s.count[z];
            ++taken;
        }
    }
    // Phase 2: fill up to p with the best-ranked remaining elements whose
    // group has room under its cap.
    for (int r = 0; r < d && taken < p; ++r) {
        int e = order[r];
        if (s.in_prefix[e]) continue;
        int z = groups.group_of(e);
        if (s.count[z] < s.upper[z]) {
            s.in_prefix[e] = 1;
            ++s.count[z];
            ++taken;
        }
    }

    // Post-check: the prefix is full and every lower quota is met (a group
    // smaller than its quota shows up here).  Caps hold by construction.
    if (taken < p) return false;
    for (int i = 0; i < g; ++i)
        if (s.count[i] < s.lower[i]) return false;

    s.rearranged.clear();
    s.rearranged.reserve(d);
    for (int r = 0; r < d; ++r)
        if (s.in_prefix[order[r]]) s.rearranged.push_back(order[r]);
    for (int r = 0; r < d; ++r)
        if (!s.in_prefix[order[r]]) s.rearranged.push_back(order[r]);
    order.swap(s.rearranged);
    return true;
}

}  // namespace

std::optional<CfrResult> cfr_kendall_kfair(const Ranking& pi, const GroupAssignment& groups,
                                           const std::vector<Rational>& alpha,
                                           const std::vector<Rational>& beta, int k) {
    if (pi.size() != groups.dimension())
        throw std::invalid_argument("cfr: ranking and groups disagree on the element count");
    validate_quotas(groups, alpha, beta);
    if (k < 1 || k > pi.size()) throw std::invalid_argument("cfr: k out of range");

    std::vector<int> order = pi.perm();
    GreedyScratch scratch;
    if (!greedy_round(order, groups, alpha, beta, k, scratch)) return std::nullopt;

    Ranking sigma(std::move(order));
    FairnessSpec spec(alpha, beta, k, FairMode::KFair);
    if (!check_fair(sigma, groups, spec)) return std::nullopt;
    assert(preserves_relative_group_order(pi, sigma, groups));
    long long dist = kendall_tau(pi, sigma);
    return CfrResult{std::move(sigma), dist};
}

std::optional<CfrResult> cfr_kendall_blockfair(const Ranking& pi, const GroupAssignment& groups,
                                               const std::vector<Rational>& alpha,
                                               const std::vector<Rational>& beta, int k,
                                               int block) {
    if (pi.size() != groups.dimension())
        throw std::invalid_argument("cfr: ranking and groups disagree on the element count");
    validate_quotas(groups, alpha, beta);
    const int d = pi.size();
    if (k < 1 || k > d) throw std::invalid_argument("cfr: k out of range");
    // Validates block range and the integrality of block * alpha_i, block * beta_i.
    FairnessSpec spec(alpha, beta, k, FairMode::BlockFair, block);
    spec.validate_for(groups);

    // Repair prefixes from the longest constrained block multiple downward;
    // each later (shorter) round permutes only inside the current prefix, so
    // already-repaired longer prefixes keep their element sets.
    std::vector<int> order = pi.perm();
    GreedyScratch scratch;
    for (int p = d / block * block; p >= k; p -= block)
        if (!greedy_round(order, groups, alpha, beta, p, scratch)) return std::nullopt;

    Ranking sigma(std::move(order));
    if (!check_fair(sigma, groups, spec)) return std::nullopt;
    assert(preserves_relative_group_order(pi, sigma, groups));
    long long dist = kendall_tau(pi, sigma);
    return CfrResult{std::move(sigma), dist};
}

std::optional<CfrResult> closest_fair_ranking(const Ranking& pi, const GroupAssignment& groups,
                                              const FairnessSpec& spec, Metric metric) {
    spec.validate_for(groups);
    if (metric == Metric::KendallTau && spec.mode == FairMode::KFair)
        return cfr_kendall_kfair(pi, groups, spec.alpha, spec.beta, spec.k);
    if (metric == Metric::KendallTau && spec.mode == FairMode::BlockFair)
        return cfr_kendall_blockfair(pi, groups, spec.alpha, spec.beta, spec.k, spec.block);
    if (metric == Metric::Ulam && spec.mode == FairMode::StrictFair)
        return cfr_ulam_strict(pi.perm(), groups, spec.alpha, spec.beta, spec.k);
    throw std::invalid_argument("cfr: no exact solver for metric '" + to_string(metric) +
                                "' with mode '" + to_string(spec.mode) + "'");
}

bool preserves_relative_group_order(const Ranking& input, const Ranking& output,
                                    const GroupAssignment& groups) {
    if (input.size() != output.size() || input.size() != groups.dimension()) return false;
    // Within each group, the output must list members in input order.
    std::vector<int> last_input_rank(static_cast<size_t>(groups.num_groups()), -1);
    for (int r = 0; r < output.size(); ++r) {
        int e = output.at(r);
        int z = groups.group_of(e);
        if (input.rank_of(e) < last_input_rank[z]) return false;
        last_input_rank[z] = input.rank_of(e);
    }
    return true;
}

}  // namespace fairrank
