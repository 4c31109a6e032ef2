// Shared helpers for the test binaries: deterministic random instances,
// possibly-infeasible fairness specs (the generator screens those out, the
// tests must not), and an independent from-scratch fairness checker.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "fairrank/fairness.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rational.hpp"
#include "fairrank/rng.hpp"

namespace testutil {

inline fairrank::Ranking random_ranking(fairrank::Xorshift64Star& rng, int d) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return fairrank::Ranking(std::move(perm));
}

// Random assignment with every group nonempty (elements 0..g-1 pinned).
inline fairrank::GroupAssignment random_groups(fairrank::Xorshift64Star& rng, int d, int g) {
    std::vector<int> group_of(static_cast<size_t>(d));
    for (int e = 0; e < d; ++e)
        group_of[e] = e < g ? e : static_cast<int>(rng.below(static_cast<uint64_t>(g)));
    return fairrank::GroupAssignment(std::move(group_of), g);
}

// Random quotas with alpha <= beta per group but no feasibility screening:
// infeasible draws are wanted, to exercise verdict agreement with oracles.
// For BlockFair the denominators equal the block length, keeping b*alpha_i
// and b*beta_i integral.
inline fairrank::FairnessSpec draw_spec(fairrank::Xorshift64Star& rng, int d, int g,
                                        int denominator_cap, fairrank::FairMode mode,
                                        int block = 0) {
    using fairrank::Rational;
    if (mode == fairrank::FairMode::BlockFair && block == 0)
        block = std::min(d, 2 + static_cast<int>(rng.below(2)));  // b in {2, 3}, capped at d
    std::vector<Rational> alpha, beta;
    for (int z = 0; z < g; ++z) {
        const long long den =
            mode == fairrank::FairMode::BlockFair
                ? block
                : 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(denominator_cap)));
        const long long a = static_cast<long long>(rng.below(static_cast<uint64_t>(den + 1)));
        const long long b = a + static_cast<long long>(rng.below(static_cast<uint64_t>(den - a + 1)));
        alpha.emplace_back(a, den);
        beta.emplace_back(b, den);
    }
    const int k = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(d)));
    return fairrank::FairnessSpec(std::move(alpha), std::move(beta), k, mode, block);
}

// Reference fairness checker that rebuilds every prefix count from scratch,
// O(d^2 g); deliberately shares no code with the library's single pass.
inline bool naive_check_fair(const fairrank::Ranking& r, const fairrank::GroupAssignment& groups,
                             const fairrank::FairnessSpec& spec) {
    using fairrank::FairMode;
    const int d = r.size();
    const int g = groups.num_groups();
    auto counts_at = [&](int p) {
        std::vector<long long> counts(static_cast<size_t>(g), 0);
        for (int rank = 0; rank < p; ++rank) ++counts[static_cast<size_t>(groups.group_of(r.at(rank)))];
        return counts;
    };
    if (spec.mode == FairMode::KFair) {
        const auto counts = counts_at(spec.k);
        for (int z = 0; z < g; ++z)
            if (counts[z] < spec.alpha[z].floor_mul(spec.k) || counts[z] > spec.beta[z].ceil_mul(spec.k))
                return false;
        return true;
    }
    for (int p = spec.k; p <= d; ++p) {
        if (spec.mode == FairMode::BlockFair && p % spec.block != 0) continue;
        const auto counts = counts_at(p);
        for (int z = 0; z < g; ++z) {
            if (spec.mode == FairMode::BlockFair) {
                // Exact alpha_z * p <= count <= beta_z * p; both products are
                // integers at block multiples.
                if (spec.alpha[z].compare_mul(p, counts[z]) > 0) return false;
                if (spec.beta[z].compare_mul(p, counts[z]) < 0) return false;
            } else {
                if (counts[z] < spec.alpha[z].floor_mul(p) || counts[z] > spec.beta[z].ceil_mul(p))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace testutil
