#include <benchmark/benchmark.h>

#include <cstdlib>
#include <numeric>
#include <vector>

#include "fairrank/cfr.hpp"
#include "fairrank/fairness.hpp"
#include "fairrank/ranking.hpp"
#include "fairrank/rational.hpp"
#include "fairrank/rng.hpp"

namespace {

fairrank::Ranking shuffled(fairrank::Xorshift64Star& rng, int d) {
    std::vector<int> perm(static_cast<size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i) {
        const auto j = rng.below(static_cast<uint64_t>(i) + 1);
        std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    return fairrank::Ranking(perm);
}

// Two alternating groups with exactly pinned halves: feasible at every
// prefix, so the solvers run their full workload.
fairrank::GroupAssignment alternating_groups(int d) {
    std::vector<int> group_of(static_cast<size_t>(d));
    for (int e = 0; e < d; ++e) group_of[static_cast<size_t>(e)] = e % 2;
    return fairrank::GroupAssignment(std::move(group_of), 2);
}

const std::vector<fairrank::Rational> kHalf{fairrank::Rational(1, 2), fairrank::Rational(1, 2)};

}  // namespace

static void KendallKFairRepair(benchmark::State& state) {
    fairrank::Xorshift64Star rng(7);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking pi = shuffled(rng, d);
    const fairrank::GroupAssignment groups = alternating_groups(d);
    for (auto _ : state) {
        auto result = fairrank::cfr_kendall_kfair(pi, groups, kHalf, kHalf, d / 2);
        if (!result) std::abort();
        benchmark::DoNotOptimize(result->distance);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(KendallKFairRepair)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

static void KendallBlockFairRepair(benchmark::State& state) {
    fairrank::Xorshift64Star rng(7);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking pi = shuffled(rng, d);
    const fairrank::GroupAssignment groups = alternating_groups(d);
    for (auto _ : state) {
        auto result = fairrank::cfr_kendall_blockfair(pi, groups, kHalf, kHalf, 2, 2);
        if (!result) std::abort();
        benchmark::DoNotOptimize(result->distance);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(KendallBlockFairRepair)->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

static void UlamStrictRepair(benchmark::State& state) {
    fairrank::Xorshift64Star rng(7);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking pi = shuffled(rng, d);
    const fairrank::GroupAssignment groups = alternating_groups(d);
    std::vector<int> seq(static_cast<size_t>(d));
    for (int r = 0; r < d; ++r) seq[static_cast<size_t>(r)] = pi.at(r);
    for (auto _ : state) {
        auto result = fairrank::cfr_ulam_strict(seq, groups, kHalf, kHalf, 2);
        if (!result) std::abort();
        benchmark::DoNotOptimize(result->distance);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(UlamStrictRepair)->DenseRange(24, 96, 24)->Complexity();

BENCHMARK_MAIN();
