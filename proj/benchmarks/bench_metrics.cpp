#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "fairrank/metrics.hpp"
#include "fairrank/ranking.hpp"
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

}  // namespace

static void KendallTau(benchmark::State& state) {
    fairrank::Xorshift64Star rng(42);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking a = shuffled(rng, d);
    const fairrank::Ranking b = shuffled(rng, d);
    for (auto _ : state) {
        long long dist = fairrank::kendall_tau(a, b);
        benchmark::DoNotOptimize(dist);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(KendallTau)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

static void SpearmanFootrule(benchmark::State& state) {
    fairrank::Xorshift64Star rng(42);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking a = shuffled(rng, d);
    const fairrank::Ranking b = shuffled(rng, d);
    for (auto _ : state) {
        long long dist = fairrank::spearman_footrule(a, b);
        benchmark::DoNotOptimize(dist);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(SpearmanFootrule)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oN);

static void Ulam(benchmark::State& state) {
    fairrank::Xorshift64Star rng(42);
    const int d = static_cast<int>(state.range());
    const fairrank::Ranking a = shuffled(rng, d);
    const fairrank::Ranking b = shuffled(rng, d);
    for (auto _ : state) {
        long long dist = fairrank::ulam(a, b);
        benchmark::DoNotOptimize(dist);
    }
    state.SetComplexityN(state.range());
}
BENCHMARK(Ulam)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Complexity(benchmark::oNLogN);

BENCHMARK_MAIN();
