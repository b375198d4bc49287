#include <benchmark/benchmark.h>

#include "baco/engine.hpp"
#include "baco/pheromones.hpp"
#include "baco/rng.hpp"

using namespace baco;

namespace {

void ChainWalk(benchmark::State &state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    ChainPheromones pheromones(n);
    pheromones.deposit(BitString(n, 1));
    RandomSource rng(1);
    const PheromoneRatio ratio(1.0 / static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(chain_walk(pheromones, ratio, rng));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(ChainWalk)->Arg(50)->Arg(200);

void PermutationWalk(benchmark::State &state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    PermutationPheromones pheromones(n);
    Permutation best(n);
    for (std::uint32_t i = 0; i < n; ++i) best[i] = i;
    pheromones.deposit(best);
    RandomSource rng(1);
    const PheromoneRatio ratio(1.0 / (static_cast<double>(n) * static_cast<double>(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(permutation_walk(pheromones, ratio, rng));
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(PermutationWalk)->Arg(20)->Arg(100);

void FullRunLeadingOnes(benchmark::State &state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_baco(Problem::LeadingOnes, n, PheromoneRatio(1.0 / n), ++seed));
    }
}
BENCHMARK(FullRunLeadingOnes)->Arg(20)->Arg(50);

void FullRunSorting(benchmark::State &state) {
    const auto n = static_cast<std::uint32_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_baco(Problem::Sorting, n, PheromoneRatio(1.0 / (n * double(n))),
                                          ++seed));
    }
}
BENCHMARK(FullRunSorting)->Arg(10)->Arg(20);

} // namespace
