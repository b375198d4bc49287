#include <benchmark/benchmark.h>

#include "baco/analytic.hpp"

using namespace baco;

namespace {

void ExpectedTimeMatrix(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PheromoneRatio ratio(1.0 / static_cast<double>(n));
    const auto model = build_chain_model(Problem::LeadingOnes, n, ratio);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_time_matrix(model.initial, model.transitions).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ExpectedTimeMatrix)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void ExpectedTimeExplicit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PheromoneRatio ratio(1.0 / static_cast<double>(n));
    const auto model = build_chain_model(Problem::LeadingOnes, n, ratio);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expected_time_explicit(model.initial, model.transitions).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(ExpectedTimeExplicit)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void LeadingOnesClosedForm(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PheromoneRatio ratio(1.0 / static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(leading_ones_expected_time(n, ratio).value);
    }
}
BENCHMARK(LeadingOnesClosedForm)->Arg(50)->Arg(500);

void SortingClosedForm(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PheromoneRatio ratio(1.0 / (static_cast<double>(n) * static_cast<double>(n)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sorting_expected_time(n, ratio).value);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SortingClosedForm)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void SortingMatrixBuild(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double t = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sorting_transition_matrix<double>(n, t));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(SortingMatrixBuild)->RangeMultiplier(2)->Range(8, 256)->Complexity();

} // namespace
