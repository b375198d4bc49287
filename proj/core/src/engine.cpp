#include "baco/engine.hpp"

#include <stdexcept>
#include <utility>

#include "baco/objectives.hpp"
#include "baco/pheromones.hpp"
#include "baco/rng.hpp"

namespace baco {

namespace {

template <typename State, typename Walk, typename Objective>
RunRecord run_loop(const RunParams &params, State state, Walk walk, Objective objective,
                   const IterationObserver &observer) {
    RandomSource rng(params.seed);
    const std::uint32_t target = optimal_value(params.n);

    auto best = walk(state, params.ratio, rng);
    std::uint32_t best_value = objective(best);
    state.deposit(std::move(best));
    if (observer) observer(0, best_value);

    RunRecord record{params.problem, params.n,    params.ratio.value(),
                     params.seed,    /*iterations=*/0, /*hit_max_iters=*/false};
    if (best_value == target) return record;

    while (record.iterations < params.max_iters) {
        ++record.iterations;
        auto candidate = walk(state, params.ratio, rng);
        const std::uint32_t value = objective(candidate);
        if (value > best_value) {
            best_value = value;
            state.deposit(std::move(candidate));
        }
        if (observer) observer(record.iterations, best_value);
        if (best_value == target) return record;
    }
    record.hit_max_iters = true;
    return record;
}

} // namespace

RunRecord run_baco(const RunParams &params, const IterationObserver &observer) {
    if (params.n == 0) throw std::invalid_argument("problem size must be at least 1");

    switch (params.problem) {
    case Problem::LeadingOnes:
        return run_loop(
            params, ChainPheromones(params.n),
            [](const ChainPheromones &s, PheromoneRatio t, RandomSource &r) {
                return chain_walk(s, t, r);
            },
            [](const BitString &x) { return leading_ones(x); }, observer);
    case Problem::OneMax:
        return run_loop(
            params, ChainPheromones(params.n),
            [](const ChainPheromones &s, PheromoneRatio t, RandomSource &r) {
                return chain_walk(s, t, r);
            },
            [](const BitString &x) { return one_max(x); }, observer);
    case Problem::Sorting:
        return run_loop(
            params, PermutationPheromones(params.n),
            [](const PermutationPheromones &s, PheromoneRatio t, RandomSource &r) {
                return permutation_walk(s, t, r);
            },
            [](const Permutation &x) { return final_position_prefix(x); }, observer);
    }
    throw std::invalid_argument("unknown problem");
}

RunRecord run_baco(Problem problem, std::uint32_t n, PheromoneRatio ratio, std::uint64_t seed,
                   std::uint64_t max_iters) {
    return run_baco(RunParams{problem, n, ratio, seed, max_iters});
}

} // namespace baco
