#pragma once

#include <cstdint>
#include <functional>

#include "baco/types.hpp"

namespace baco {

struct RunParams {
    Problem problem;
    std::uint32_t n;
    PheromoneRatio ratio;
    std::uint64_t seed;
    std::uint64_t max_iters = kDefaultMaxIterations;
};

/// Called after the initial construction (iteration 0) and after every loop
/// iteration with the best objective value so far.
using IterationObserver = std::function<void(std::uint64_t iteration, std::uint32_t best_value)>;

/// Runs the single-ant bivalent algorithm until the optimum (objective value
/// n) is constructed or max_iters loop iterations have passed.
///
/// The ant first builds a uniform random path, which immediately receives the
/// pheromone deposit, then iterates: walk, evaluate, replace the best and
/// redistribute pheromones only on strict improvement. The reported iteration
/// count excludes the initial construction.
RunRecord run_baco(const RunParams &params, const IterationObserver &observer = {});

RunRecord run_baco(Problem problem, std::uint32_t n, PheromoneRatio ratio, std::uint64_t seed,
                   std::uint64_t max_iters = kDefaultMaxIterations);

} // namespace baco
