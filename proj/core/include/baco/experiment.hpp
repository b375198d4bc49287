#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "baco/ratio.hpp"
#include "baco/types.hpp"

namespace baco {

struct ExperimentConfig {
    Problem problem;
    std::vector<std::uint32_t> n_values;
    RatioRule ratio_rule;
    std::uint32_t reps = 20;
    std::uint64_t master_seed = 1;
    std::uint64_t max_iters = kDefaultMaxIterations;
};

/// Per-group statistics next to the analytically expected time. rel_error is
/// (mean - T)/T and is reported as NaN whenever any run in the group hit the
/// iteration cap (capped means are biased) or no analytic value exists.
struct ExperimentSummary {
    Problem problem;
    std::uint32_t n;
    double ratio;
    std::uint32_t reps;
    double mean_iterations;
    double stddev;
    double std_error;
    double analytic_time;
    double rel_error;
    std::uint32_t capped_runs;
};

/// Runs reps seeded simulations per problem size. Each run r at size n uses
/// the seed derive_run_seed(master_seed, n, r), so the records are identical
/// no matter how many threads execute them; they are returned sorted by
/// (n-list order, rep index).
std::vector<RunRecord> run_experiment(const ExperimentConfig &config, unsigned threads = 1);

/// Groups records by n (all must share a problem) and attaches the analytic
/// expected time, which may be NaN for groups without one. The standard
/// deviation is the unbiased (n-1) sample estimate; it is NaN for single-run
/// groups.
std::vector<ExperimentSummary> summarize(std::span<const RunRecord> records,
                                         const std::function<double(std::uint32_t)> &analytic);

/// Fraction of runs needing more than alpha times the expected time. By
/// Markov's inequality the underlying probability is at most 1/alpha.
double tail_fraction(std::span<const RunRecord> records, double analytic_time, double alpha);

} // namespace baco
