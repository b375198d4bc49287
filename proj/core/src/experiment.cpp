#include "baco/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "baco/engine.hpp"
#include "baco/rng.hpp"

namespace baco {

std::vector<RunRecord> run_experiment(const ExperimentConfig &config, unsigned threads) {
    if (config.reps < 1) throw std::invalid_argument("reps must be at least 1");
    if (config.n_values.empty()) throw std::invalid_argument("no problem sizes given");

    struct Job {
        std::uint32_t n;
        double ratio;
        std::uint32_t rep;
    };
    std::vector<Job> jobs;
    jobs.reserve(config.n_values.size() * config.reps);
    for (const auto n : config.n_values) {
        const double ratio = config.ratio_rule.resolve(n); // may throw before any run starts
        for (std::uint32_t rep = 0; rep < config.reps; ++rep) jobs.push_back({n, ratio, rep});
    }

    std::vector<RunRecord> records(jobs.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Job &job = jobs[k];
            records[k] = run_baco(RunParams{config.problem, job.n, PheromoneRatio(job.ratio),
                                            derive_run_seed(config.master_seed, job.n, job.rep),
                                            config.max_iters});
        }
    };

    const unsigned worker_count =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    if (worker_count == 1) {
        work(0, jobs.size());
        return records;
    }
    std::vector<std::thread> workers;
    const std::size_t chunk = (jobs.size() + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(jobs.size(), begin + chunk);
        if (begin >= end) break;
        workers.emplace_back(work, begin, end);
    }
    for (auto &worker : workers) worker.join();
    return records;
}

std::vector<ExperimentSummary> summarize(std::span<const RunRecord> records,
                                         const std::function<double(std::uint32_t)> &analytic) {
    if (records.empty()) throw std::invalid_argument("cannot summarize zero records");
    const Problem problem = records.front().problem;

    // Group by n in first-seen order.
    std::vector<std::vector<const RunRecord *>> groups;
    std::vector<std::uint32_t> group_n;
    for (const RunRecord &record : records) {
        if (record.problem != problem) {
            throw std::invalid_argument("records mix problems; summarize one problem at a time");
        }
        auto it = std::find(group_n.begin(), group_n.end(), record.n);
        if (it == group_n.end()) {
            group_n.push_back(record.n);
            groups.emplace_back();
            it = group_n.end() - 1;
        }
        groups[static_cast<std::size_t>(it - group_n.begin())].push_back(&record);
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ExperimentSummary> summaries;
    summaries.reserve(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto &group = groups[g];
        const auto reps = static_cast<std::uint32_t>(group.size());

        double mean = 0.0;
        std::uint32_t capped = 0;
        for (const RunRecord *record : group) {
            mean += static_cast<double>(record->iterations);
            capped += record->hit_max_iters ? 1 : 0;
        }
        mean /= static_cast<double>(reps);

        double stddev = nan;
        if (reps >= 2) {
            double squares = 0.0;
            for (const RunRecord *record : group) {
                const double d = static_cast<double>(record->iterations) - mean;
                squares += d * d;
            }
            stddev = std::sqrt(squares / static_cast<double>(reps - 1));
        }
        const double std_error = stddev / std::sqrt(static_cast<double>(reps));

        const double expected = analytic ? analytic(group_n[g]) : nan;
        const bool usable = capped == 0 && std::isfinite(expected) && expected != 0.0;
        summaries.push_back({problem, group_n[g], group.front()->ratio, reps, mean, stddev,
                             std_error, expected,
                             usable ? (mean - expected) / expected : nan, capped});
    }
    return summaries;
}

double tail_fraction(std::span<const RunRecord> records, double analytic_time, double alpha) {
    if (records.empty()) throw std::invalid_argument("no records");
    if (!(alpha > 1.0)) throw std::invalid_argument("alpha must exceed 1");
    std::size_t over = 0;
    for (const RunRecord &record : records) {
        if (static_cast<double>(record.iterations) > alpha * analytic_time) ++over;
    }
    return static_cast<double>(over) / static_cast<double>(records.size());
}

} // namespace baco
