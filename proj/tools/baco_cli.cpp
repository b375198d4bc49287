// Command line front end: exact expected-time evaluation, seeded simulation,
// simulation-vs-analytics comparison, and pheromone-ratio sweeps.
//
// Exit codes: 0 success, 1 acceptance-band failure, 2 usage error,
// 3 analytic precondition violation.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "baco/analytic.hpp"
#include "baco/csv.hpp"
#include "baco/engine.hpp"
#include "baco/experiment.hpp"
#include "baco/ratio.hpp"
#include "baco/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBandFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

baco::Problem parse_problem(const std::string &name) {
    const auto problem = baco::problem_from_string(name);
    if (!problem) throw UsageError("unknown problem '" + name + "'");
    return *problem;
}

// Accepts comma-separated items, each a single size N or a range A..B[:S].
std::vector<std::uint32_t> parse_n_list(const std::string &text) {
    std::vector<std::uint32_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw UsageError("empty entry in n list");
        std::uint32_t first = 0, last = 0, step = 1;
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                first = last = static_cast<std::uint32_t>(std::stoul(item));
            } else {
                first = static_cast<std::uint32_t>(std::stoul(item.substr(0, dots)));
                std::string rest = item.substr(dots + 2);
                const auto colon = rest.find(':');
                if (colon != std::string::npos) {
                    step = static_cast<std::uint32_t>(std::stoul(rest.substr(colon + 1)));
                    rest = rest.substr(0, colon);
                }
                last = static_cast<std::uint32_t>(std::stoul(rest));
            }
        } catch (const std::exception &) {
            throw UsageError("cannot parse n list entry '" + item + "'");
        }
        if (first == 0 || last < first || step == 0) {
            throw UsageError("bad n list entry '" + item + "'");
        }
        for (std::uint64_t n = first; n <= last; n += step) {
            values.push_back(static_cast<std::uint32_t>(n));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (values.empty()) throw UsageError("n list is empty");
    return values;
}

std::vector<std::uint32_t> default_n_list(baco::Problem problem) {
    const std::uint32_t top = problem == baco::Problem::Sorting ? 100 : 200;
    std::vector<std::uint32_t> values;
    for (std::uint32_t n = 5; n <= top; n += 5) values.push_back(n);
    return values;
}

std::uint32_t default_reps(baco::Problem problem) {
    return problem == baco::Problem::Sorting ? 40 : 20;
}

baco::RatioRule resolve_rule(const std::optional<std::string> &text, baco::Problem problem) {
    if (text) return baco::RatioRule::parse(*text);
    switch (problem) {
    case baco::Problem::Sorting:
        return baco::RatioRule::parse("1/n^2");
    default:
        return baco::RatioRule::parse("1/n");
    }
}

double analytic_time(baco::Problem problem, std::uint32_t n, baco::PheromoneRatio ratio) {
    return problem == baco::Problem::LeadingOnes
               ? baco::leading_ones_expected_time(n, ratio).value
               : baco::sorting_expected_time(n, ratio).value;
}

unsigned worker_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

int cmd_analytic(const std::string &problem_name, std::uint32_t n, const std::string &t_text,
                 const std::string &method_name, std::optional<std::uint64_t> horizon) {
    const auto problem = parse_problem(problem_name);
    const auto ratio = baco::RatioRule::parse(t_text).resolve_ratio(n);

    if (problem == baco::Problem::OneMax) {
        if (method_name != "bound") {
            throw UsageError("one-max supports only --method bound");
        }
        std::printf("%.12g bound\n", baco::one_max_time_upper_bound(n, ratio));
        return kExitOk;
    }
    if (method_name == "bound") {
        throw UsageError("--method bound applies to one-max only");
    }
    const auto method = baco::method_from_string(method_name);
    if (!method) throw UsageError("unknown method '" + method_name + "'");
    const auto result = baco::evaluate_expected_time(problem, n, ratio, *method, horizon);
    std::printf("%.12g %s\n", result.value, std::string(baco::to_string(result.method)).c_str());
    return kExitOk;
}

int cmd_simulate(const std::string &problem_name, const std::optional<std::string> &n_text,
                 const std::optional<std::string> &t_text, std::optional<std::uint32_t> reps,
                 std::uint64_t seed, std::uint64_t max_iters, const std::string &out) {
    const auto problem = parse_problem(problem_name);
    baco::ExperimentConfig config{problem,
                                  n_text ? parse_n_list(*n_text) : default_n_list(problem),
                                  resolve_rule(t_text, problem),
                                  reps ? *reps : default_reps(problem),
                                  seed,
                                  max_iters};
    const auto records = baco::run_experiment(config, worker_threads());
    baco::write_records_csv(records, out);
    std::size_t capped = 0;
    for (const auto &r : records) capped += r.hit_max_iters ? 1 : 0;
    std::printf("wrote %zu records to %s (%zu capped)\n", records.size(), out.c_str(), capped);
    return kExitOk;
}

int cmd_compare(const std::string &problem_name, const std::optional<std::string> &n_text,
                const std::optional<std::string> &t_text, std::optional<std::uint32_t> reps,
                std::uint64_t seed, const std::string &out) {
    const auto problem = parse_problem(problem_name);
    if (problem == baco::Problem::OneMax) {
        throw UsageError("compare needs an exact expected time; one-max has only a bound");
    }
    baco::ExperimentConfig config{problem,
                                  n_text ? parse_n_list(*n_text) : default_n_list(problem),
                                  resolve_rule(t_text, problem),
                                  reps ? *reps : default_reps(problem),
                                  seed,
                                  baco::kDefaultMaxIterations};
    if (config.reps < 2) throw UsageError("compare needs at least 2 repetitions");

    const auto records = baco::run_experiment(config, worker_threads());
    const auto rule = config.ratio_rule;
    const auto summaries = baco::summarize(records, [&](std::uint32_t n) {
        return analytic_time(problem, n, rule.resolve_ratio(n));
    });
    baco::write_summaries_csv(summaries, out + ".summary.csv");
    baco::write_plot_data(records, summaries, out + ".plot.csv");

    bool all_within_band = true;
    for (const auto &s : summaries) {
        const double gap = std::fabs(s.mean_iterations - s.analytic_time);
        const bool ok = s.capped_runs == 0 && gap <= 3.0 * s.std_error;
        all_within_band = all_within_band && ok;
        std::printf("n=%" PRIu32 " t=%.6g reps=%" PRIu32 " mean=%.6g analytic=%.6g "
                    "stderr=%.4g capped=%" PRIu32 " %s\n",
                    s.n, s.ratio, s.reps, s.mean_iterations, s.analytic_time, s.std_error,
                    s.capped_runs, ok ? "ok" : "OUTSIDE-3-STDERR-BAND");
    }
    return all_within_band ? kExitOk : kExitBandFailure;
}

int cmd_sweep(const std::string &problem_name, std::uint32_t n, const std::string &t_list,
              const std::string &method_name) {
    const auto problem = parse_problem(problem_name);

    std::vector<std::string> expressions;
    std::size_t pos = 0;
    while (pos <= t_list.size()) {
        const std::size_t comma = t_list.find(',', pos);
        expressions.push_back(t_list.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    std::printf("t,T\n");
    for (const auto &expression : expressions) {
        const auto ratio = baco::RatioRule::parse(expression).resolve_ratio(n);
        double value;
        if (problem == baco::Problem::OneMax) {
            if (method_name != "bound") throw UsageError("one-max supports only --method bound");
            value = baco::one_max_time_upper_bound(n, ratio);
        } else {
            if (method_name == "bound") throw UsageError("--method bound applies to one-max only");
            const auto method = baco::method_from_string(method_name);
            if (!method) throw UsageError("unknown method '" + method_name + "'");
            value = baco::evaluate_expected_time(problem, n, ratio, *method).value;
        }
        std::printf("%.17g,%.12g\n", ratio.value(), value);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bivalent ant colony optimization: simulation and exact expected-time analytics"};
    app.require_subcommand(1);

    std::string problem_name, t_text, method_name = "closed", out, t_list;
    std::optional<std::string> n_list_text, t_optional;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> reps;
    std::optional<std::uint64_t> horizon;
    std::uint64_t seed = 1;
    std::uint64_t max_iters = baco::kDefaultMaxIterations;

    auto *analytic = app.add_subcommand("analytic", "Expected optimization time of one instance");
    analytic->add_option("--problem", problem_name, "leadingones|onemax|sorting")->required();
    analytic->add_option("--n", n, "problem size")->required();
    analytic->add_option("--t", t_text, "pheromone ratio: FLOAT, FLOAT/n or FLOAT/n^FLOAT")
        ->required();
    analytic->add_option("--method", method_name,
                         "closed|matrix|explicit|truncated (onemax: bound)");
    analytic->add_option("--horizon", horizon,
                         "steps for --method truncated (default: 100x closed form)");

    auto *simulate = app.add_subcommand("simulate", "Seeded simulation batch, records CSV");
    simulate->add_option("--problem", problem_name, "leadingones|onemax|sorting")->required();
    simulate->add_option("--n-list", n_list_text, "sizes: N, A..B or A..B:S, comma separated");
    simulate->add_option("--t", t_optional, "pheromone ratio rule (default: 1/n, sorting 1/n^2)");
    simulate->add_option("--reps", reps, "repetitions per size (default 20, sorting 40)");
    simulate->add_option("--seed", seed, "master seed (default 1)");
    simulate->add_option("--max-iters", max_iters, "iteration cap per run");
    simulate->add_option("--out", out, "records CSV path")->required();

    auto *compare = app.add_subcommand(
        "compare", "Simulate, summarize against analytic times, write summary + plot data");
    compare->add_option("--problem", problem_name, "leadingones|sorting")->required();
    compare->add_option("--n-list", n_list_text, "sizes: N, A..B or A..B:S, comma separated");
    compare->add_option("--t", t_optional, "pheromone ratio rule");
    compare->add_option("--reps", reps, "repetitions per size");
    compare->add_option("--seed", seed, "master seed (default 1)");
    compare->add_option("--out", out, "output stem; writes <stem>.summary.csv and <stem>.plot.csv")
        ->required();

    auto *sweep = app.add_subcommand("sweep", "Expected time across pheromone ratios");
    sweep->add_option("--problem", problem_name, "leadingones|onemax|sorting")->required();
    sweep->add_option("--n", n, "problem size")->required();
    sweep->add_option("--t-list", t_list, "comma separated ratio expressions")->required();
    sweep->add_option("--method", method_name, "closed|matrix|explicit (onemax: bound)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (analytic->parsed()) return cmd_analytic(problem_name, n, t_text, method_name, horizon);
        if (simulate->parsed())
            return cmd_simulate(problem_name, n_list_text, t_optional, reps, seed, max_iters, out);
        if (compare->parsed())
            return cmd_compare(problem_name, n_list_text, t_optional, reps, seed, out);
        if (sweep->parsed()) return cmd_sweep(problem_name, n, t_list, method_name);
        std::fprintf(stderr, "no subcommand given\n");
        return kExitUsage;
    } catch (const baco::RowRatioViolation &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const baco::DegenerateChainError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitPrecondition;
    } catch (const UsageError &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
}
