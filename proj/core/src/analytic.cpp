#include "baco/analytic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>

namespace baco {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// log(sum(exp(v))) without leaving log space.
double log_sum_exp(const std::vector<double> &logs) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : logs) peak = std::max(peak, v);
    if (!std::isfinite(peak)) return peak;
    double acc = 0.0;
    for (double v : logs) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

} // namespace

std::string_view to_string(Method method) {
    switch (method) {
    case Method::Matrix:
        return "matrix";
    case Method::Explicit:
        return "explicit";
    case Method::ClosedForm:
        return "closed";
    case Method::TruncatedSum:
        return "truncated";
    }
    return "unknown";
}

std::optional<Method> method_from_string(std::string_view name) {
    if (name == "matrix") return Method::Matrix;
    if (name == "explicit") return Method::Explicit;
    if (name == "closed") return Method::ClosedForm;
    if (name == "truncated") return Method::TruncatedSum;
    return std::nullopt;
}

ChainModel build_chain_model(Problem problem, std::size_t n, PheromoneRatio ratio) {
    switch (problem) {
    case Problem::LeadingOnes:
        return {leading_ones_initial_distribution<double>(n),
                leading_ones_transition_matrix<double>(n, ratio.value())};
    case Problem::Sorting:
        return {sorting_initial_distribution<double>(n),
                sorting_transition_matrix<double>(n, ratio.value())};
    case Problem::OneMax:
        throw std::invalid_argument(
            "one-max has no exact chain model; only the upper bound is available");
    }
    throw std::invalid_argument("unknown problem");
}

AnalyticResult expected_time_matrix(const std::vector<double> &p, const Matrix<double> &m) {
    return {expected_time_matrix_value(p, m), Method::Matrix};
}

AnalyticResult expected_time_explicit(const std::vector<double> &p, const Matrix<double> &m) {
    return {expected_time_explicit_value(p, m, kRowRatioTolerance), Method::Explicit};
}

AnalyticResult truncated_expected_time(const std::vector<double> &p, const Matrix<double> &m,
                                       std::uint64_t horizon) {
    return {truncated_expected_time_value(p, m, horizon), Method::TruncatedSum};
}

AnalyticResult leading_ones_expected_time(std::size_t n, PheromoneRatio ratio) {
    if (n < 1) throw std::invalid_argument("leading-ones needs n >= 1");
    const double t = ratio.value();
    const double growth = std::expm1(static_cast<double>(n) * std::log1p(t)); // (1+t)^n - 1
    return {(1.0 + t) / (2.0 * t * t) * growth, Method::ClosedForm};
}

AnalyticResult sorting_expected_time(std::size_t n, PheromoneRatio ratio) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    const double t = ratio.value();

    // suffix_log[k] = log prod_{r=k..n-1} (1 + r t), k in 1..n-1
    std::vector<double> suffix_log(n, 0.0);
    for (std::size_t k = n; k-- > 1;) {
        suffix_log[k] = (k + 1 < n ? suffix_log[k + 1] : 0.0) +
                        std::log1p(static_cast<double>(k) * t);
    }

    double log_factorial = 0.0; // log i!, updated incrementally
    std::vector<double> outer; // log of each outer summand, scaled by 1/(t n!) at the end
    std::vector<double> inner;
    inner.reserve(n);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        log_factorial += std::log(static_cast<double>(i));
        inner.clear();
        inner.push_back(suffix_log[i]);
        for (std::size_t k = 1; k < i; ++k) {
            inner.push_back(std::log(static_cast<double>(k) / static_cast<double>(k + 1)) +
                            suffix_log[k]);
        }
        outer.push_back(std::log(static_cast<double>(i)) + log_factorial + log_sum_exp(inner));
    }
    const double log_n_factorial = log_factorial + std::log(static_cast<double>(n));

    const double log_total = log_sum_exp(outer) - std::log(t) - log_n_factorial;
    return {std::exp(log_total), Method::ClosedForm};
}

double sorting_inverse_column_constant(std::size_t n, PheromoneRatio ratio, std::size_t j) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    if (j < 1 || j > n - 2) throw std::invalid_argument("column index must be in 1..n-2");
    const double t = ratio.value();
    double log_prod = 0.0;
    for (std::size_t k = 1; k <= j + 1; ++k) {
        log_prod += std::log1p(static_cast<double>(n - k) * t);
    }
    const double lead = static_cast<double>(n - j - 1) / static_cast<double>(n - j);
    return lead * std::exp(log_prod - std::log(t));
}

std::pair<double, double> sorting_time_bounds(std::size_t n, PheromoneRatio ratio) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    const double t = ratio.value();
    const double lower = static_cast<double>(n - 2) / (2.0 * t);
    const double upper = std::exp(std::log(static_cast<double>(n)) - std::log(t) +
                                  static_cast<double>(n) *
                                      std::log1p(static_cast<double>(n) * t));
    return {lower, upper};
}

double one_max_time_upper_bound(std::size_t n, PheromoneRatio ratio) {
    if (n < 1) throw std::invalid_argument("one-max needs n >= 1");
    const double t = ratio.value();
    return std::exp(static_cast<double>(n) * std::log1p(t) - std::log(t)) *
           (1.0 + std::log(static_cast<double>(n)));
}

double optimal_pheromone_ratio(Problem problem, std::size_t n) {
    if (n < 1) throw std::invalid_argument("problem size must be at least 1");
    const double nn = static_cast<double>(n);
    switch (problem) {
    case Problem::LeadingOnes:
        return 1.0 / nn;
    case Problem::Sorting:
        return 1.0 / (nn * nn);
    case Problem::OneMax:
        throw std::invalid_argument(
            "no optimal ratio is established for one-max; 1/n is only a default");
    }
    throw std::invalid_argument("unknown problem");
}

double default_pheromone_ratio(Problem problem, std::size_t n) {
    if (problem == Problem::OneMax) return 1.0 / static_cast<double>(n);
    return optimal_pheromone_ratio(problem, n);
}

bool factorial_sum_identities_hold(std::size_t n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BigInt weighted_sq(0), weighted(0), factorial_sum(0);
    BigInt factorial(1);
    for (std::size_t i = 1; i <= n - 1 && n >= 2; ++i) {
        factorial *= static_cast<unsigned>(i);
        weighted_sq += BigInt(i) * BigInt(i) * factorial;
        weighted += BigInt(i) * factorial;
        factorial_sum += factorial;
    }
    BigInt n_factorial = factorial * static_cast<unsigned>(n); // n! (factorial holds (n-1)!)
    const bool square_identity = weighted_sq == BigInt(n - 1) * n_factorial - factorial_sum;
    const bool linear_identity = weighted == n_factorial - 1;
    return square_identity && linear_identity;
}

AnalyticResult evaluate_expected_time(Problem problem, std::size_t n, PheromoneRatio ratio,
                                      Method method, std::optional<std::uint64_t> horizon) {
    if (problem == Problem::OneMax) {
        throw std::invalid_argument(
            "one-max supports only the upper bound, not exact expected-time evaluation");
    }
    if (method == Method::ClosedForm) {
        return problem == Problem::LeadingOnes ? leading_ones_expected_time(n, ratio)
                                               : sorting_expected_time(n, ratio);
    }
    const auto model = build_chain_model(problem, n, ratio);
    switch (method) {
    case Method::Matrix:
        return expected_time_matrix(model.initial, model.transitions);
    case Method::Explicit:
        return expected_time_explicit(model.initial, model.transitions);
    case Method::TruncatedSum: {
        std::uint64_t steps;
        if (horizon) {
            steps = *horizon;
        } else {
            const double closed = (problem == Problem::LeadingOnes
                                       ? leading_ones_expected_time(n, ratio)
                                       : sorting_expected_time(n, ratio))
                                      .value;
            steps = static_cast<std::uint64_t>(std::ceil(100.0 * closed));
        }
        return truncated_expected_time(model.initial, model.transitions, steps);
    }
    default:
        throw std::invalid_argument("unknown method");
    }
}

} // namespace baco
