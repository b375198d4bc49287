#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "baco/markov.hpp"
#include "baco/types.hpp"

namespace baco {

enum class Method { Matrix, Explicit, ClosedForm, TruncatedSum };

std::string_view to_string(Method method);
std::optional<Method> method_from_string(std::string_view name);

struct AnalyticResult {
    double value;
    Method method;
};

/// Initial distribution and transition matrix for a problem with an exact
/// chain model (leading-ones or sorting); throws for one-max.
struct ChainModel {
    std::vector<double> initial;
    Matrix<double> transitions;
};
ChainModel build_chain_model(Problem problem, std::size_t n, PheromoneRatio ratio);

AnalyticResult expected_time_matrix(const std::vector<double> &p, const Matrix<double> &m);
AnalyticResult expected_time_explicit(const std::vector<double> &p, const Matrix<double> &m);
AnalyticResult truncated_expected_time(const std::vector<double> &p, const Matrix<double> &m,
                                       std::uint64_t horizon);

/// Closed form ((1+t)/(2 t^2)) * ((1+t)^n - 1); the power is evaluated through
/// expm1/log1p so large n stays accurate and overflow-safe.
AnalyticResult leading_ones_expected_time(std::size_t n, PheromoneRatio ratio);

/// Closed-form double sum for sorting; factorial ratios and the products
/// prod(1 + r t) are accumulated in log space, so intermediates stay in range
/// for problem sizes well beyond n = 500.
AnalyticResult sorting_expected_time(std::size_t n, PheromoneRatio ratio);

/// Column constant of the structured inverse for the sorting chain:
/// ((n-j-1)/(n-j)) * (1/t) * prod_{k=1..j+1} (1 + (n-k) t), 1 <= j <= n-2.
double sorting_inverse_column_constant(std::size_t n, PheromoneRatio ratio, std::size_t j);

/// (lower, upper) = ((n-2)/(2t), (n/t) * (1 + n t)^n).
std::pair<double, double> sorting_time_bounds(std::size_t n, PheromoneRatio ratio);

/// (1/t) * (1+t)^n * (1 + ln n). An upper bound only; one-max has no exact
/// chain model here because its transition matrix violates the row-ratio
/// property.
double one_max_time_upper_bound(std::size_t n, PheromoneRatio ratio);

/// 1/n for leading-ones and 1/n^2 for sorting (the ratios minimizing the
/// expected time growth); throws for one-max, where only an upper bound at
/// t = 1/n is known.
double optimal_pheromone_ratio(Problem problem, std::size_t n);

/// Ratio the command line falls back to when none is given: the optimal ratio
/// where known, and the documented default 1/n for one-max.
double default_pheromone_ratio(Problem problem, std::size_t n);

/// Exact integer check of
///   sum_{i=1..n-1} i^2 i! == (n-1) n! - sum_{i=1..n-1} i!   and
///   sum_{i=1..n-1} i   i! == n! - 1
/// in arbitrary precision, any n >= 1.
bool factorial_sum_identities_hold(std::size_t n);

/// Dispatches to the requested evaluation route. The truncated-sum route needs
/// a horizon; when omitted it defaults to ceil(100 * closed-form time).
AnalyticResult evaluate_expected_time(Problem problem, std::size_t n, PheromoneRatio ratio,
                                      Method method,
                                      std::optional<std::uint64_t> horizon = std::nullopt);

} // namespace baco
