#include "doctest.h"

#include <cmath>

#include "baco/analytic.hpp"
#include "support/oracles.hpp"

using namespace baco;
using oracles::Rational;

namespace {

double rel_diff(double a, double b) {
    if (a == b) return 0.0;
    return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

} // namespace

TEST_CASE("spot expected times, anchored by first-step analysis on enumerated chains") {
    // Exact oracle values: T = sum_i p(i) E_i over the brute-force chain.
    const auto lo2 = oracles::first_step_expected_time(
        oracles::leading_ones_initial_by_enumeration(2),
        oracles::leading_ones_matrix_by_enumeration(2, Rational(1)));
    const auto lo3 = oracles::first_step_expected_time(
        oracles::leading_ones_initial_by_enumeration(3),
        oracles::leading_ones_matrix_by_enumeration(3, Rational(1)));
    const auto so2 = oracles::first_step_expected_time(
        oracles::sorting_initial_by_enumeration(2),
        oracles::sorting_matrix_by_enumeration(2, Rational(1)));
    const auto so3 = oracles::first_step_expected_time(
        oracles::sorting_initial_by_enumeration(3),
        oracles::sorting_matrix_by_enumeration(3, Rational(1)));
    CHECK(lo2 == Rational(3));
    CHECK(lo3 == Rational(7));
    CHECK(so2 == Rational(1));
    CHECK(so3 == Rational(5));

    const PheromoneRatio one(1.0);
    CHECK(leading_ones_expected_time(2, one).value == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(leading_ones_expected_time(3, one).value == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(sorting_expected_time(2, one).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sorting_expected_time(3, one).value == doctest::Approx(5.0).epsilon(1e-12));

    for (Method method : {Method::Matrix, Method::Explicit}) {
        CHECK(evaluate_expected_time(Problem::LeadingOnes, 2, one, method).value ==
              doctest::Approx(3.0).epsilon(1e-12));
        CHECK(evaluate_expected_time(Problem::Sorting, 3, one, method).value ==
              doctest::Approx(5.0).epsilon(1e-12));
    }
}

TEST_CASE("geometric chain: single transient state") {
    // p = (1, 0), M(0,0) = 1-q: expected time 1/q.
    for (double q : {0.5, 0.125, 1e-3}) {
        Matrix<double> m(2);
        m(0, 0) = 1.0 - q;
        m(0, 1) = q;
        const std::vector<double> p{1.0, 0.0};
        CHECK(expected_time_matrix(p, m).value == doctest::Approx(1.0 / q).epsilon(1e-12));
        // Explicit route: empty column-constant sum, so T = p(0)/A(0,0).
        CHECK(expected_time_explicit(p, m).value == doctest::Approx(1.0 / q).epsilon(1e-12));
    }
}

TEST_CASE("matrix and explicit methods reject degenerate chains") {
    Matrix<double> m(3);
    m(0, 0) = 1.0; // stagnates
    m(1, 1) = 0.5;
    m(1, 2) = 0.5;
    const std::vector<double> p{1.0, 0.0, 0.0};
    CHECK_THROWS_AS(expected_time_matrix(p, m), DegenerateChainError);
    CHECK_THROWS_AS(structured_inverse(m, kRowRatioTolerance), DegenerateChainError);
}

TEST_CASE("explicit method signals row-ratio violations") {
    const auto brute = oracles::one_max_matrix_by_enumeration(3, Rational(1) / Rational(2));
    Matrix<double> m(brute.size());
    std::vector<double> p(brute.size(), 0.0);
    p[0] = 1.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = brute(i, j).convert_to<double>();
    }
    CHECK_THROWS_AS(expected_time_explicit(p, m), RowRatioViolation);
    CHECK_THROWS_AS(structured_inverse(m, kRowRatioTolerance), RowRatioViolation);
    // The matrix route has no such precondition.
    CHECK(expected_time_matrix(p, m).value > 0.0);
}

TEST_CASE("structured inverse matches the column-constant layout") {
    const auto m = leading_ones_transition_matrix<double>(2, 1.0);
    const auto inv = structured_inverse(m, kRowRatioTolerance);
    CHECK(inv(0, 0) == doctest::Approx(2.0));  // 1/A(0,0)
    CHECK(inv(1, 1) == doctest::Approx(4.0));  // 1/A(1,1)
    CHECK(inv(0, 1) == doctest::Approx(2.0));  // delta_1 = (1/(2t))(1+t)^2
    CHECK(inv(0, 2) == doctest::Approx(1.0));  // last column is all ones
    CHECK(inv(1, 2) == doctest::Approx(1.0));
    CHECK(inv(2, 2) == doctest::Approx(1.0));
    CHECK(inv(1, 0) == 0.0);
}

TEST_CASE("structured inverse is a true inverse of I - M") {
    for (std::size_t n : {1, 2, 3, 6, 9, 12}) {
        for (double t : {1.0, 0.5, 1.0 / n, 1.0 / double(n * n)}) {
            const auto m = leading_ones_transition_matrix<double>(n, t);
            const auto residual = multiply(subtract_from_identity(m),
                                           structured_inverse(m, kRowRatioTolerance));
            for (std::size_t i = 0; i < residual.size(); ++i) {
                for (std::size_t j = 0; j < residual.size(); ++j) {
                    CHECK(std::fabs(residual(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-9);
                }
            }
        }
    }
    for (std::size_t n : {2, 3, 6, 9}) {
        for (double t : {0.5, 1.0 / n, 1.0 / double(n * n)}) {
            const auto m = sorting_transition_matrix<double>(n, t);
            const auto residual = multiply(subtract_from_identity(m),
                                           structured_inverse(m, kRowRatioTolerance));
            for (std::size_t i = 0; i < residual.size(); ++i) {
                for (std::size_t j = 0; j < residual.size(); ++j) {
                    CHECK(std::fabs(residual(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("leading-ones column constants follow the closed form") {
    // delta_j = (1/(2t)) (1+t)^(j+1) for the interior columns; the last column
    // of the inverse is all ones.
    for (std::size_t n : {3, 7, 12}) {
        for (double t : {1.0, 0.5, 1.0 / n}) {
            const auto m = leading_ones_transition_matrix<double>(n, t);
            const auto delta = inverse_column_constants(m);
            for (std::size_t j = 1; j <= m.size() - 2; ++j) {
                const double closed = std::pow(1.0 + t, double(j + 1)) / (2.0 * t);
                CHECK(rel_diff(delta[j], closed) <= 1e-10);
            }
            CHECK(rel_diff(delta[m.size() - 1], 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("sorting column constants match their closed form") {
    for (std::size_t n : {3, 5, 8, 12}) {
        for (double t : {1.0, 0.5, 1.0 / (double(n) * n)}) {
            const PheromoneRatio ratio(t);
            const auto m = sorting_transition_matrix<double>(n, t);
            const auto delta = inverse_column_constants(m);
            for (std::size_t j = 1; j <= n - 2; ++j) {
                CHECK(rel_diff(delta[j], sorting_inverse_column_constant(n, ratio, j)) <= 1e-10);
            }
            CHECK(rel_diff(delta[n - 1], 1.0) <= 1e-10);
        }
    }
    CHECK(sorting_inverse_column_constant(3, PheromoneRatio(1.0), 1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(sorting_inverse_column_constant(3, PheromoneRatio(1.0), 2),
                    std::invalid_argument);
    // n=2 has no interior columns at all.
    CHECK_THROWS_AS(sorting_inverse_column_constant(2, PheromoneRatio(1.0), 1),
                    std::invalid_argument);
}

TEST_CASE("closed forms at selected points") {
    CHECK(leading_ones_expected_time(2, PheromoneRatio(1.0)).value == doctest::Approx(3.0));
    CHECK(leading_ones_expected_time(3, PheromoneRatio(1.0)).value == doctest::Approx(7.0));
    CHECK(leading_ones_expected_time(50, PheromoneRatio(1.0 / 50)).value ==
          doctest::Approx(2156.7747).epsilon(1e-4));
    // The closed form tracks the matrix route well beyond the small-n grid.
    CHECK(rel_diff(leading_ones_expected_time(50, PheromoneRatio(1.0 / 50)).value,
                   evaluate_expected_time(Problem::LeadingOnes, 50, PheromoneRatio(1.0 / 50),
                                          Method::Matrix)
                       .value) <= kCrossMethodTolerance);
    CHECK(leading_ones_expected_time(1, PheromoneRatio(0.5)).value == doctest::Approx(1.5));

    CHECK(sorting_expected_time(2, PheromoneRatio(1.0)).value == doctest::Approx(1.0));
    CHECK(sorting_expected_time(3, PheromoneRatio(1.0)).value == doctest::Approx(5.0));
}

TEST_CASE("closed forms stay finite in log-space at large scales") {
    const double huge = sorting_expected_time(500, PheromoneRatio(1.0 / (500.0 * 500.0))).value;
    CHECK(std::isfinite(huge));
    CHECK(huge > 0.0);
    // Theta(n/t) regime: n^3 scale.
    CHECK(huge / (500.0 * 500.0 * 500.0) > 0.1);
    CHECK(huge / (500.0 * 500.0 * 500.0) < 10.0);

    const double lo = leading_ones_expected_time(400, PheromoneRatio(1.0 / 400)).value;
    CHECK(std::isfinite(lo));
}

TEST_CASE("cross-method agreement on a sample grid") {
    for (std::size_t n : {1, 2, 5, 11, 20}) {
        for (double t : {1.0, 0.5, 1.0 / n, 1.0 / double(n * n)}) {
            const PheromoneRatio ratio(t);
            const double closed = leading_ones_expected_time(n, ratio).value;
            const double viamatrix =
                evaluate_expected_time(Problem::LeadingOnes, n, ratio, Method::Matrix).value;
            const double viaexplicit =
                evaluate_expected_time(Problem::LeadingOnes, n, ratio, Method::Explicit).value;
            CHECK(rel_diff(closed, viamatrix) <= kCrossMethodTolerance);
            CHECK(rel_diff(closed, viaexplicit) <= kCrossMethodTolerance);
        }
    }
    for (std::size_t n : {2, 3, 7, 12}) {
        for (double t : {1.0, 0.5, 1.0 / n, 1.0 / double(n * n)}) {
            const PheromoneRatio ratio(t);
            const double closed = sorting_expected_time(n, ratio).value;
            const double viamatrix =
                evaluate_expected_time(Problem::Sorting, n, ratio, Method::Matrix).value;
            const double viaexplicit =
                evaluate_expected_time(Problem::Sorting, n, ratio, Method::Explicit).value;
            CHECK(rel_diff(closed, viamatrix) <= kCrossMethodTolerance);
            CHECK(rel_diff(closed, viaexplicit) <= kCrossMethodTolerance);
        }
    }
}

TEST_CASE("truncated sum converges monotonically from below") {
    const auto p = leading_ones_initial_distribution<double>(2);
    const auto m = leading_ones_transition_matrix<double>(2, 1.0);
    double previous = -1.0;
    for (std::uint64_t horizon : {0, 1, 2, 5, 10, 25, 50, 100, 200}) {
        const double value = truncated_expected_time(p, m, horizon).value;
        CHECK(value >= previous);
        CHECK(value <= 3.0 + 1e-12);
        previous = value;
    }
    CHECK(truncated_expected_time(p, m, 0).value == 0.0);
    CHECK(truncated_expected_time(p, m, 200).value == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("sorting bounds bracket the closed form") {
    const auto [lo3, up3] = sorting_time_bounds(3, PheromoneRatio(1.0));
    CHECK(lo3 == doctest::Approx(0.5));
    CHECK(up3 == doctest::Approx(192.0));
    CHECK(lo3 <= 5.0);
    CHECK(5.0 <= up3);

    // n=2, t=1: lower degenerates to 0, upper is (2/1)*(1+2)^2 = 18.
    const auto [lo2, up2] = sorting_time_bounds(2, PheromoneRatio(1.0));
    CHECK(lo2 == doctest::Approx(0.0));
    CHECK(up2 == doctest::Approx(18.0));

    for (std::size_t n = 2; n <= 12; ++n) {
        for (double t : {1.0, 1.0 / n, 1.0 / double(n * n)}) {
            const PheromoneRatio ratio(t);
            const auto [lower, upper] = sorting_time_bounds(n, ratio);
            const double value = sorting_expected_time(n, ratio).value;
            CHECK(lower <= value);
            CHECK(value <= upper);
        }
    }
}

TEST_CASE("one-max upper bound") {
    CHECK(one_max_time_upper_bound(1, PheromoneRatio(1.0)) == doctest::Approx(2.0));
    // (1 + 1/n)^n <= e gives the bound's shape.
    const double bound = one_max_time_upper_bound(50, PheromoneRatio(1.0 / 50));
    CHECK(bound <= 50.0 * std::exp(1.0) * (1.0 + std::log(50.0)));
    CHECK(bound > 0.0);
}

TEST_CASE("optimal and default pheromone ratios") {
    CHECK(optimal_pheromone_ratio(Problem::LeadingOnes, 200) == doctest::Approx(0.005));
    CHECK(optimal_pheromone_ratio(Problem::Sorting, 100) == doctest::Approx(1e-4));
    CHECK(optimal_pheromone_ratio(Problem::LeadingOnes, 1) == doctest::Approx(1.0));
    CHECK_THROWS_AS(optimal_pheromone_ratio(Problem::OneMax, 10), std::invalid_argument);
    CHECK(default_pheromone_ratio(Problem::OneMax, 10) == doctest::Approx(0.1));
}

TEST_CASE("factorial sum identities hold exactly") {
    for (std::size_t n = 1; n <= 25; ++n) CHECK(factorial_sum_identities_hold(n));
}

TEST_CASE("expected-time evaluation rejects one-max") {
    CHECK_THROWS_AS(evaluate_expected_time(Problem::OneMax, 5, PheromoneRatio(0.5), Method::Matrix),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_chain_model(Problem::OneMax, 5, PheromoneRatio(0.5)),
                    std::invalid_argument);
}
