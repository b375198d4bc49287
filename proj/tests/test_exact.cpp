#include "doctest.h"

#include <cmath>

#include "baco/analytic.hpp"
#include "baco/exact.hpp"
#include "support/oracles.hpp"

using namespace baco;
using exact::Rational;

// The chain machinery is templated, so the identical formulas run under exact
// rational arithmetic. The matrix route, the explicit route and the closed
// forms are algebraically equal, hence the rational results must be *equal*,
// not merely close. This anchors the floating-point tolerances elsewhere.

TEST_CASE("all three routes coincide exactly in rational arithmetic") {
    const Rational t_values[] = {Rational(1), Rational(1) / 2, Rational(1) / 3, Rational(2) / 5};
    for (const auto &t : t_values) {
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto p = leading_ones_initial_distribution<Rational>(n);
            const auto m = leading_ones_transition_matrix<Rational>(n, t);
            const Rational matrix = expected_time_matrix_value(p, m);
            const Rational explicit_sum = expected_time_explicit_value(p, m, Rational(0));
            const Rational closed = exact::leading_ones_expected_time(n, t);
            CHECK(matrix == closed);
            CHECK(explicit_sum == closed);
            CHECK(oracles::first_step_expected_time(p, m) == closed);
        }
        for (std::size_t n = 2; n <= 7; ++n) {
            const auto p = sorting_initial_distribution<Rational>(n);
            const auto m = sorting_transition_matrix<Rational>(n, t);
            const Rational matrix = expected_time_matrix_value(p, m);
            const Rational explicit_sum = expected_time_explicit_value(p, m, Rational(0));
            const Rational closed = exact::sorting_expected_time(n, t);
            CHECK(matrix == closed);
            CHECK(explicit_sum == closed);
            CHECK(oracles::first_step_expected_time(p, m) == closed);
        }
    }
}

TEST_CASE("structured inverse is exact in rational arithmetic") {
    const Rational t = Rational(1) / 3;
    for (std::size_t n = 2; n <= 6; ++n) {
        const auto m = sorting_transition_matrix<Rational>(n, t);
        const auto inverse = structured_inverse(m, Rational(0));
        const auto product = multiply(subtract_from_identity(m), inverse);
        for (std::size_t i = 0; i < product.size(); ++i) {
            for (std::size_t j = 0; j < product.size(); ++j) {
                CHECK(product(i, j) == (i == j ? Rational(1) : Rational(0)));
            }
        }
        for (std::size_t j = 1; j <= n - 2; ++j) {
            CHECK(inverse(0, j) == exact::sorting_inverse_column_constant(n, t, j));
        }
    }
}

TEST_CASE("doubles track the exact values to near machine precision") {
    const Rational t_exact = Rational(1) / 3;
    const PheromoneRatio t_double(1.0 / 3.0);
    // 1/3 is not representable in binary; build the rational from the rounded
    // double instead so both routes see the same number.
    const Rational t_rounded(t_double.value());
    for (std::size_t n = 2; n <= 10; ++n) {
        const double exact_value =
            exact::sorting_expected_time(n, t_rounded).convert_to<double>();
        const double closed = sorting_expected_time(n, t_double).value;
        const double matrix =
            evaluate_expected_time(Problem::Sorting, n, t_double, Method::Matrix).value;
        CHECK(std::fabs(closed - exact_value) / exact_value <= 1e-12);
        CHECK(std::fabs(matrix - exact_value) / exact_value <= 1e-12);
    }
    CHECK(exact::leading_ones_expected_time(2, Rational(1)) == Rational(3));
    CHECK(exact::leading_ones_expected_time(3, Rational(1)) == Rational(7));
    CHECK(exact::sorting_expected_time(3, Rational(1)) == Rational(5));
    CHECK(exact::sorting_expected_time(2, t_exact) == Rational(2)); // (1+t)/(2t)
}
