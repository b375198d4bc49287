#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

#include "baco/markov.hpp"

namespace baco::exact {

/// Arbitrary-precision rationals. The chain machinery in markov.hpp is
/// templated, so the same formulas run here without rounding; this mode
/// anchors the floating-point tolerances for moderate n.
using Rational = boost::multiprecision::cpp_rational;
using Matrix = baco::Matrix<Rational>;

/// t given as an exact fraction.
Rational ratio(long long numerator, long long denominator);

/// ((1+t)/(2 t^2)) * ((1+t)^n - 1), evaluated exactly.
Rational leading_ones_expected_time(std::size_t n, const Rational &t);

/// The closed double sum for sorting, evaluated exactly.
Rational sorting_expected_time(std::size_t n, const Rational &t);

/// ((n-j-1)/(n-j)) * (1/t) * prod_{k=1..j+1} (1 + (n-k) t), evaluated exactly.
Rational sorting_inverse_column_constant(std::size_t n, const Rational &t, std::size_t j);

} // namespace baco::exact
