#include "baco/exact.hpp"

#include <stdexcept>

namespace baco::exact {

namespace {

Rational power(Rational base, std::size_t exponent) {
    Rational out(1);
    while (exponent > 0) {
        if (exponent & 1) out *= base;
        base *= base;
        exponent >>= 1;
    }
    return out;
}

} // namespace

Rational ratio(long long numerator, long long denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    return Rational(numerator) / Rational(denominator);
}

Rational leading_ones_expected_time(std::size_t n, const Rational &t) {
    if (n < 1) throw std::invalid_argument("leading-ones needs n >= 1");
    if (t <= 0) throw std::invalid_argument("pheromone ratio must be positive");
    const Rational grown = power(Rational(1) + t, n) - 1;
    return (Rational(1) + t) / (2 * t * t) * grown;
}

Rational sorting_expected_time(std::size_t n, const Rational &t) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    if (t <= 0) throw std::invalid_argument("pheromone ratio must be positive");

    // suffix[k] = prod_{r=k..n-1} (1 + r t)
    std::vector<Rational> suffix(n, Rational(1));
    for (std::size_t k = n; k-- > 1;) {
        suffix[k] = (k + 1 < n ? suffix[k + 1] : Rational(1)) *
                    (Rational(1) + Rational(static_cast<unsigned>(k)) * t);
    }

    Rational total(0);
    Rational factorial(1);
    for (std::size_t i = 1; i <= n - 1; ++i) {
        factorial *= static_cast<unsigned>(i);
        Rational bracket = suffix[i];
        for (std::size_t k = 1; k < i; ++k) {
            bracket += Rational(static_cast<unsigned>(k)) /
                       Rational(static_cast<unsigned>(k + 1)) * suffix[k];
        }
        total += Rational(static_cast<unsigned>(i)) * factorial * bracket;
    }
    const Rational n_factorial = factorial * static_cast<unsigned>(n);
    return total / (t * n_factorial);
}

Rational sorting_inverse_column_constant(std::size_t n, const Rational &t, std::size_t j) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    if (j < 1 || j > n - 2) throw std::invalid_argument("column index must be in 1..n-2");
    Rational prod(1);
    for (std::size_t k = 1; k <= j + 1; ++k) {
        prod *= Rational(1) + Rational(static_cast<unsigned>(n - k)) * t;
    }
    return Rational(static_cast<unsigned>(n - j - 1)) / Rational(static_cast<unsigned>(n - j)) /
           t * prod;
}

} // namespace baco::exact
