#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace baco {

// Absorbing-chain machinery over a generic scalar, so the same formulas run in
// double for production, long double for tight residual checks, and exact
// rationals for anchoring tolerances. States are indexed by objective value;
// the last state is absorbing and its row is identically zero.

inline constexpr double kRowSumTolerance = 1e-12;
inline constexpr double kRowRatioTolerance = 1e-10;
inline constexpr double kCrossMethodTolerance = 1e-9;

struct DegenerateChainError : std::runtime_error {
    explicit DegenerateChainError(std::size_t state)
        : std::runtime_error("chain stagnates: state " + std::to_string(state) +
                             " has no positive leave probability"),
          state(state) {}
    std::size_t state;
};

struct RowRatioViolation : std::runtime_error {
    RowRatioViolation(std::size_t row, std::size_t col)
        : std::runtime_error("row-ratio property violated at entry (" + std::to_string(row) +
                             ", " + std::to_string(col) + ")"),
          row(row), col(col) {}
    std::size_t row;
    std::size_t col;
};

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t m) : m_(m), data_(m * m, T(0)) {}

    std::size_t size() const noexcept { return m_; }
    T &operator()(std::size_t i, std::size_t j) { return data_[i * m_ + j]; }
    const T &operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t m_ = 0;
    std::vector<T> data_;
};

namespace detail {

template <typename T>
T abs_value(const T &x) {
    using std::abs;
    return abs(x);
}

template <typename T>
T relative_difference(const T &a, const T &b) {
    if (a == b) return T(0);
    const T da = abs_value(a), db = abs_value(b);
    const T scale = da > db ? da : db;
    const T diff = a - b;
    return abs_value(diff) / scale;
}

template <typename T>
void require_live_diagonal(const Matrix<T> &m) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        if (m(i, i) >= T(1)) throw DegenerateChainError(i);
    }
}

// Probability of leaving transient state i, i.e. A(i,i) = 1 - M(i,i). Rows
// sum to 1, so this equals the off-diagonal row sum, which keeps full relative
// precision even when the diagonal is within an ulp of 1 (slow-mixing states);
// computing 1 - M(i,i) directly would quantize it at 2^-53 absolute.
template <typename T>
T leave_probability(const Matrix<T> &m, std::size_t i) {
    const std::size_t size = m.size();
    if (i + 1 == size) return T(1); // absorbing row: A(m-1,m-1) = 1
    T total(0);
    for (std::size_t j = size; j-- > i + 1;) total += m(i, j);
    return total;
}

// Solves (I - M) x = rhs by back substitution. All touched quantities are
// non-negative, so the accumulation is cancellation-free.
template <typename T>
std::vector<T> solve_complement_upper(const Matrix<T> &m, const std::vector<T> &rhs) {
    const std::size_t size = m.size();
    std::vector<T> x(size, T(0));
    for (std::size_t ri = size; ri-- > 0;) {
        T acc = rhs[ri];
        for (std::size_t j = ri + 1; j < size; ++j) acc += m(ri, j) * x[j];
        x[ri] = acc / leave_probability(m, ri);
    }
    return x;
}

} // namespace detail

/// Throws if p is not a probability distribution (entries in [0,1], total
/// within sum_tol of 1).
template <typename T>
void validate_distribution(const std::vector<T> &p, const T &sum_tol) {
    T total(0);
    for (const T &v : p) {
        if (v < T(0) || v > T(1)) throw std::invalid_argument("distribution entry outside [0,1]");
        total += v;
    }
    const T gap = total - T(1);
    if (detail::abs_value(gap) > sum_tol) {
        throw std::invalid_argument("distribution does not sum to 1");
    }
}

/// Throws unless M is a valid absorbing transition matrix: upper triangular,
/// zero last row, no stagnating transient state, and every row but the last
/// summing to 1 within row_sum_tol.
template <typename T>
void validate_transition_matrix(const Matrix<T> &m, const T &row_sum_tol) {
    const std::size_t size = m.size();
    if (size == 0) throw std::invalid_argument("empty transition matrix");
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m(i, j) != T(0)) throw std::invalid_argument("matrix is not upper triangular");
        }
    }
    for (std::size_t j = 0; j < size; ++j) {
        if (m(size - 1, j) != T(0)) throw std::invalid_argument("last row must be zero");
    }
    detail::require_live_diagonal(m);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        T total(0);
        for (std::size_t j = 0; j < size; ++j) total += m(i, j);
        const T gap = total - T(1);
        if (detail::abs_value(gap) > row_sum_tol) {
            throw std::invalid_argument("row " + std::to_string(i) + " does not sum to 1");
        }
    }
}

/// Initial-state distribution of a uniform random bit string classified by
/// leading-ones value: p(i) = (1/2)^(i+1), topped by p(n) = (1/2)^n.
template <typename T>
std::vector<T> leading_ones_initial_distribution(std::size_t n) {
    if (n < 1) throw std::invalid_argument("leading-ones needs n >= 1");
    const std::size_t m = n + 1;
    std::vector<T> p(m, T(0));
    T mass = T(1) / T(2);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        p[i] = mass;
        mass /= T(2);
    }
    p[m - 1] = p[m - 2]; // (1/2)^n, same as the last transient entry
    return p;
}

/// One-iteration transition matrix for leading-ones with pheromone ratio t.
/// From state i the walk reproduces the i leading ones with probability
/// (1/(1+t))^i, flips the following zero with probability t/(1+t), and the
/// remaining bits are marginally uniform.
template <typename T>
Matrix<T> leading_ones_transition_matrix(std::size_t n, const T &t) {
    if (n < 1) throw std::invalid_argument("leading-ones needs n >= 1");
    if (t <= T(0) || t > T(1)) throw std::invalid_argument("pheromone ratio must be in (0,1]");
    const std::size_t m = n + 1;
    const T follow = T(1) / (T(1) + t);
    const T half = T(1) / T(2);

    Matrix<T> mat(m);
    T escape = t * follow; // t * (1/(1+t))^(i+1)
    for (std::size_t i = 0; i + 1 < m; ++i) {
        mat(i, i) = T(1) - escape;
        T step = escape;
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            step *= half;
            mat(i, j) = step;
        }
        // Reaching the optimum needs no trailing zero bit.
        T top = escape;
        for (std::size_t k = 0; k + i + 1 < n; ++k) top *= half;
        mat(i, m - 1) = top;
        escape *= follow;
    }
    return mat;
}

/// Initial-state distribution of a uniform random permutation classified by
/// final-position-prefix value: p(i) = (n-i-1) * (n-i-1)!/n!, p(n-1) = 1/n!.
template <typename T>
std::vector<T> sorting_initial_distribution(std::size_t n) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    const std::size_t m = n;
    std::vector<T> p(m, T(0));
    T ratio(1); // becomes (n-i-1)!/n! incrementally
    for (std::size_t i = 0; i + 1 < m; ++i) {
        ratio /= T(static_cast<unsigned>(n - i));
        p[i] = T(static_cast<unsigned>(n - i - 1)) * ratio;
    }
    p[m - 1] = ratio; // 1/n!
    return p;
}

/// One-iteration transition matrix for sorting under the final-position-prefix
/// objective. From state i the walk retraces the marked path for i+1 picks
/// (each against a shrinking pool of unmarked edges), then extends the prefix
/// through uniformly distributed leftovers.
template <typename T>
Matrix<T> sorting_transition_matrix(std::size_t n, const T &t) {
    if (n < 2) throw std::invalid_argument("sorting needs n >= 2");
    if (t <= T(0) || t > T(1)) throw std::invalid_argument("pheromone ratio must be in (0,1]");
    const std::size_t m = n;

    Matrix<T> mat(m);
    T retrace(1); // prod_{k=1..i+1} 1/(1 + (n-k) t)
    for (std::size_t i = 0; i + 1 < m; ++i) {
        retrace /= T(1) + T(static_cast<unsigned>(n - (i + 1))) * t;
        const T escape = t * retrace;
        mat(i, i) = T(1) - escape;
        T uniform_tail(1); // prod_{k=i+1..j} 1/(n-k)
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            uniform_tail /= T(static_cast<unsigned>(n - j));
            mat(i, j) = T(static_cast<unsigned>(n - j - 1)) * escape * uniform_tail;
        }
        mat(i, m - 1) = escape * uniform_tail; // no misplaced key remains
    }
    return mat;
}

template <typename T>
struct RowRatioReport {
    bool holds = true;
    /// constants[i] is the shared ratio M(i,j)/M(i+1,j); unset when every pair
    /// in the row was 0/0.
    std::vector<std::optional<T>> constants;
    std::size_t violation_row = 0;
    std::size_t violation_col = 0;
};

/// Verifies that M(i,j)/M(i+1,j) does not depend on j (for i+1 < j <= m-1) and
/// collects the per-row constants. Pairs where both entries are zero are
/// skipped; a zero denominator against a nonzero numerator is a violation.
template <typename T>
RowRatioReport<T> check_row_ratio_property(const Matrix<T> &m, const T &rel_tol) {
    const std::size_t size = m.size();
    RowRatioReport<T> report;
    if (size < 3) return report;
    report.constants.resize(size - 2);
    for (std::size_t i = 0; i + 2 < size; ++i) {
        for (std::size_t j = i + 2; j < size; ++j) {
            const T &num = m(i, j);
            const T &den = m(i + 1, j);
            if (num == T(0) && den == T(0)) continue;
            if (den == T(0)) {
                report.holds = false;
                report.violation_row = i;
                report.violation_col = j;
                return report;
            }
            const T ratio = num / den;
            if (!report.constants[i]) {
                report.constants[i] = ratio;
            } else if (detail::relative_difference(ratio, *report.constants[i]) > rel_tol) {
                report.holds = false;
                report.violation_row = i;
                report.violation_col = j;
                return report;
            }
        }
    }
    return report;
}

/// Column constants filling (I-M)^{-1} above the diagonal:
/// delta_j = -A(j-1,j) / (A(j-1,j-1) * A(j,j)) with A = I - M, j in 1..m-1.
template <typename T>
std::vector<T> inverse_column_constants(const Matrix<T> &m) {
    const std::size_t size = m.size();
    detail::require_live_diagonal(m);
    std::vector<T> delta(size, T(0));
    for (std::size_t j = 1; j < size; ++j) {
        const T a_prev = detail::leave_probability(m, j - 1);
        const T a_diag = detail::leave_probability(m, j);
        delta[j] = m(j - 1, j) / (a_prev * a_diag); // -A(j-1,j) = M(j-1,j)
    }
    return delta;
}

/// Explicit inverse of A = I - M for matrices with the row-ratio property:
/// 1/A(i,i) on the diagonal, the column constant delta_j above it, zero below.
template <typename T>
Matrix<T> structured_inverse(const Matrix<T> &m, const T &ratio_rel_tol) {
    const auto report = check_row_ratio_property(m, ratio_rel_tol);
    if (!report.holds) throw RowRatioViolation(report.violation_row, report.violation_col);
    const std::size_t size = m.size();
    const auto delta = inverse_column_constants(m);
    Matrix<T> inv(size);
    for (std::size_t i = 0; i < size; ++i) {
        inv(i, i) = T(1) / detail::leave_probability(m, i);
        for (std::size_t j = i + 1; j < size; ++j) inv(i, j) = delta[j];
    }
    return inv;
}

/// Expected absorption time p * (I-M)^{-1} * (I-M)^{-1} * M * e_last,
/// evaluated with two triangular back-substitution solves; no explicit inverse
/// is ever formed.
template <typename T>
T expected_time_matrix_value(const std::vector<T> &p, const Matrix<T> &m) {
    const std::size_t size = m.size();
    if (p.size() != size) throw std::invalid_argument("distribution/matrix size mismatch");
    detail::require_live_diagonal(m);

    std::vector<T> absorb(size, T(0)); // M * e_last
    for (std::size_t i = 0; i < size; ++i) absorb[i] = m(i, size - 1);
    const auto once = detail::solve_complement_upper(m, absorb);
    const auto twice = detail::solve_complement_upper(m, once);

    T total(0);
    for (std::size_t i = 0; i < size; ++i) total += p[i] * twice[i];
    return total;
}

/// Expected absorption time via the explicit sum
/// sum_i p(i) * (1/A(i,i) + sum_{j=i+1..m-2} delta_j),
/// valid when the row-ratio and row-sum properties hold.
template <typename T>
T expected_time_explicit_value(const std::vector<T> &p, const Matrix<T> &m,
                               const T &ratio_rel_tol) {
    const std::size_t size = m.size();
    if (p.size() != size) throw std::invalid_argument("distribution/matrix size mismatch");
    const auto report = check_row_ratio_property(m, ratio_rel_tol);
    if (!report.holds) throw RowRatioViolation(report.violation_row, report.violation_col);
    const auto delta = inverse_column_constants(m);

    T total(0);
    T delta_tail(0); // sum_{j=i+1..m-2} delta_j, built backwards
    for (std::size_t i = size - 1; i-- > 0;) {
        if (i + 2 < size) delta_tail += delta[i + 1];
        total += p[i] * (T(1) / detail::leave_probability(m, i) + delta_tail);
    }
    return total;
}

/// Partial sum sum_{i=0..horizon} i * (p M^i)(m-1) computed by iterated
/// vector-matrix products. Converges to the matrix value from below and serves
/// as an independent oracle for it.
template <typename T>
T truncated_expected_time_value(const std::vector<T> &p, const Matrix<T> &m,
                                std::uint64_t horizon) {
    const std::size_t size = m.size();
    if (p.size() != size) throw std::invalid_argument("distribution/matrix size mismatch");
    std::vector<T> state(p);
    std::vector<T> next(size, T(0));
    T total(0);
    for (std::uint64_t step = 1; step <= horizon; ++step) {
        for (std::size_t j = 0; j < size; ++j) {
            T acc(0);
            for (std::size_t i = 0; i <= j; ++i) acc += state[i] * m(i, j);
            // State mass is non-negative; flushing subnormals to zero avoids
            // a ~100x denormal stall over long horizons and perturbs the sum
            // by less than 1e-280.
            if constexpr (std::is_floating_point_v<T>) {
                if (acc < std::numeric_limits<T>::min()) acc = T(0);
            }
            next[j] = acc;
        }
        state.swap(next);
        total += T(step) * state[size - 1];
    }
    return total;
}

/// I - M, mostly useful for residual checks in tests.
template <typename T>
Matrix<T> subtract_from_identity(const Matrix<T> &m) {
    Matrix<T> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = (i == j ? T(1) : T(0)) - m(i, j);
    }
    return out;
}

template <typename T>
Matrix<T> multiply(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
    Matrix<T> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            T acc(0);
            for (std::size_t k = 0; k < a.size(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    }
    return out;
}

} // namespace baco
