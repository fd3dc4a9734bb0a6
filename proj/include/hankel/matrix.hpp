#ifndef HANKEL_MATRIX_HPP
#define HANKEL_MATRIX_HPP

#include <hankel/errors.hpp>
#include <hankel/scalar.hpp>

#include <cassert>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace hankel {

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    /// Copy with row `row` and column `col` removed (0-based).
    Matrix without(std::size_t row, std::size_t col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, r = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, c = 0; j < cols_; ++j) {
                if (j == col) continue;
                m(r, c++) = (*this)(i, j);
            }
            ++r;
        }
        return m;
    }

    /// Copy with column `col` removed.
    Matrix without_col(std::size_t col) const {
        Matrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0, c = 0; j < cols_; ++j)
                if (j != col) m(i, c++) = (*this)(i, j);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

/// Scales each row of a rational matrix by the lcm of its denominators.
/// Returns the integer matrix and the product of the scale factors.
inline std::pair<Matrix<Integer>, Integer> clear_denominators(const Matrix<Rational>& a) {
    Matrix<Integer> out(a.rows(), a.cols());
    Integer scale = 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a(i, j)));
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = boost::multiprecision::numerator(a(i, j)) *
                        (l / boost::multiprecision::denominator(a(i, j)));
        scale *= l;
    }
    return {std::move(out), scale};
}

/// In-place fraction-free (Bareiss) forward elimination over the integers
/// on the leading `n` columns, with row pivoting. On return the matrix is
/// upper triangular in those columns; every division is exact.
/// Returns the sign of the row permutation, or 0 if a zero pivot column
/// was met (singular leading block).
inline int bareiss_forward(Matrix<Integer>& m, std::size_t n) {
    int sign = 1;
    Integer previous = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < m.rows() && m(pivot, k) == 0) ++pivot;
        if (pivot == m.rows()) return 0;
        if (pivot != k) {
            m.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m.rows(); ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    return sign;
}

} // namespace detail

/// Determinant of a square integer matrix by Bareiss elimination.
inline Integer determinant(Matrix<Integer> m) {
    assert(m.is_square());
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    const int sign = detail::bareiss_forward(m, n);
    if (sign == 0) return 0;
    return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

/// Exact determinant: denominators are cleared row by row, the integer
/// matrix is reduced fraction-free, and the scale is divided back out.
inline Rational determinant(const Matrix<Rational>& a) {
    assert(a.is_square());
    auto [ints, scale] = detail::clear_denominators(a);
    return Rational(determinant(std::move(ints)), scale);
}

/// Floating determinant by Gaussian elimination with partial pivoting.
template <class T>
    requires(!is_exact_v<T>)
T determinant(Matrix<T> m) {
    assert(m.is_square());
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(m(i, k)) > abs(m(pivot, k))) pivot = i;
        if (is_zero(m(pivot, k))) return T(0);
        if (pivot != k) {
            m.swap_rows(pivot, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            const T factor = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return det;
}

/// Rank by exact elimination with full pivoting.
inline std::size_t rank(const Matrix<Rational>& a) {
    Matrix<Integer> m = detail::clear_denominators(a).first;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Integer previous = 1;
    std::size_t r = 0;
    for (; r < std::min(rows, cols); ++r) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = r; i < rows && pi == rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (m(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        m.swap_rows(r, pi);
        m.swap_cols(r, pj);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = r + 1; j < cols; ++j)
                m(i, j) = (m(i, j) * m(r, r) - m(i, r) * m(r, j)) / previous;
            m(i, r) = 0;
        }
        previous = m(r, r);
    }
    return r;
}

/// Solves the square system a·x = b exactly. The augmented system is
/// cleared of denominators row-wise and reduced with the same Bareiss
/// pass as `determinant`, then back-substituted.
inline std::vector<Rational> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    assert(a.is_square() && a.rows() == b.size());
    const std::size_t n = a.rows();
    Matrix<Rational> augmented(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
        augmented(i, n) = b[i];
    }
    Matrix<Integer> m = detail::clear_denominators(augmented).first;
    if (detail::bareiss_forward(m, n) == 0) throw SingularMatrix("singular linear system");
    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational acc{m(i, n)};
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(m(i, j)) * x[j];
        x[i] = acc / Rational(m(i, i));
    }
    return x;
}

/// Floating solve by Gaussian elimination with partial pivoting.
template <class T>
    requires(!is_exact_v<T>)
std::vector<T> solve(Matrix<T> m, std::vector<T> b) {
    assert(m.is_square() && m.rows() == b.size());
    const std::size_t n = m.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(m(i, k)) > abs(m(pivot, k))) pivot = i;
        if (is_zero(m(pivot, k))) throw SingularMatrix("singular linear system");
        if (pivot != k) {
            m.swap_rows(pivot, k);
            std::swap(b[pivot], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k))) continue;
            const T factor = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
            b[i] -= factor * b[k];
        }
    }
    std::vector<T> x(n);
    for (std::size_t i = n; i-- > 0;) {
        T acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return x;
}

/// A basis of the right null space of a rational matrix, from its reduced
/// row echelon form. Each basis vector has a 1 at its free column.
inline std::vector<std::vector<Rational>> null_space(Matrix<Rational> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hankel

#endif
