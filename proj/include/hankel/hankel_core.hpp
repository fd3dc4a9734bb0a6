#ifndef HANKEL_HANKEL_CORE_HPP
#define HANKEL_HANKEL_CORE_HPP

// Hankel matrices of a moment prefix, their determinants D_n, the shifted
// determinants D'_{n+1}, minors, rank, and the binomial transform.

#include <hankel/errors.hpp>
#include <hankel/matrix.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hankel {

/// The (n+1)x(n+1) matrix (s_{i+j}).
template <Scalar T>
Matrix<T> hankel_matrix(const BasicMomentSequence<T>& s, std::size_t n) {
    require_index(s, 2 * n, "hankel_matrix");
    Matrix<T> h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h(i, j) = s[i + j];
    return h;
}

/// The matrix of D'_{n+1}: columns 0..n-1 of H_n followed by the column
/// (s_{n+1}, ..., s_{2n+1}).
template <Scalar T>
Matrix<T> shifted_hankel_matrix(const BasicMomentSequence<T>& s, std::size_t n) {
    require_index(s, 2 * n + 1, "shifted_hankel_matrix");
    Matrix<T> h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h(i, j) = s[i + j];
        h(i, n) = s[i + n + 1];
    }
    return h;
}

/// D_n = det(s_{i+j})_{i,j=0..n}. Requires 2n <= M.
template <Scalar T>
T hankel_det(const BasicMomentSequence<T>& s, std::size_t n) {
    return determinant(hankel_matrix(s, n));
}

/// D'_{n+1}: D_{n+1} with row n+2 and column n+1 deleted. Requires 2n+1 <= M.
template <Scalar T>
T shifted_det(const BasicMomentSequence<T>& s, std::size_t n) {
    return determinant(shifted_hankel_matrix(s, n));
}

/// D_n^{k,m}: determinant of H_n with row k and column m deleted
/// (1-based, 1 <= k, m <= n+1).
template <Scalar T>
T hankel_minor(const BasicMomentSequence<T>& s, std::size_t n, std::size_t k, std::size_t m) {
    if (k < 1 || m < 1 || k > n + 1 || m > n + 1)
        throw IndexOutOfRange("minor indices (" + std::to_string(k) + ", " + std::to_string(m) +
                              ") outside 1.." + std::to_string(n + 1));
    return determinant(hankel_matrix(s, n).without(k - 1, m - 1));
}

/// Hankel determinants D_0..D_N (2N <= M) and D'_1..D'_{N'+1} (2N'+1 <= M).
struct DeterminantProfile {
    std::vector<Rational> d_values;
    std::vector<Rational> d_prime_values;

    /// D_n, with the convention D_{-1} = 1 available as d(-1).
    const Rational& d(std::ptrdiff_t n) const {
        static const Rational one{1};
        return n < 0 ? one : d_values.at(static_cast<std::size_t>(n));
    }

    friend bool operator==(const DeterminantProfile&, const DeterminantProfile&) = default;
};

inline DeterminantProfile determinant_transform(const MomentSequence& s) {
    if (s.empty()) throw IndexOutOfRange("determinant_transform of an empty sequence");
    DeterminantProfile profile;
    const std::size_t m = s.max_index();
    for (std::size_t n = 0; 2 * n <= m; ++n) profile.d_values.push_back(hankel_det(s, n));
    for (std::size_t n = 0; 2 * n + 1 <= m; ++n)
        profile.d_prime_values.push_back(shifted_det(s, n));
    return profile;
}

/// beta(s)_n = sum_k C(n,k) s_k.
inline MomentSequence binomial_transform(const MomentSequence& s) {
    std::vector<Rational> out(s.size());
    std::vector<Integer> row{1};
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= n; ++k) acc += Rational(row[k]) * s[k];
        out[n] = acc;
        std::vector<Integer> next(row.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t k = 1; k < row.size(); ++k) next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return MomentSequence(std::move(out));
}

/// Rank of H_n.
inline std::size_t matrix_rank(const MomentSequence& s, std::size_t n) {
    return rank(hankel_matrix(s, n));
}

} // namespace hankel

#endif
