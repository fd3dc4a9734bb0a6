#ifndef HANKEL_HANKEL_POLY_HPP
#define HANKEL_HANKEL_POLY_HPP

// Hankel determinant polynomials P_n, second-kind polynomials Q_n, the
// moment functional L, and the Jacobi (three-term) recurrence data.
//
// Conventions throughout: P_{-1} = 0, P_0 = 1, Q_0 = 0, D_{-1} = 1, D'_0 = 0.

#include <hankel/errors.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/matrix.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace hankel {

namespace detail {

/// D_n with D_{-1} = 1.
inline Rational det_or_one(const MomentSequence& s, std::ptrdiff_t n) {
    return n < 0 ? Rational(1) : hankel_det(s, static_cast<std::size_t>(n));
}

/// D'_n with D'_0 = 0 (so D'_n = shifted_det(s, n-1) for n >= 1).
inline Rational shifted_or_zero(const MomentSequence& s, std::size_t n) {
    return n == 0 ? Rational(0) : shifted_det(s, n - 1);
}

inline Rational minus_one_pow(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

} // namespace detail

/// P_n(x): H_n with its last row replaced by (1, x, ..., x^n). Needs
/// s_0..s_{2n-1}.
///
/// The coefficient vector of P_n (the cofactors of that last row) lies in
/// the null space of the n x (n+1) block of known rows. When the block has
/// full rank the null space is a line and one cofactor fixes the scale;
/// otherwise every cofactor vanishes and P_n is the zero polynomial.
inline RationalPolynomial poly_P(const MomentSequence& s, std::size_t n) {
    if (n == 0) return RationalPolynomial::constant(1);
    require_index(s, 2 * n - 1, "poly_P");
    Matrix<Rational> rows(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= n; ++j) rows(i, j) = s[i + j];

    auto kernel = null_space(rows);
    if (kernel.size() != 1) return {};
    const auto& w = kernel.front();

    std::size_t j = n;
    while (is_zero(w[j])) --j;
    const Rational cofactor = detail::minus_one_pow(n + j) * determinant(rows.without_col(j));
    const Rational scale = cofactor / w[j];
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = w[k] * scale;
    return RationalPolynomial(std::move(coeffs));
}

/// Q_n(x) = L_t((P_n(x) - P_n(t)) / (x - t)), with coefficients
/// q_{n,n-1-m} = sum_{k<=m} p_{n,n-(m-k)} s_k.
inline RationalPolynomial poly_Q(const MomentSequence& s, std::size_t n) {
    if (n == 0) return {};
    const RationalPolynomial p = poly_P(s, n);
    std::vector<Rational> q(n);
    for (std::size_t m = 0; m < n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k <= m; ++k) acc += p.coeff(n - (m - k)) * s[k];
        q[n - 1 - m] = acc;
    }
    return RationalPolynomial(std::move(q));
}

/// The moment functional L(x^k) = s_k.
inline Rational apply_L(const MomentSequence& s, const RationalPolynomial& p) {
    if (p.is_zero()) return 0;
    require_index(s, *p.degree(), "apply_L");
    Rational acc = 0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) acc += p.coeffs()[k] * s[k];
    return acc;
}

/// P_{r-1} Q_r - P_r Q_{r-1} - D_{r-1}^2. The combination must be a
/// constant; a polynomial of positive degree raises NonConstantResidual.
inline Rational kronecker_residual(const MomentSequence& s, std::size_t r) {
    if (r == 0) throw IndexOutOfRange("kronecker_residual needs r >= 1");
    require_index(s, 2 * r - 1, "kronecker_residual");
    const RationalPolynomial combo =
        poly_P(s, r - 1) * poly_Q(s, r) - poly_P(s, r) * poly_Q(s, r - 1);
    if (!combo.is_constant())
        throw NonConstantResidual("P_{r-1}Q_r - P_rQ_{r-1} has degree " +
                                  std::to_string(*combo.degree()) + " for r = " +
                                  std::to_string(r));
    const Rational d = hankel_det(s, r - 1);
    return combo.coeff(0) - d * d;
}

/// Recurrence coefficients of the monic orthogonal polynomials
/// p_{n+1} = (x - a_n) p_n - b_n p_{n-1}.
struct JacobiCoeffs {
    std::vector<Rational> a;
    std::vector<Rational> b;

    std::size_t size() const noexcept { return a.size(); }
    friend bool operator==(const JacobiCoeffs&, const JacobiCoeffs&) = default;
};

/// a_0..a_{N-1}, b_0..b_{N-1} from a quasi-definite prefix:
/// a_n = D'_{n+1}/D_n - D'_n/D_{n-1}, b_0 = D_0, b_n = D_n D_{n-2} / D_{n-1}^2.
inline JacobiCoeffs jacobi_from_moments(const MomentSequence& s, std::size_t count) {
    JacobiCoeffs j;
    if (count == 0) return j;
    require_index(s, 2 * count - 1, "jacobi_from_moments");
    std::vector<Rational> d(count);
    for (std::size_t n = 0; n < count; ++n) {
        d[n] = hankel_det(s, n);
        if (is_zero(d[n])) throw NotQuasiDefinite(n);
    }
    auto D = [&](std::ptrdiff_t n) { return n < 0 ? Rational(1) : d[static_cast<std::size_t>(n)]; };
    Rational previous_shifted = 0; // D'_0
    for (std::size_t n = 0; n < count; ++n) {
        const auto sn = static_cast<std::ptrdiff_t>(n);
        const Rational shifted = shifted_det(s, n); // D'_{n+1}
        j.a.push_back(shifted / D(sn) - previous_shifted / D(sn - 1));
        j.b.push_back(n == 0 ? D(0) : D(sn) * D(sn - 2) / (D(sn - 1) * D(sn - 1)));
        previous_shifted = shifted;
    }
    return j;
}

/// The unique s_0..s_{2N-1} with D_n = t_n != 0 and D'_{n+1} = t'_n.
///
/// Expanding D_n and D'_{n+1} along their last column gives
///   s_{2n}   D_{n-1} = D_n       + sum_k (-1)^k s_{2n-1-k} D_n^{n-k,n+1}
///   s_{2n+1} D_{n-1} = D'_{n+1}  + sum_k (-1)^k s_{2n-k}   D_n^{n-k,n+1}
/// where the minors only involve s_0..s_{2n-1}.
inline MomentSequence solve_prescribed(const std::vector<Rational>& t,
                                       const std::vector<Rational>& t_prime) {
    if (t.size() != t_prime.size())
        throw IndexOutOfRange("solve_prescribed needs lists of equal length");
    for (std::size_t n = 0; n < t.size(); ++n)
        if (is_zero(t[n])) throw ZeroTarget(n);
    const std::size_t count = t.size();
    std::vector<Rational> s;
    s.reserve(2 * count);
    for (std::size_t n = 0; n < count; ++n) {
        if (n == 0) {
            s.push_back(t[0]);
            s.push_back(t_prime[0]);
            continue;
        }
        // Columns 0..n-1 of H_n; minor D_n^{n-k,n+1} drops row n-k (1-based).
        Matrix<Rational> block(n + 1, n);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j < n; ++j) block(i, j) = s[i + j];
        std::vector<Rational> signed_minors(n);
        for (std::size_t k = 0; k < n; ++k) {
            Matrix<Rational> minor(n, n);
            const std::size_t dropped = n - k - 1;
            for (std::size_t i = 0, r = 0; i <= n; ++i) {
                if (i == dropped) continue;
                for (std::size_t j = 0; j < n; ++j) minor(r, j) = block(i, j);
                ++r;
            }
            signed_minors[k] = detail::minus_one_pow(k) * determinant(minor);
        }
        Rational f = 0;
        for (std::size_t k = 0; k < n; ++k) f += s[2 * n - 1 - k] * signed_minors[k];
        s.push_back((t[n] + f) / t[n - 1]);
        Rational g = 0;
        for (std::size_t k = 0; k < n; ++k) g += s[2 * n - k] * signed_minors[k];
        s.push_back((t_prime[n] + g) / t[n - 1]);
    }
    return MomentSequence(std::move(s));
}

/// Inverts jacobi_from_moments: D_n = prod_k b_k^{n+1-k},
/// D'_{n+1} = (sum_{k<=n} a_k) D_n, then solve_prescribed.
inline MomentSequence moments_from_jacobi(const JacobiCoeffs& j) {
    if (j.a.size() != j.b.size())
        throw IndexOutOfRange("jacobi coefficient lists differ in length");
    for (std::size_t k = 0; k < j.b.size(); ++k)
        if (is_zero(j.b[k])) throw ZeroB(k);
    std::vector<Rational> t, t_prime;
    Rational a_sum = 0;
    for (std::size_t n = 0; n < j.size(); ++n) {
        Rational d = 1;
        for (std::size_t k = 0; k <= n; ++k) d *= pow(j.b[k], static_cast<unsigned>(n + 1 - k));
        a_sum += j.a[n];
        t.push_back(d);
        t_prime.push_back(a_sum * d);
    }
    return solve_prescribed(t, t_prime);
}

/// D_{n-1} D_n x P_n - D_{n-1}^2 P_{n+1} - (D_{n-1} D'_{n+1} - D_n D'_n) P_n
/// - D_n^2 P_{n-1}; identically zero by the three-term determinant recurrence.
inline RationalPolynomial frobenius_recurrence_residual(const MomentSequence& s, std::size_t n) {
    require_index(s, 2 * n + 1, "frobenius_recurrence_residual");
    const auto sn = static_cast<std::ptrdiff_t>(n);
    const Rational d_prev = detail::det_or_one(s, sn - 1);
    const Rational d_n = hankel_det(s, n);
    const Rational shifted_next = shifted_det(s, n); // D'_{n+1}
    const Rational shifted_n = detail::shifted_or_zero(s, n);
    const RationalPolynomial p_n = poly_P(s, n);
    const RationalPolynomial p_next = poly_P(s, n + 1);
    const RationalPolynomial p_prev = n == 0 ? RationalPolynomial{} : poly_P(s, n - 1);
    return p_n.shifted(1) * (d_prev * d_n) - p_next * (d_prev * d_prev) -
           p_n * (d_prev * shifted_next - d_n * shifted_n) - p_prev * (d_n * d_n);
}

} // namespace hankel

#endif
