#ifndef HANKEL_IOHVIDOV_HPP
#define HANKEL_IOHVIDOV_HPP

// The approximating sequence s^(r): the unique rank-r extension of
// s_0..s_{2r-1} (defined whenever D_{r-1} != 0), its recurrence, the
// characteristic d_r, the gap determinant identities, and the structure of
// the Hankel determinant polynomials P_n.

#include <hankel/errors.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/hankel_poly.hpp>
#include <hankel/matrix.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

/// s^(r)_{r+m} = sum_k d_k s^(r)_{k+m} for all m >= 0.
template <Scalar T>
struct BasicApproxRecurrence {
    std::size_t r = 0;
    std::vector<T> d;

    friend bool operator==(const BasicApproxRecurrence&, const BasicApproxRecurrence&) = default;
};

using ApproxRecurrence = BasicApproxRecurrence<Rational>;

/// Solves (s_{i+j})_{i,j<r} d = (s_r, ..., s_{2r-1}). Exact solutions are
/// cross-checked against d_k = -p_{r,k} / D_{r-1}.
template <Scalar T>
BasicApproxRecurrence<T> recurrence_coeffs(const BasicMomentSequence<T>& s, std::size_t r) {
    if (r == 0) throw IndexOutOfRange("recurrence_coeffs needs r >= 1");
    require_index(s, 2 * r - 1, "recurrence_coeffs");
    const Matrix<T> h = hankel_matrix(s, r - 1);
    std::vector<T> rhs(r);
    for (std::size_t i = 0; i < r; ++i) rhs[i] = s[r + i];

    BasicApproxRecurrence<T> out{r, {}};
    if constexpr (is_exact_v<T>) {
        const Rational d_prev = determinant(h);
        if (is_zero(d_prev)) throw SingularLeadingMinor(r);
        out.d = solve(h, rhs);
        const RationalPolynomial p = poly_P(s, r);
        for (std::size_t k = 0; k < r; ++k)
            if (out.d[k] != -p.coeff(k) / d_prev)
                throw std::logic_error("recurrence coefficients disagree with P_r");
    } else {
        try {
            out.d = solve(h, rhs);
        } catch (const SingularMatrix&) {
            throw SingularLeadingMinor(r);
        }
    }
    return out;
}

/// Extends s_0..s_{2r-1} by the recurrence to s^(r)_0..s^(r)_{last}.
template <Scalar T>
BasicMomentSequence<T> approx_sequence(const BasicMomentSequence<T>& s,
                                       const BasicApproxRecurrence<T>& rec, std::size_t last) {
    const std::size_t r = rec.r;
    if (last + 1 < 2 * r)
        throw IndexOutOfRange("approx_sequence output must keep s_0..s_{2r-1}");
    require_index(s, 2 * r - 1, "approx_sequence");
    std::vector<T> out(s.terms().begin(), s.terms().begin() + 2 * r);
    out.reserve(last + 1);
    for (std::size_t j = 2 * r; j <= last; ++j) {
        T acc(0);
        for (std::size_t k = 0; k < r; ++k) acc += rec.d[k] * out[j - r + k];
        out.push_back(std::move(acc));
    }
    return BasicMomentSequence<T>(std::move(out));
}

template <Scalar T>
BasicMomentSequence<T> approx_sequence(const BasicMomentSequence<T>& s, std::size_t r,
                                       std::size_t last) {
    return approx_sequence(s, recurrence_coeffs(s, r), last);
}

/// d_{n,0}..d_{n,r-1} with s^(r)_{r+n+m} = sum_k d_{n,k} s^(r)_{k+m}: the
/// first row of the (n+1)-th power of the companion matrix.
inline std::vector<Rational> shifted_recurrence_coeffs(const ApproxRecurrence& rec,
                                                       const MomentSequence& s, std::size_t n) {
    const std::size_t r = rec.r;
    require_index(s, 2 * r - 1, "shifted_recurrence_coeffs");
    for (std::size_t m = 0; m < r; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < r; ++k) acc += rec.d[k] * s[k + m];
        if (acc != s[r + m])
            throw std::invalid_argument("recurrence does not generate the given sequence");
    }
    // Acts on (s_{m+r-1}, ..., s_m)^T.
    Matrix<Rational> companion(r, r);
    for (std::size_t c = 0; c < r; ++c) companion(0, c) = rec.d[r - 1 - c];
    for (std::size_t i = 1; i < r; ++i) companion(i, i - 1) = 1;

    Matrix<Rational> power = companion;
    for (std::size_t i = 0; i < n; ++i) power = power * companion;
    std::vector<Rational> out(r);
    for (std::size_t k = 0; k < r; ++k) out[k] = power(0, r - 1 - k);
    return out;
}

/// The characteristic d_r restricted to a finite prefix: either the first
/// m with s_{2r+m} != s^(r)_{2r+m}, or "no mismatch within `horizon` terms".
struct Characteristic {
    std::optional<std::size_t> value;
    std::size_t horizon = 0;

    bool exceeds_horizon() const noexcept { return !value.has_value(); }
    friend bool operator==(const Characteristic&, const Characteristic&) = default;
};

inline Characteristic characteristic(const MomentSequence& s, std::size_t r) {
    const auto approx = approx_sequence(s, r, s.max_index());
    for (std::size_t j = 2 * r; j < s.size(); ++j)
        if (s[j] != approx[j]) return {j - 2 * r, s.size()};
    return {std::nullopt, s.size()};
}

/// D_{r+d} from the gap identity
///   D_{r+d} = (-1)^{d(d+1)/2} (s_{2r+d} - s^(r)_{2r+d})^{d+1} D_{r-1},
/// after checking D_r = ... = D_{r+d-1} = 0 through the equivalent
/// agreement s_{2r+j} = s^(r)_{2r+j}, j < d.
inline Rational gap_determinant(const MomentSequence& s, std::size_t r, std::size_t d) {
    require_index(s, 2 * (r + d), "gap_determinant");
    const ApproxRecurrence rec = recurrence_coeffs(s, r);
    const auto approx = approx_sequence(s, rec, 2 * r + d);
    for (std::size_t j = 0; j < d; ++j)
        if (s[2 * r + j] != approx[2 * r + j]) throw GapHypothesisViolated(r + j);
    const Rational jump = s[2 * r + d] - approx[2 * r + d];
    const Rational sign_factor = ((d * (d + 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
    return sign_factor * pow(jump, static_cast<unsigned>(d + 1)) * hankel_det(s, r - 1);
}

/// D'_{r+1} = (s_{2r+1} - s^(r)_{2r+1}) D_{r-1} - (s_{2r} - s^(r)_{2r}) D'_r.
inline Rational shifted_gap_det(const MomentSequence& s, std::size_t r) {
    require_index(s, 2 * r + 1, "shifted_gap_det");
    const ApproxRecurrence rec = recurrence_coeffs(s, r);
    const auto approx = approx_sequence(s, rec, 2 * r + 1);
    return (s[2 * r + 1] - approx[2 * r + 1]) * hankel_det(s, r - 1) -
           (s[2 * r] - approx[2 * r]) * shifted_det(s, r - 1);
}

// ---------------------------------------------------------------------------
// Structure of the sequence P_0, P_1, ...

enum class PolyKind { FullDegree, Zero, Proportional, Irregular };

inline const char* to_string(PolyKind kind) {
    switch (kind) {
    case PolyKind::FullDegree: return "full";
    case PolyKind::Zero: return "zero";
    case PolyKind::Proportional: return "proportional";
    case PolyKind::Irregular: return "irregular";
    }
    return "?";
}

struct PolyClass {
    std::size_t n = 0;
    PolyKind kind = PolyKind::Irregular;
    /// For Proportional: P_n = factor * P_{reference}.
    std::optional<Rational> factor;
    std::size_t reference = 0;
};

/// P_{n_{k+1}-1} = gamma * P_{n_k} for a gap n_{k+1} - n_k >= 2.
struct GapProportionality {
    std::size_t k = 0;
    std::size_t index = 0;
    std::size_t reference = 0;
    Rational gamma;
};

/// p_{n_{k+1}} = a_k p_{n_k} - beta_k p_{n_{k-1}} between monic full-degree
/// polynomials, with p_{n_{-1}} = 0 (so beta_0 is not determined).
struct BlockRecurrence {
    std::size_t k = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    RationalPolynomial a;
    std::optional<Rational> beta;
    bool consistent = false;
};

struct StructureReport {
    std::vector<std::size_t> full_degree_indices;
    std::vector<GapProportionality> gamma;
    std::vector<BlockRecurrence> block_polys;
    /// Inclusive index ranges where P_n is identically zero.
    std::vector<std::pair<std::size_t, std::size_t>> zero_blocks;
    std::vector<PolyClass> classes;
    /// Every P_n after the last full-degree index, and every D_n from that
    /// index on, vanishes within the horizon.
    bool tail_zero = false;
    /// Largest n for which P_n was computed.
    std::size_t horizon = 0;
    /// Number of sequence terms the report is based on.
    std::size_t terms = 0;
};

namespace detail {

/// c with p = c * q, if it exists (q nonzero).
inline std::optional<Rational> proportionality(const RationalPolynomial& p,
                                               const RationalPolynomial& q) {
    if (p.is_zero() || p.degree() != q.degree()) return std::nullopt;
    const Rational c = p.leading() / q.leading();
    if (p != q * c) return std::nullopt;
    return c;
}

} // namespace detail

inline StructureReport degree_profile(const MomentSequence& s) {
    if (!s.is_nonzero()) throw ZeroSequence();
    StructureReport report;
    report.terms = s.size();
    report.horizon = (s.max_index() + 1) / 2;

    std::vector<RationalPolynomial> polys;
    for (std::size_t n = 0; n <= report.horizon; ++n) polys.push_back(poly_P(s, n));

    std::size_t last_full = 0;
    for (std::size_t n = 0; n <= report.horizon; ++n) {
        PolyClass c{n, PolyKind::Irregular, std::nullopt, 0};
        if (polys[n].degree() == n) {
            c.kind = PolyKind::FullDegree;
            report.full_degree_indices.push_back(n);
            last_full = n;
        } else if (polys[n].is_zero()) {
            c.kind = PolyKind::Zero;
        } else if (auto f = detail::proportionality(polys[n], polys[last_full])) {
            c.kind = PolyKind::Proportional;
            c.factor = *f;
            c.reference = last_full;
        }
        report.classes.push_back(std::move(c));
    }

    for (std::size_t n = 0; n <= report.horizon; ++n) {
        if (report.classes[n].kind != PolyKind::Zero) continue;
        if (!report.zero_blocks.empty() && report.zero_blocks.back().second + 1 == n)
            report.zero_blocks.back().second = n;
        else
            report.zero_blocks.emplace_back(n, n);
    }

    const auto& idx = report.full_degree_indices;
    auto monic_p = [&](std::size_t n) { return polys[n].monic(); };
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const std::size_t lo = idx[k], hi = idx[k + 1];
        if (hi - lo >= 2) {
            GapProportionality g{k, hi - 1, lo, Rational(0)};
            if (auto f = detail::proportionality(polys[hi - 1], polys[lo])) g.gamma = *f;
            report.gamma.push_back(std::move(g));
        }
        auto [quotient, remainder] = divmod(monic_p(hi), monic_p(lo));
        BlockRecurrence block{k, lo, hi, std::move(quotient), std::nullopt, false};
        if (k == 0) {
            block.consistent = remainder.is_zero();
        } else {
            const RationalPolynomial prev = monic_p(idx[k - 1]);
            if (!remainder.is_zero() && remainder.degree() == prev.degree()) {
                const Rational beta = -remainder.leading();
                if (remainder == prev * Rational(-beta)) {
                    block.beta = beta;
                    block.consistent = true;
                }
            }
        }
        block.consistent = block.consistent && block.a.degree() == hi - lo;
        report.block_polys.push_back(std::move(block));
    }

    if (last_full < report.horizon) {
        bool tail = true;
        for (std::size_t n = last_full + 1; n <= report.horizon && tail; ++n)
            tail = polys[n].is_zero();
        for (std::size_t n = last_full; 2 * n <= s.max_index() && tail; ++n)
            tail = is_zero(hankel_det(s, n));
        report.tail_zero = tail;
    }
    return report;
}

} // namespace hankel

#endif
