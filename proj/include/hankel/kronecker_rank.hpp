#ifndef HANKEL_KRONECKER_RANK_HPP
#define HANKEL_KRONECKER_RANK_HPP

// Finite rank of the infinite Hankel matrix, certified on a finite prefix,
// and the generating rational function Q_r / P_r.

#include <hankel/errors.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/hankel_poly.hpp>
#include <hankel/iohvidov.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hankel {

enum class RankVerdict { FiniteRank, RankAtLeast, ZeroSequence };

inline const char* to_string(RankVerdict v) {
    switch (v) {
    case RankVerdict::FiniteRank: return "FiniteRank";
    case RankVerdict::RankAtLeast: return "RankAtLeast";
    case RankVerdict::ZeroSequence: return "ZeroSequence";
    }
    return "?";
}

/// FiniteRank r means: D_{r-1} != 0, every computable D_n with n >= r
/// vanishes, and D_{r-1} s_{r+m} + sum_k p_{r,k} s_{k+m} = 0 for every m
/// with r + m <= M, with at least one m >= r actually checked. Nothing is
/// claimed beyond `horizon` terms.
struct RankCertificate {
    RankVerdict verdict = RankVerdict::ZeroSequence;
    std::size_t rank = 0;
    std::size_t horizon = 0;
    std::optional<ApproxRecurrence> witness;
    DeterminantProfile d_profile;
};

/// D_{r-1} s_{r+m} + sum_k p_{r,k} s_{k+m} = 0 for all m with r+m <= M.
inline bool check_recurrence(const MomentSequence& s, std::size_t r) {
    if (r == 0) return !s.is_nonzero();
    require_index(s, 2 * r - 1, "check_recurrence");
    const Rational d_prev = hankel_det(s, r - 1);
    if (is_zero(d_prev)) return false;
    const RationalPolynomial p = poly_P(s, r);
    for (std::size_t m = 0; r + m <= s.max_index(); ++m) {
        Rational acc = d_prev * s[r + m];
        for (std::size_t k = 0; k < r; ++k) acc += p.coeff(k) * s[k + m];
        if (!is_zero(acc)) return false;
    }
    return true;
}

inline RankCertificate hankel_rank(const MomentSequence& s) {
    RankCertificate cert;
    cert.horizon = s.size();
    if (!s.is_nonzero()) return cert;
    cert.d_profile = determinant_transform(s);

    std::size_t r_star = 0;
    for (std::size_t n = 0; n < cert.d_profile.d_values.size(); ++n)
        if (!is_zero(cert.d_profile.d_values[n])) r_star = n + 1;

    // A nonzero sequence has rank at least one even when no computable D_n
    // is nonzero.
    cert.rank = std::max<std::size_t>(r_star, 1);
    cert.verdict = RankVerdict::RankAtLeast;
    if (r_star >= 1 && 2 * r_star <= s.max_index() && check_recurrence(s, r_star)) {
        cert.verdict = RankVerdict::FiniteRank;
        cert.witness = recurrence_coeffs(s, r_star);
    }
    return cert;
}

/// Q_r(x) / P_r(x) = sum_k s_k / x^{k+1} as formal series, when rank r.
struct RationalForm {
    RationalPolynomial p;
    RationalPolynomial q;

    friend bool operator==(const RationalForm&, const RationalForm&) = default;
};

inline RationalForm rational_form(const MomentSequence& s, std::size_t r) {
    if (r == 0) throw IndexOutOfRange("rational_form needs r >= 1");
    require_index(s, 2 * r - 1, "rational_form");
    if (is_zero(hankel_det(s, r - 1))) throw SingularLeadingMinor(r);
    return {poly_P(s, r), poly_Q(s, r)};
}

/// Coefficients a_0..a_{last} of q/p = sum_m a_m / x^{m+1}. The first r are
/// fixed by the triangular system q_{r-1-m} = sum_{k<=m} p_{r-m+k} a_k, the
/// rest by sum_k p_k a_{k+m} = 0.
inline MomentSequence expand_rational(const RationalForm& rf, std::size_t last) {
    if (rf.p.is_zero()) throw DegreeViolation("denominator is the zero polynomial");
    const std::size_t r = *rf.p.degree();
    if (!rf.q.is_zero() && *rf.q.degree() >= r)
        throw DegreeViolation("deg q = " + std::to_string(*rf.q.degree()) +
                              " is not below deg p = " + std::to_string(r));
    const Rational& lead = rf.p.leading();
    std::vector<Rational> a;
    a.reserve(last + 1);
    for (std::size_t m = 0; m <= last; ++m) {
        Rational acc = 0;
        if (m < r) {
            acc = rf.q.coeff(r - 1 - m);
            for (std::size_t k = 0; k < m; ++k) acc -= rf.p.coeff(r - m + k) * a[k];
        } else {
            for (std::size_t k = 0; k < r; ++k) acc -= rf.p.coeff(k) * a[m - r + k];
        }
        a.push_back(acc / lead);
    }
    return MomentSequence(std::move(a));
}

// The four equivalent characterisations of rank r, as independent checks on
// the prefix. Each requires 2r-1 <= M.

/// s coincides with its approximating sequence s^(r) on the prefix.
inline bool check_matches_approx(const MomentSequence& s, std::size_t r) {
    require_index(s, 2 * r - 1, "check_matches_approx");
    if (is_zero(hankel_det(s, r - 1))) return false;
    return approx_sequence(s, r, s.max_index()) == s;
}

/// D_{r-1} != 0 and D_n = 0 for every computable n >= r. Only constrains
/// the terms up to 2N where N is the last computable index.
inline bool check_determinants_vanish(const MomentSequence& s, std::size_t r) {
    require_index(s, 2 * r - 1, "check_determinants_vanish");
    if (is_zero(hankel_det(s, r - 1))) return false;
    for (std::size_t n = r; 2 * n <= s.max_index(); ++n)
        if (!is_zero(hankel_det(s, n))) return false;
    return true;
}

/// Expanding Q_r / P_r reproduces the prefix.
inline bool check_rational_expansion(const MomentSequence& s, std::size_t r) {
    require_index(s, 2 * r - 1, "check_rational_expansion");
    if (is_zero(hankel_det(s, r - 1))) return false;
    return expand_rational(rational_form(s, r), s.max_index()) == s;
}

/// max_{k in tail half} |s_k|^{1/k}; a finite-sample proxy for
/// limsup |s_k|^{1/k}, not a bound.
inline BigFloat growth_estimate(const MomentSequence& s, unsigned bits = kDefaultPrecisionBits) {
    if (s.size() < 8) throw IndexOutOfRange("growth_estimate needs at least 8 terms");
    PrecisionScope scope(bits);
    BigFloat best(0L, bits);
    for (std::size_t k = s.size() / 2; k < s.size(); ++k) {
        if (is_zero(s[k])) continue;
        best = max(best, root(BigFloat(abs(s[k]), bits), static_cast<unsigned>(k)));
    }
    return best;
}

} // namespace hankel

#endif
