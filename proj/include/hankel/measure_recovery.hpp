#ifndef HANKEL_MEASURE_RECOVERY_HPP
#define HANKEL_MEASURE_RECOVERY_HPP

// Recovery of the finitely supported measure behind a positive definite
// moment prefix that goes flat: D_0, ..., D_{r-1} > 0 and D_n = 0 for
// n >= r. The atoms are the (real, simple) zeros of P_r and the weights
// the residues of Q_r / P_r.

#include <hankel/errors.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/hankel_poly.hpp>
#include <hankel/kronecker_rank.hpp>
#include <hankel/polynomial.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

/// The prefix is not of the positive definite, eventually flat kind. The
/// index names the first offending determinant when there is one.
class NotPSDFlat : public IndexedError {
public:
    NotPSDFlat(std::size_t n, std::optional<Rational> value, const std::string& why)
        : IndexedError("NotPSDFlat", n,
                       why + (value ? " (D_" + std::to_string(n) + " = " + to_string(*value) + ")"
                                    : std::string())),
          value_(std::move(value)) {}

    const std::optional<Rational>& value() const noexcept { return value_; }

private:
    std::optional<Rational> value_;
};

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Atom {
    BigFloat location;
    Interval enclosure;
    /// Q_r(lambda) / P_r'(lambda).
    BigFloat weight;
    /// 1 / sum_{k<r} P_k(lambda)^2 / (D_k D_{k-1}); must agree with `weight`.
    BigFloat weight_check;
};

struct DiscreteMeasure {
    std::vector<Atom> atoms;
    unsigned precision_bits = kDefaultPrecisionBits;

    std::size_t r() const noexcept { return atoms.size(); }
};

/// Returns r when D_0..D_{r-1} > 0, every later computable D_n vanishes and
/// the prefix is certified to have finite rank r.
inline std::size_t psd_finite_rank_check(const MomentSequence& s) {
    if (!s.is_nonzero()) throw ZeroSequence();
    const DeterminantProfile profile = determinant_transform(s);
    const auto& d = profile.d_values;
    std::size_t r = 0;
    while (r < d.size() && d[r].sign() > 0) ++r;
    if (r == d.size())
        throw NotPSDFlat(r, std::nullopt,
                         "no determinant vanishes within the prefix of " +
                             std::to_string(s.size()) + " terms");
    if (d[r].sign() < 0) throw NotPSDFlat(r, d[r], "negative Hankel determinant");
    if (r == 0) throw NotPSDFlat(0, d[0], "D_0 = s_0 must be positive");
    for (std::size_t n = r + 1; n < d.size(); ++n)
        if (!is_zero(d[n])) throw NotPSDFlat(n, d[n], "nonzero determinant after the flat point");
    const RankCertificate cert = hankel_rank(s);
    if (cert.verdict != RankVerdict::FiniteRank || cert.rank != r)
        throw NotPSDFlat(r, std::nullopt,
                         "the prefix is too short to certify rank " + std::to_string(r));
    return r;
}

namespace detail {

inline std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
    std::vector<RationalPolynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        auto rem = divmod(chain[chain.size() - 2], chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back(-rem);
    }
    return chain;
}

inline std::size_t sign_changes(const std::vector<RationalPolynomial>& chain, const Rational& x) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int sg = q.evaluate(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

inline Rational cauchy_bound(const RationalPolynomial& p) {
    Rational sum = 0;
    const std::size_t r = *p.degree();
    for (std::size_t k = 0; k < r; ++k) sum += abs(p.coeff(k) / p.leading());
    return sum > 1 ? sum : Rational(1);
}

} // namespace detail

/// Disjoint rational intervals, one per distinct real zero of p, in
/// increasing order, each of width at most 2^-bits * max(1, B) where B is
/// the Cauchy bound. Throws RootCountMismatch unless p has deg p distinct
/// real zeros.
inline std::vector<Interval> isolate_real_roots(const RationalPolynomial& p,
                                                unsigned bits = kDefaultPrecisionBits) {
    if (p.is_zero() || *p.degree() == 0)
        throw DegreeViolation("root isolation needs a polynomial of positive degree");
    const std::size_t degree = *p.degree();
    const auto chain = detail::sturm_chain(p);
    const Rational bound = detail::cauchy_bound(p);
    auto count = [&](const Rational& a, const Rational& b) {
        return detail::sign_changes(chain, a) - detail::sign_changes(chain, b);
    };

    // Sturm counts roots in half-open intervals (a, b].
    std::vector<Interval> isolated;
    std::vector<std::pair<Interval, std::size_t>> work;
    const Interval start{-bound - 1, bound + 1};
    const std::size_t total = count(start.lo, start.hi);
    if (total != degree) throw RootCountMismatch(total, degree);
    work.push_back({start, total});
    while (!work.empty()) {
        auto [iv, n] = work.back();
        work.pop_back();
        if (n == 0) continue;
        if (n == 1) {
            isolated.push_back(iv);
            continue;
        }
        const Rational mid = (iv.lo + iv.hi) / 2;
        const std::size_t left = count(iv.lo, mid);
        work.push_back({{mid, iv.hi}, n - left});
        work.push_back({{iv.lo, mid}, left});
    }
    std::sort(isolated.begin(), isolated.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    Rational target = Rational(1) / pow(Rational(2), bits);
    target *= bound;
    for (auto& iv : isolated) {
        // Exactly one simple root in (lo, hi]; track the sign at hi.
        const int sign_hi = p.evaluate(iv.hi).sign();
        if (sign_hi == 0) {
            iv.lo = iv.hi;
            continue;
        }
        while (iv.width() > target) {
            const Rational mid = (iv.lo + iv.hi) / 2;
            const int sg = p.evaluate(mid).sign();
            if (sg == 0) {
                iv = {mid, mid};
                break;
            }
            if (sg == sign_hi) iv.hi = mid;
            else iv.lo = mid;
        }
    }
    return isolated;
}

namespace detail {

inline BigFloat midpoint(const Interval& iv, unsigned bits) {
    return BigFloat((iv.lo + iv.hi) / 2, bits);
}

} // namespace detail

inline DiscreteMeasure recover_measure(const MomentSequence& s,
                                       unsigned bits = kDefaultPrecisionBits) {
    const std::size_t r = psd_finite_rank_check(s);
    PrecisionScope scope(bits);
    const RationalPolynomial p = poly_P(s, r);
    const RationalPolynomial dp = p.derivative();
    const RationalPolynomial q = poly_Q(s, r);
    std::vector<RationalPolynomial> lower;
    std::vector<Rational> scale; // D_k D_{k-1}
    for (std::size_t k = 0; k < r; ++k) {
        lower.push_back(poly_P(s, k));
        scale.push_back(hankel_det(s, k) * detail::det_or_one(s, static_cast<std::ptrdiff_t>(k) - 1));
    }

    DiscreteMeasure m;
    m.precision_bits = bits;
    const BigFloat tolerance = ldexp(BigFloat(1L, bits), -static_cast<long>(bits / 2));
    const auto intervals = isolate_real_roots(p, bits);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        Atom atom;
        atom.enclosure = intervals[i];
        atom.location = detail::midpoint(intervals[i], bits);
        const BigFloat& x = atom.location;
        atom.weight = q.evaluate(x) / dp.evaluate(x);
        BigFloat sum(0L, bits);
        for (std::size_t k = 0; k < r; ++k) {
            const BigFloat v = lower[k].evaluate(x);
            sum += v * v / BigFloat(scale[k], bits);
        }
        atom.weight_check = BigFloat(1L, bits) / sum;
        if (atom.weight.sign() <= 0 || atom.weight_check.sign() <= 0) throw NonPositiveWeight(i);
        if (abs(atom.weight - atom.weight_check) > tolerance * abs(atom.weight_check))
            throw WeightMismatch(i, "residue and Christoffel weights of atom " + std::to_string(i) +
                                        " disagree: " + atom.weight.to_string(20) + " vs " +
                                        atom.weight_check.to_string(20));
        m.atoms.push_back(std::move(atom));
    }
    return m;
}

struct MomentCheck {
    /// max_n |sum_k mu_k lambda_k^n - s_n|.
    BigFloat residual;
    bool passed = false;
};

/// Compares the moments of `m` with s_0..s_M. Evaluated with 64 guard bits
/// over the measure's precision.
inline MomentCheck verify_moments(const DiscreteMeasure& m, const MomentSequence& s,
                                  const Rational& tol) {
    const unsigned bits = m.precision_bits + 64;
    PrecisionScope scope(bits);
    std::vector<BigFloat> power;
    for (const auto& a : m.atoms) power.push_back(a.weight.with_precision(bits));
    BigFloat worst(0L, bits);
    for (std::size_t n = 0; n < s.size(); ++n) {
        BigFloat sum(0L, bits);
        for (std::size_t k = 0; k < m.atoms.size(); ++k) {
            sum += power[k];
            power[k] *= m.atoms[k].location.with_precision(bits);
        }
        worst = max(worst, abs(sum - BigFloat(s[n], bits)));
    }
    return {worst, worst <= BigFloat(tol, bits)};
}

/// P_r' P_{r-1} - P_r P_{r-1}' - D_{r-1}^2 sum_{k<r} P_k^2 / (D_k D_{k-1});
/// the zero polynomial for any quasi-definite prefix.
inline RationalPolynomial cd_identity_residual(const MomentSequence& s, std::size_t r) {
    if (r == 0) throw IndexOutOfRange("cd_identity_residual needs r >= 1");
    require_index(s, 2 * r - 1, "cd_identity_residual");
    std::vector<Rational> d(r);
    for (std::size_t k = 0; k < r; ++k) {
        d[k] = hankel_det(s, k);
        if (is_zero(d[k])) throw NotQuasiDefinite(k);
    }
    RationalPolynomial sum;
    for (std::size_t k = 0; k < r; ++k) {
        const RationalPolynomial pk = poly_P(s, k);
        const Rational below = k == 0 ? Rational(1) : d[k - 1];
        sum += pk * pk * (Rational(1) / (d[k] * below));
    }
    const RationalPolynomial p = poly_P(s, r), prev = poly_P(s, r - 1);
    return p.derivative() * prev - p * prev.derivative() - sum * (d[r - 1] * d[r - 1]);
}

/// P_{r-1}(lambda) Q_r(lambda) - D_{r-1}^2 at a recovered atom; vanishes at
/// every exact zero of P_r.
inline BigFloat kronecker_root_residual(const MomentSequence& s, std::size_t r, const BigFloat& x) {
    PrecisionScope scope(x.precision());
    const Rational d = hankel_det(s, r - 1);
    return poly_P(s, r - 1).evaluate(x) * poly_Q(s, r).evaluate(x) - BigFloat(d * d, x.precision());
}

} // namespace hankel

#endif
