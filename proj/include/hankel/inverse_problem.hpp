#ifndef HANKEL_INVERSE_PROBLEM_HPP
#define HANKEL_INVERSE_PROBLEM_HPP

// The inverse determinant problem: given t_0..t_N, find s_0..s_{2N} with
// D_n(s) = t_n for every n <= N.
//
// Solvability is decided by sign conditions on the nonzero targets. The
// construction walks the support n_0 < n_1 < ... of t and, between two
// consecutive support indices, forces s to agree with the approximating
// sequence until the single entry that fixes the next nonzero determinant.

#include <hankel/errors.hpp>
#include <hankel/hankel_core.hpp>
#include <hankel/iohvidov.hpp>
#include <hankel/scalar.hpp>
#include <hankel/sequence.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace hankel {

/// Targets t_0..t_N with their support {n : t_n != 0}.
class TargetSequence {
public:
    TargetSequence() = default;
    explicit TargetSequence(std::vector<Rational> terms) : terms_(std::move(terms)) {
        for (std::size_t n = 0; n < terms_.size(); ++n)
            if (!is_zero(terms_[n])) support_.push_back(n);
    }
    TargetSequence(std::initializer_list<Rational> terms)
        : TargetSequence(std::vector<Rational>(terms)) {}

    std::size_t size() const noexcept { return terms_.size(); }
    const Rational& operator[](std::size_t n) const { return terms_[n]; }
    const std::vector<Rational>& terms() const noexcept { return terms_; }
    const std::vector<std::size_t>& support() const noexcept { return support_; }

private:
    std::vector<Rational> terms_;
    std::vector<std::size_t> support_;
};

/// One sign condition. For k = 0 it reads (-1)^{(n_0+1)/2} t_{n_0} > 0 and
/// applies when n_0 + 1 is even; for k >= 1 it reads
/// (-1)^{g/2} t_{n_k} t_{n_{k-1}} > 0 with an even gap g = n_k - n_{k-1}.
struct DeltaCondition {
    std::size_t k = 0;
    /// The support index n_k whose target is constrained.
    std::size_t index = 0;
    /// n_0 + 1 for k = 0, n_k - n_{k-1} otherwise.
    std::size_t gap = 0;
    Rational value;
};

struct SolvabilityReport {
    bool solvable = true;
    std::vector<std::size_t> support;
    std::vector<DeltaCondition> deltas;
    std::optional<DeltaCondition> violation;
};

inline SolvabilityReport frobenius_check(const TargetSequence& t) {
    SolvabilityReport report;
    report.support = t.support();
    const auto& sup = report.support;
    auto sign_of_half = [](std::size_t even) { return (even / 2) % 2 == 0 ? 1 : -1; };
    for (std::size_t k = 0; k < sup.size(); ++k) {
        DeltaCondition c;
        c.k = k;
        c.index = sup[k];
        if (k == 0) {
            c.gap = sup[0] + 1;
            if (c.gap % 2 != 0) continue;
            c.value = t[sup[0]] * sign_of_half(c.gap);
        } else {
            c.gap = sup[k] - sup[k - 1];
            if (c.gap % 2 != 0) continue;
            c.value = t[sup[k]] * t[sup[k - 1]] * sign_of_half(c.gap);
        }
        const bool ok = c.value.sign() > 0;
        report.deltas.push_back(c);
        if (!ok && !report.violation) {
            report.violation = c;
            report.solvable = false;
        }
    }
    return report;
}

/// How the entries left free by the construction are filled.
struct FreePolicy {
    enum class Kind { Zeros, Seed };
    Kind kind = Kind::Zeros;
    std::uint64_t seed = 0;

    static FreePolicy zeros() { return {}; }
    static FreePolicy seeded(std::uint64_t seed) { return {Kind::Seed, seed}; }

    /// "zeros" or "seed:<u64>".
    static FreePolicy parse(const std::string& text) {
        if (text == "zeros") return zeros();
        const std::string prefix = "seed:";
        if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
            const std::string digits = text.substr(prefix.size());
            if (detail::is_digits(digits)) {
                try {
                    return seeded(std::stoull(digits));
                } catch (const std::out_of_range&) {
                }
            }
        }
        throw ParseError("unknown free-entry policy '" + text + "'");
    }

    std::string to_string() const {
        return kind == Kind::Zeros ? "zeros" : "seed:" + std::to_string(seed);
    }
};

struct InverseOptions {
    unsigned precision_bits = kDefaultPrecisionBits;
    /// Accept BigFloat solutions with |D_n - t_n| <= tol * max(1, |t_n|).
    Rational tol = Rational(1, 1) / Rational(pow(Rational(10), 30));
};

enum class SolutionMode { Exact, BigFloat };

inline const char* to_string(SolutionMode m) {
    return m == SolutionMode::Exact ? "exact" : "bigfloat";
}

/// A constructed s together with its recomputed determinants.
struct InverseSolution {
    SolutionMode mode = SolutionMode::Exact;
    std::variant<MomentSequence, RealMomentSequence> s;
    std::variant<std::vector<Rational>, std::vector<BigFloat>> certificate;
    /// max_n |D_n(s) - t_n| / max(1, |t_n|); zero in exact mode.
    BigFloat max_residual;
    unsigned precision_bits = 0;

    const MomentSequence& exact() const { return std::get<MomentSequence>(s); }
    const RealMomentSequence& real() const { return std::get<RealMomentSequence>(s); }
};

namespace detail {

class FreeValues {
public:
    explicit FreeValues(const FreePolicy& policy) : policy_(policy), rng_(policy.seed) {}

    Rational next() {
        if (policy_.kind == FreePolicy::Kind::Zeros) return 0;
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
        const int p = num(rng_);
        return Rational(p, den(rng_));
    }

private:
    FreePolicy policy_;
    std::mt19937_64 rng_;
};

/// Runs the construction in scalar type T. `root(x, k)` must return the real
/// k-th root of the rational x (the positive one for even k), or nullopt
/// when it is not representable in T.
template <Scalar T, class RootFn>
std::optional<std::vector<T>> construct_inverse(const TargetSequence& t, FreeValues free,
                                                RootFn root) {
    const std::size_t big_n = t.size() - 1;
    const std::size_t len = 2 * big_n + 1;
    const auto& sup = t.support();
    std::vector<T> s;
    s.reserve(len);
    auto push_free_until = [&](std::size_t last) {
        while (s.size() <= last) s.push_back(from_rational<T>(free.next()));
    };
    if (sup.empty()) {
        s.assign(len, T(0));
        return s;
    }

    const std::size_t n0 = sup[0];
    s.assign(n0, T(0));
    if (n0 % 2 == 0) {
        auto x = root(t[n0], static_cast<unsigned>(n0 + 1));
        if (!x) return std::nullopt;
        s.push_back((n0 / 2) % 2 == 0 ? *x : T(-*x));
    } else {
        const Rational delta0 = ((n0 + 1) / 2) % 2 == 0 ? t[n0] : Rational(-t[n0]);
        auto x = root(delta0, static_cast<unsigned>(n0 + 1));
        if (!x) return std::nullopt;
        s.push_back(*x);
    }
    push_free_until(2 * n0);

    // Between support indices: agree with s^(r), r = n_k + 1, until the
    // entry s_{n_k + n_{k+1} + 1} that carries D_{n_{k+1}}.
    auto follow_approx = [&](std::size_t nk, std::size_t last) -> BasicMomentSequence<T> {
        push_free_until(2 * nk + 1);
        const BasicMomentSequence<T> prefix(s);
        auto approx = approx_sequence(prefix, nk + 1, last);
        for (std::size_t j = 2 * nk + 2; j <= last; ++j)
            if (j < s.size()) s[j] = approx[j];
            else s.push_back(approx[j]);
        return approx;
    };

    for (std::size_t k = 0; k + 1 < sup.size(); ++k) {
        const std::size_t nk = sup[k], next = sup[k + 1], gap = next - nk;
        const std::size_t jump_at = nk + next + 1;
        const auto approx = follow_approx(nk, jump_at);
        s.pop_back(); // s_{jump_at} is replaced below
        std::optional<T> delta;
        if (gap % 2 == 1) {
            auto x = root(t[next] / t[nk], static_cast<unsigned>(gap));
            if (x) delta = ((gap - 1) / 2) % 2 == 0 ? *x : T(-*x);
        } else {
            const Rational d = ((gap / 2) % 2 == 0 ? t[next] : Rational(-t[next])) * t[nk];
            delta = root(d / (t[nk] * t[nk]), static_cast<unsigned>(gap));
        }
        if (!delta) return std::nullopt;
        s.push_back(approx[jump_at] + *delta);
        push_free_until(2 * next);
    }

    const std::size_t last_support = sup.back();
    if (last_support < big_n) {
        follow_approx(last_support, big_n + last_support + 1);
        push_free_until(2 * big_n);
    }
    return s;
}

} // namespace detail

/// Builds s with D_n(s) = t_n, n <= N, following the inductive proof of
/// sufficiency with its choice of real root branches. Exact arithmetic is
/// used when every root is rational; otherwise the construction is redone
/// in BigFloat and certified against `options.tol`.
inline InverseSolution solve_inverse(const TargetSequence& t, const FreePolicy& policy = {},
                                     const InverseOptions& options = {}) {
    if (t.size() == 0) throw IndexOutOfRange("solve_inverse needs at least one target");
    const SolvabilityReport report = frobenius_check(t);
    if (!report.solvable) {
        const auto& v = *report.violation;
        throw NotSolvable("sign condition " + std::to_string(v.k) + " fails at t_" +
                          std::to_string(v.index) + " (value " + to_string(v.value) + ")");
    }
    const std::size_t big_n = t.size() - 1;

    auto exact = detail::construct_inverse<Rational>(
        t, detail::FreeValues(policy),
        [](const Rational& x, unsigned k) { return exact_root(x, k); });
    if (exact) {
        MomentSequence s(std::move(*exact));
        std::vector<Rational> d(big_n + 1);
        for (std::size_t n = 0; n <= big_n; ++n) {
            d[n] = hankel_det(s, n);
            if (d[n] != t[n])
                throw std::logic_error("exact construction missed t_" + std::to_string(n));
        }
        InverseSolution out;
        out.mode = SolutionMode::Exact;
        out.s = std::move(s);
        out.certificate = std::move(d);
        out.max_residual = BigFloat(0L, options.precision_bits);
        return out;
    }

    const unsigned bits = options.precision_bits;
    PrecisionScope scope(bits);
    auto approx = detail::construct_inverse<BigFloat>(
        t, detail::FreeValues(policy), [bits](const Rational& x, unsigned k) {
            return std::optional<BigFloat>(real_root(x, k, bits));
        });
    RealMomentSequence s(std::move(*approx));
    std::vector<BigFloat> d;
    BigFloat worst(0L, bits);
    const BigFloat tol(options.tol, bits);
    std::optional<std::size_t> failed;
    for (std::size_t n = 0; n <= big_n; ++n) {
        d.push_back(hankel_det(s, n));
        const BigFloat target(t[n], bits);
        const BigFloat scaled = abs(d.back() - target) / max(BigFloat(1L, bits), abs(target));
        if (!scaled.is_finite()) failed = n;
        else worst = max(worst, scaled);
        if (!failed && scaled > tol) failed = n;
    }
    if (failed)
        throw PrecisionExhausted("D_" + std::to_string(*failed) + " misses its target by more than " +
                                 to_string(options.tol) + " at " + std::to_string(bits) + " bits");
    InverseSolution out;
    out.mode = SolutionMode::BigFloat;
    out.s = std::move(s);
    out.certificate = std::move(d);
    out.max_residual = worst;
    out.precision_bits = bits;
    return out;
}

} // namespace hankel

#endif
