#ifndef HANKEL_SCALAR_HPP
#define HANKEL_SCALAR_HPP

// Exact rationals (GMP through Boost.Multiprecision) and an MPFR-backed
// arbitrary precision float with an explicit bit precision.

#include <hankel/errors.hpp>

#include <boost/multiprecision/gmp.hpp>
#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace hankel {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;
inline constexpr unsigned kMinPrecisionBits = 64;

// ---------------------------------------------------------------------------
// Rational helpers

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int sign(const Rational& x) { return x.sign(); }
inline Rational abs(const Rational& x) { return x.sign() < 0 ? Rational(-x) : x; }

/// Canonical text form: "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& x) {
    const Integer den = boost::multiprecision::denominator(x);
    const Integer num = boost::multiprecision::numerator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace detail {

inline bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

/// Base-10 digit string to Integer. The string constructor of the gmp
/// backend reads a leading 0 as an octal prefix.
inline Integer decimal_integer(std::string_view digits) {
    while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
    return Integer(std::string(digits));
}

inline Integer pow10(unsigned e) {
    Integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 10;
    return r;
}

// [+-]digits[.digits][e[+-]digits]
inline std::optional<Rational> parse_decimal(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = text.substr(e + 1);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!is_digits(exp_part) || exp_part.size() > 6) return std::nullopt;
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
        text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) return std::nullopt;
        if (!int_part.empty() && !is_digits(int_part)) return std::nullopt;
        if (!frac_part.empty() && !is_digits(frac_part)) return std::nullopt;
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!is_digits(text)) return std::nullopt;
        digits = std::string(text);
    }
    Rational value{decimal_integer(digits)};
    if (exponent > 0) value *= Rational(pow10(static_cast<unsigned>(exponent)));
    if (exponent < 0) value /= Rational(pow10(static_cast<unsigned>(-exponent)));
    return negative ? Rational(-value) : value;
}

} // namespace detail

/// Parses "p", "p/q" or a decimal literal such as "-1.25e-3" into an exact
/// rational. Throws ParseError on malformed input or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(text.substr(0, slash));
        std::string_view den = trim(text.substr(slash + 1));
        bool negative = false;
        if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
            negative = num.front() == '-';
            num.remove_prefix(1);
        }
        if (!detail::is_digits(num) || !detail::is_digits(den))
            throw ParseError("malformed rational literal '" + std::string(text) + "'");
        const Integer d = detail::decimal_integer(den);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Rational q{detail::decimal_integer(num), d};
        return negative ? Rational(-q) : q;
    }
    if (auto q = detail::parse_decimal(text)) return *q;
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
}

/// Integer k-th root of a nonnegative integer when it is a perfect power.
inline std::optional<Integer> exact_integer_root(const Integer& x, unsigned k) {
    if (x < 0) return std::nullopt;
    Integer root;
    const int exact = mpz_root(root.backend().data(), x.backend().data(), k);
    if (exact == 0) return std::nullopt;
    return root;
}

/// Real k-th root of a rational when it is rational itself. Negative input
/// is accepted only for odd k (the real root is then negative).
inline std::optional<Rational> exact_root(const Rational& x, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return x;
    const bool negative = x.sign() < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    const Rational m = abs(x);
    auto num = exact_integer_root(boost::multiprecision::numerator(m), k);
    if (!num) return std::nullopt;
    auto den = exact_integer_root(boost::multiprecision::denominator(m), k);
    if (!den) return std::nullopt;
    Rational r{*num, *den};
    return negative ? Rational(-r) : r;
}

inline Rational pow(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= x;
    return r;
}

// ---------------------------------------------------------------------------
// BigFloat

class BigFloat;

namespace detail {
inline unsigned& thread_precision() {
    thread_local unsigned bits = kDefaultPrecisionBits;
    return bits;
}
} // namespace detail

/// Sets the precision used by default-constructed BigFloat values on this
/// thread for the lifetime of the scope.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(detail::thread_precision()) {
        detail::thread_precision() = std::max(bits, kMinPrecisionBits);
    }
    ~PrecisionScope() { detail::thread_precision() = saved_; }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline unsigned current_precision() { return detail::thread_precision(); }

/// Arbitrary precision binary float with a per-value precision in bits.
/// Binary operations round to the larger precision of the two operands.
class BigFloat {
public:
    BigFloat() : BigFloat(0L) {}

    BigFloat(long v, unsigned bits = current_precision()) {
        mpfr_init2(value_, clamp(bits));
        mpfr_set_si(value_, v, MPFR_RNDN);
    }
    BigFloat(int v) : BigFloat(static_cast<long>(v)) {}

    explicit BigFloat(const Rational& q, unsigned bits = current_precision()) {
        mpfr_init2(value_, clamp(bits));
        mpfr_set_q(value_, q.backend().data(), MPFR_RNDN);
    }

    BigFloat(const BigFloat& other) {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& other) noexcept {
        mpfr_init2(value_, MPFR_PREC_MIN);
        mpfr_swap(value_, other.value_);
    }
    BigFloat& operator=(const BigFloat& other) {
        if (this != &other) {
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
            mpfr_set(value_, other.value_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& other) noexcept {
        mpfr_swap(value_, other.value_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(value_); }

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

    /// Copy rounded to `bits` of precision.
    BigFloat with_precision(unsigned bits) const {
        BigFloat r(0L, bits);
        mpfr_set(r.value_, value_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }

    /// Exact rational value of the binary float.
    Rational to_rational() const {
        Rational q;
        mpfr_get_q(q.backend().data(), value_);
        return q;
    }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Scientific decimal representation with `digits` significant digits
    /// after the leading one (defaults to what the precision supports).
    std::string to_string(int digits = -1) const {
        if (digits < 0) digits = static_cast<int>(precision() * 0.30103) + 1;
        char* buffer = nullptr;
        mpfr_asprintf(&buffer, "%.*Re", digits, value_);
        std::string out(buffer);
        mpfr_free_str(buffer);
        return out;
    }

    BigFloat operator-() const {
        BigFloat r(0L, precision());
        mpfr_neg(r.value_, value_, MPFR_RNDN);
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        return binary(a, b, mpfr_add);
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        return binary(a, b, mpfr_sub);
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        return binary(a, b, mpfr_mul);
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        return binary(a, b, mpfr_div);
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) {
        return mpfr_equal_p(a.value_, b.value_) != 0;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) {
        return mpfr_less_p(a.value_, b.value_) != 0;
    }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) {
        return mpfr_lessequal_p(a.value_, b.value_) != 0;
    }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

    friend BigFloat abs(const BigFloat& x) {
        BigFloat r(0L, x.precision());
        mpfr_abs(r.value_, x.value_, MPFR_RNDN);
        return r;
    }

    /// Real k-th root; negative input is allowed for odd k.
    friend BigFloat root(const BigFloat& x, unsigned k) {
        BigFloat r(0L, x.precision());
        mpfr_rootn_ui(r.value_, x.value_, k, MPFR_RNDN);
        return r;
    }

    friend BigFloat pow(const BigFloat& x, unsigned e) {
        BigFloat r(0L, x.precision());
        mpfr_pow_ui(r.value_, x.value_, e, MPFR_RNDN);
        return r;
    }

    /// x * 2^e
    friend BigFloat ldexp(const BigFloat& x, long e) {
        BigFloat r(0L, x.precision());
        mpfr_mul_2si(r.value_, x.value_, e, MPFR_RNDN);
        return r;
    }

    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

    friend bool is_zero(const BigFloat& x) { return x.is_zero(); }
    friend int sign(const BigFloat& x) { return x.sign(); }

    mpfr_srcptr raw() const { return value_; }

private:
    static mpfr_prec_t clamp(unsigned bits) {
        return static_cast<mpfr_prec_t>(std::max(bits, 2u));
    }

    template <class Op>
    static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat r(0L, std::max(a.precision(), b.precision()));
        op(r.value_, a.value_, b.value_, MPFR_RNDN);
        return r;
    }

    mpfr_t value_;
};

/// Real k-th root of a rational at the given precision.
inline BigFloat real_root(const Rational& x, unsigned k, unsigned bits) {
    return root(BigFloat(x, bits), k);
}

// ---------------------------------------------------------------------------
// Scalar traits used by the generic algorithms.

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool exact = false;
};

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

/// Converts an exact rational into the scalar type T.
template <Scalar T>
T from_rational(const Rational& q) {
    if constexpr (std::is_same_v<T, Rational>) {
        return q;
    } else {
        return T(q);
    }
}

} // namespace hankel

#endif
