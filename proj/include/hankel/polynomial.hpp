#ifndef HANKEL_POLYNOMIAL_HPP
#define HANKEL_POLYNOMIAL_HPP

#include <hankel/scalar.hpp>

#include <cassert>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hankel {

/// Dense univariate polynomial; coefficient k multiplies x^k. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients and no
/// degree.
template <Scalar T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

    static Polynomial monomial(std::size_t k, T c = T(1)) {
        std::vector<T> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of x^k (zero beyond the degree).
    T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

    const std::vector<T>& coeffs() const noexcept { return coeffs_; }

    const T& leading() const {
        assert(!coeffs_.empty());
        return coeffs_.back();
    }

    template <class U>
    U evaluate(const U& x) const {
        U acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + convert<U>(coeffs_[k]);
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(d));
    }

    /// Divides every coefficient by the leading one.
    Polynomial monic() const {
        if (coeffs_.empty()) return {};
        return *this * (T(1) / leading());
    }

    Polynomial operator-() const {
        std::vector<T> v(coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = -coeffs_[k];
        return Polynomial(std::move(v));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const T& c) {
        std::vector<T> v(a.coeffs_.size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeffs_[k] * c;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const T& c, const Polynomial& a) { return a * c; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    /// Multiplication by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(coeffs_.size() + k);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
        return Polynomial(std::move(v));
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        assert(!b.is_zero());
        std::vector<T> rem = a.coeffs_;
        const std::size_t db = b.coeffs_.size() - 1;
        if (rem.size() < b.coeffs_.size()) return {Polynomial{}, a};
        std::vector<T> quot(rem.size() - db);
        for (std::size_t i = quot.size(); i-- > 0;) {
            const T q = rem[i + db] / b.leading();
            quot[i] = q;
            if (hankel::is_zero(q)) continue;
            for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * b.coeffs_[j];
        }
        rem.resize(db);
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    /// Monic greatest common divisor (zero if both are zero).
    friend Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    template <class U>
    static U convert(const T& c) {
        if constexpr (std::is_same_v<U, T>) {
            return c;
        } else {
            return U(c);
        }
    }

    void trim() {
        while (!coeffs_.empty() && hankel::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using RationalPolynomial = Polynomial<Rational>;

/// Human-readable form, highest power first, e.g. "1/2*x^2 - 1/4".
inline std::string to_string(const RationalPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rational& c = p.coeffs()[k];
        if (is_zero(c)) continue;
        const bool negative = c.sign() < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = abs(c);
        if (k == 0 || mag != 1) out += to_string(mag) + (k == 0 ? "" : "*");
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace hankel

#endif
