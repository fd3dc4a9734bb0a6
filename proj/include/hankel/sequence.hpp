#ifndef HANKEL_SEQUENCE_HPP
#define HANKEL_SEQUENCE_HPP

#include <hankel/errors.hpp>
#include <hankel/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hankel {

/// A finite prefix s_0..s_M of a real sequence. Every statement derived from
/// it is certified only up to this horizon.
template <Scalar T>
class BasicMomentSequence {
public:
    BasicMomentSequence() = default;
    explicit BasicMomentSequence(std::vector<T> terms) : terms_(std::move(terms)) {}
    BasicMomentSequence(std::initializer_list<T> terms) : terms_(terms) {}

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    /// Largest available index M. Only meaningful when nonempty.
    std::size_t max_index() const noexcept { return terms_.empty() ? 0 : terms_.size() - 1; }

    /// True when index `i` exists in the prefix.
    bool has(std::size_t i) const noexcept { return i < terms_.size(); }

    const T& operator[](std::size_t i) const { return terms_[i]; }

    const T& at(std::size_t i) const {
        if (i >= terms_.size())
            throw IndexOutOfRange("s_" + std::to_string(i) + " is beyond the prefix of length " +
                                  std::to_string(terms_.size()));
        return terms_[i];
    }

    std::span<const T> terms() const noexcept { return terms_; }

    bool is_nonzero() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const T& x) { return !is_zero(x); });
    }

    /// The first `count` terms.
    BasicMomentSequence prefix(std::size_t count) const {
        count = std::min(count, terms_.size());
        return BasicMomentSequence(std::vector<T>(terms_.begin(), terms_.begin() + count));
    }

    friend bool operator==(const BasicMomentSequence&, const BasicMomentSequence&) = default;

private:
    std::vector<T> terms_;
};

using MomentSequence = BasicMomentSequence<Rational>;
using RealMomentSequence = BasicMomentSequence<BigFloat>;

/// Throws IndexOutOfRange unless index `needed` exists in `s`.
template <Scalar T>
void require_index(const BasicMomentSequence<T>& s, std::size_t needed, const char* what) {
    if (!s.has(needed))
        throw IndexOutOfRange(std::string(what) + " needs s_" + std::to_string(needed) +
                              " but the prefix has " + std::to_string(s.size()) + " terms");
}

} // namespace hankel

#endif
