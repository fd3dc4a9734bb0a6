#ifndef HANKEL_ERRORS_HPP
#define HANKEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable tag used by the CLI error documents.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

/// An error that carries the offending index (e.g. the first vanishing D_n).
class IndexedError : public Error {
public:
    IndexedError(std::string kind, std::size_t index, const std::string& what)
        : Error(std::move(kind), what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NotQuasiDefinite : public IndexedError {
public:
    explicit NotQuasiDefinite(std::size_t n)
        : IndexedError("NotQuasiDefinite", n, "D_" + std::to_string(n) + " vanishes") {}
};

class ZeroB : public IndexedError {
public:
    explicit ZeroB(std::size_t k)
        : IndexedError("ZeroB", k, "b_" + std::to_string(k) + " is zero") {}
};

class ZeroTarget : public IndexedError {
public:
    explicit ZeroTarget(std::size_t n)
        : IndexedError("ZeroTarget", n, "t_" + std::to_string(n) + " is zero") {}
};

class SingularLeadingMinor : public IndexedError {
public:
    explicit SingularLeadingMinor(std::size_t r)
        : IndexedError("SingularLeadingMinor", r,
                       "D_{r-1} vanishes for r = " + std::to_string(r)) {}
};

class GapHypothesisViolated : public IndexedError {
public:
    explicit GapHypothesisViolated(std::size_t n)
        : IndexedError("GapHypothesisViolated", n,
                       "D_" + std::to_string(n) + " is nonzero inside the requested gap") {}
};

class NonConstantResidual : public Error {
public:
    explicit NonConstantResidual(const std::string& what) : Error("NonConstantResidual", what) {}
};

class ZeroSequence : public Error {
public:
    ZeroSequence() : Error("ZeroSequence", "all terms of the sequence are zero") {}
};

class DegreeViolation : public Error {
public:
    explicit DegreeViolation(const std::string& what) : Error("DegreeViolation", what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what) : Error("SingularMatrix", what) {}
};

class NotSolvable : public Error {
public:
    explicit NotSolvable(const std::string& what) : Error("NotSolvable", what) {}
};

class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what) : Error("PrecisionExhausted", what) {}
};

class RootCountMismatch : public Error {
public:
    RootCountMismatch(std::size_t found, std::size_t expected)
        : Error("RootCountMismatch", "found " + std::to_string(found) + " real roots, expected " +
                                         std::to_string(expected)),
          found_(found), expected_(expected) {}

    std::size_t found() const noexcept { return found_; }
    std::size_t expected() const noexcept { return expected_; }

private:
    std::size_t found_;
    std::size_t expected_;
};

class WeightMismatch : public IndexedError {
public:
    WeightMismatch(std::size_t atom, const std::string& what)
        : IndexedError("WeightMismatch", atom, what) {}
};

class NonPositiveWeight : public IndexedError {
public:
    explicit NonPositiveWeight(std::size_t atom)
        : IndexedError("NonPositiveWeight", atom,
                       "weight of atom " + std::to_string(atom) + " is not positive") {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

} // namespace hankel

#endif
