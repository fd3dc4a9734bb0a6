#ifndef HANKEL_JSON_IO_HPP
#define HANKEL_JSON_IO_HPP

// JSON documents for the command-line tool. Every number is written as a
// string: exact values as "p" or "p/q", BigFloat values in scientific
// notation together with their precision.

#include <hankel/hankel_core.hpp>
#include <hankel/hankel_poly.hpp>
#include <hankel/inverse_problem.hpp>
#include <hankel/iohvidov.hpp>
#include <hankel/kronecker_rank.hpp>
#include <hankel/measure_recovery.hpp>

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace hankel::json {

using Json = nlohmann::ordered_json;

/// Decimal digits that faithfully represent `bits` binary digits.
inline int decimal_digits(unsigned bits) {
    return static_cast<int>(std::ceil(bits * 0.30102999566398120)) + 1;
}

inline Json str(const Rational& x) { return to_string(x); }
inline Json str(const BigFloat& x) { return x.to_string(decimal_digits(x.precision())); }

template <class T>
Json array(const std::vector<T>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(str(x));
    return out;
}

template <Scalar T>
Json array(const BasicMomentSequence<T>& s) {
    Json out = Json::array();
    for (const auto& x : s.terms()) out.push_back(str(x));
    return out;
}

/// Accepts strings ("3", "-1/2", "1e-3") and JSON numbers.
inline Rational read_rational(const Json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.dump());
    if (v.is_number_float()) return parse_rational(v.dump());
    throw ParseError("expected a number or a numeric string, got " + v.dump());
}

inline std::vector<Rational> read_rationals(const Json& v, const char* what) {
    if (!v.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
    std::vector<Rational> out;
    for (const auto& x : v) out.push_back(read_rational(x));
    return out;
}

inline Json to_json(const DeterminantProfile& p) {
    return Json{{"D", array(p.d_values)}, {"Dprime", array(p.d_prime_values)}};
}

inline Json to_json(const RationalPolynomial& p) {
    Json out{{"coeffs", array(p.coeffs())}};
    out["degree"] = p.degree() ? Json(*p.degree()) : Json(nullptr);
    out["text"] = to_string(p);
    return out;
}

inline Json to_json(const JacobiCoeffs& j) { return Json{{"a", array(j.a)}, {"b", array(j.b)}}; }

inline Json to_json(const RankCertificate& c) {
    Json out{{"verdict", to_string(c.verdict)}, {"rank", c.rank}, {"horizon", c.horizon}};
    out["recurrence"] = c.witness ? array(c.witness->d) : Json::array();
    out["D"] = array(c.d_profile.d_values);
    return out;
}

inline Json to_json(const StructureReport& r) {
    Json out{{"horizon", r.horizon}, {"terms", r.terms}};
    out["full_degree_indices"] = r.full_degree_indices;
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        Json e{{"n", c.n}, {"kind", to_string(c.kind)}};
        if (c.factor) {
            e["factor"] = str(*c.factor);
            e["reference"] = c.reference;
        }
        classes.push_back(std::move(e));
    }
    out["classes"] = std::move(classes);
    Json gamma = Json::array();
    for (const auto& g : r.gamma)
        gamma.push_back(
            Json{{"k", g.k}, {"index", g.index}, {"reference", g.reference}, {"gamma", str(g.gamma)}});
    out["gamma"] = std::move(gamma);
    Json blocks = Json::array();
    for (const auto& b : r.block_polys) {
        Json e{{"k", b.k}, {"from", b.from}, {"to", b.to}, {"a", to_json(b.a)}};
        e["beta"] = b.beta ? str(*b.beta) : Json(nullptr);
        e["consistent"] = b.consistent;
        blocks.push_back(std::move(e));
    }
    out["block_polys"] = std::move(blocks);
    Json zeros = Json::array();
    for (const auto& [lo, hi] : r.zero_blocks) zeros.push_back(Json::array({lo, hi}));
    out["zero_blocks"] = std::move(zeros);
    out["tail_zero"] = r.tail_zero;
    return out;
}

inline Json to_json(const DeltaCondition& c) {
    return Json{{"k", c.k}, {"index", c.index}, {"gap", c.gap}, {"value", str(c.value)}};
}

inline Json to_json(const SolvabilityReport& r) {
    Json out{{"solvable", r.solvable}, {"support", r.support}};
    Json deltas = Json::array();
    for (const auto& d : r.deltas) deltas.push_back(to_json(d));
    out["deltas"] = std::move(deltas);
    out["violation"] = r.violation ? to_json(*r.violation) : Json(nullptr);
    return out;
}

inline Json to_json(const InverseSolution& s) {
    Json out;
    std::visit([&](const auto& seq) { out["solution"] = array(seq); }, s.s);
    out["mode"] = to_string(s.mode);
    std::visit([&](const auto& d) { out["D"] = array(d); }, s.certificate);
    out["max_residual"] = s.mode == SolutionMode::Exact ? Json("0") : str(s.max_residual);
    if (s.mode == SolutionMode::BigFloat) out["precision"] = s.precision_bits;
    return out;
}

inline Json to_json(const DiscreteMeasure& m) {
    Json atoms = Json::array();
    for (const auto& a : m.atoms) {
        atoms.push_back(Json{{"location", str(a.location)},
                             {"enclosure", Json::array({str(a.enclosure.lo), str(a.enclosure.hi)})},
                             {"weight", str(a.weight)}});
    }
    return Json{{"atoms", std::move(atoms)}, {"r", m.r()}, {"precision", m.precision_bits}};
}

} // namespace hankel::json

#endif
