// hankel: command-line front end for the Hankel determinant library.
//
// Result documents go to stdout, error documents to stderr. Exit codes:
// 0 success, 1 usage, 2 unreadable input, 3 precondition violated,
// 4 precision exhausted.

#include <hankel/hankel.hpp>
#include <hankel/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using hankel::json::Json;

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kPrecondition = 3, kPrecision = 4 };

struct Options {
    std::string input;
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> r;
    std::optional<std::size_t> len;
    unsigned precision_bits = hankel::kDefaultPrecisionBits;
    std::optional<std::string> tol;
    std::optional<std::string> policy;
    bool invert = false;
    bool construct = false;
};

/// Failure that maps straight to an exit code.
struct Failure {
    int code;
    Json document;
};

Json error_document(const std::string& kind, const std::string& message) {
    return Json{{"error", kind}, {"message", message}};
}

Json read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kParse, error_document("ParseError", "cannot open '" + path + "'")};
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Failure{kParse, error_document("ParseError", path + ": " + e.what())};
    }
}

const Json& require_key(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw hankel::ParseError(std::string("input has no '") + key + "' field");
    return doc.at(key);
}

hankel::MomentSequence read_sequence(const Json& doc, bool allow_solution = false) {
    if (allow_solution && doc.is_object() && !doc.contains("sequence") && doc.contains("solution"))
        return hankel::MomentSequence(hankel::json::read_rationals(doc.at("solution"), "solution"));
    auto terms = hankel::json::read_rationals(require_key(doc, "sequence"), "sequence");
    if (terms.empty()) throw hankel::ParseError("'sequence' is empty");
    return hankel::MomentSequence(std::move(terms));
}

hankel::Rational tolerance(const Options& o, const char* fallback) {
    return hankel::parse_rational(o.tol.value_or(fallback));
}

Json run_det(const Options& o) {
    return hankel::json::to_json(hankel::determinant_transform(read_sequence(read_input(o.input), true)));
}

Json run_poly(const Options& o) {
    const auto s = read_sequence(read_input(o.input));
    const std::size_t top = o.max_n.value_or((s.max_index() + 1) / 2);
    Json p = Json::array(), q = Json::array();
    for (std::size_t n = 0; n <= top; ++n) {
        p.push_back(hankel::json::to_json(hankel::poly_P(s, n)));
        q.push_back(hankel::json::to_json(hankel::poly_Q(s, n)));
    }
    return Json{{"P", std::move(p)}, {"Q", std::move(q)}};
}

Json run_jacobi(const Options& o) {
    const Json doc = read_input(o.input);
    if (o.invert) {
        hankel::JacobiCoeffs j{hankel::json::read_rationals(require_key(doc, "a"), "a"),
                               hankel::json::read_rationals(require_key(doc, "b"), "b")};
        return Json{{"sequence", hankel::json::array(hankel::moments_from_jacobi(j))}};
    }
    const auto s = read_sequence(doc);
    return hankel::json::to_json(hankel::jacobi_from_moments(s, o.max_n.value_or(s.size() / 2)));
}

Json run_approx(const Options& o) {
    if (!o.r) throw Failure{kUsage, error_document("UsageError", "approx needs --r")};
    const auto s = read_sequence(read_input(o.input));
    const std::size_t len = o.len.value_or(s.size());
    if (len == 0) throw Failure{kUsage, error_document("UsageError", "--len must be positive")};
    const auto rec = hankel::recurrence_coeffs(s, *o.r);
    return Json{{"r", *o.r},
                {"recurrence", hankel::json::array(rec.d)},
                {"sequence", hankel::json::array(hankel::approx_sequence(s, rec, len - 1))}};
}

Json run_rank(const Options& o) {
    return hankel::json::to_json(hankel::hankel_rank(read_sequence(read_input(o.input))));
}

Json run_profile(const Options& o) {
    return hankel::json::to_json(hankel::degree_profile(read_sequence(read_input(o.input))));
}

Json run_solve(const Options& o) {
    const Json doc = read_input(o.input);
    const hankel::TargetSequence t(hankel::json::read_rationals(require_key(doc, "target"), "target"));
    if (t.size() == 0) throw hankel::ParseError("'target' is empty");
    std::string policy_text = "zeros";
    if (doc.contains("policy")) {
        if (!doc.at("policy").is_string()) throw hankel::ParseError("'policy' must be a string");
        policy_text = doc.at("policy").get<std::string>();
    }
    if (o.policy) policy_text = *o.policy;
    const auto policy = hankel::FreePolicy::parse(policy_text);

    const auto report = hankel::frobenius_check(t);
    Json out{{"report", hankel::json::to_json(report)}};
    if (!report.solvable) {
        Json err = error_document("NotSolvable", "the targets violate a sign condition");
        err["violation"] = hankel::json::to_json(*report.violation);
        throw Failure{kPrecondition, std::move(err)};
    }
    if (o.construct) {
        hankel::InverseOptions options;
        options.precision_bits = o.precision_bits;
        options.tol = tolerance(o, "1e-30");
        const auto solution = hankel::solve_inverse(t, policy, options);
        const Json fields = hankel::json::to_json(solution);
        for (const auto& [key, value] : fields.items()) out[key] = value;
        out["policy"] = policy.to_string();
    }
    return out;
}

Json run_measure(const Options& o, int& code) {
    const auto s = read_sequence(read_input(o.input));
    const auto tol = tolerance(o, "1e-20");
    const auto measure = hankel::recover_measure(s, o.precision_bits);
    const auto check = hankel::verify_moments(measure, s, tol);
    Json out = hankel::json::to_json(measure);
    out["residual"] = hankel::json::str(check.residual.with_precision(o.precision_bits));
    out["tol"] = hankel::to_string(tol);
    out["passed"] = check.passed;
    if (!check.passed) {
        Json err = error_document("PrecisionExhausted", "moment residual exceeds the tolerance");
        err["residual"] = out["residual"];
        std::cerr << err.dump() << '\n';
        code = kPrecision;
    }
    return out;
}

int exit_code_for(const hankel::Error& e) {
    if (dynamic_cast<const hankel::ParseError*>(&e)) return kParse;
    if (dynamic_cast<const hankel::PrecisionExhausted*>(&e)) return kPrecision;
    return kPrecondition;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel determinants, orthogonal polynomials and moment sequences"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "input JSON file")->required();
        sub->add_option("--precision-bits", o.precision_bits, "working precision in bits")
            ->check(CLI::Range(64u, 1u << 20));
    };

    auto* det = app.add_subcommand("det", "Hankel determinants D_n and D'_n");
    add_common(det);
    auto* poly = app.add_subcommand("poly", "polynomials P_n and Q_n");
    add_common(poly);
    poly->add_option("--max-n", o.max_n, "largest n");
    auto* jacobi = app.add_subcommand("jacobi", "three-term recurrence coefficients");
    add_common(jacobi);
    jacobi->add_option("--max-n", o.max_n, "number of coefficient pairs");
    jacobi->add_flag("--invert", o.invert, "read {a, b} and output the moments");
    auto* approx = app.add_subcommand("approx", "approximating sequence s^(r)");
    add_common(approx);
    approx->add_option("--r", o.r, "order r")->required();
    approx->add_option("--len", o.len, "number of output terms");
    auto* rank = app.add_subcommand("rank", "finite Hankel rank certificate");
    add_common(rank);
    auto* profile = app.add_subcommand("profile", "structure of the P_n sequence");
    add_common(profile);
    auto* solve = app.add_subcommand("solve", "inverse determinant problem");
    add_common(solve);
    solve->add_flag("--construct", o.construct, "construct a solution");
    solve->add_option("--tol", o.tol, "certificate tolerance (default 1e-30)");
    solve->add_option("--policy", o.policy, "free entries: zeros or seed:<u64>");
    auto* measure = app.add_subcommand("measure", "recover a finitely supported measure");
    add_common(measure);
    measure->add_option("--tol", o.tol, "moment residual tolerance (default 1e-20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_document("UsageError", e.what()).dump() << '\n';
        return kUsage;
    }

    int code = kOk;
    try {
        Json out;
        if (det->parsed()) out = run_det(o);
        else if (poly->parsed()) out = run_poly(o);
        else if (jacobi->parsed()) out = run_jacobi(o);
        else if (approx->parsed()) out = run_approx(o);
        else if (rank->parsed()) out = run_rank(o);
        else if (profile->parsed()) out = run_profile(o);
        else if (solve->parsed()) out = run_solve(o);
        else out = run_measure(o, code);
        std::cout << out.dump(2) << '\n';
        return code;
    } catch (const Failure& f) {
        std::cerr << f.document.dump() << '\n';
        return f.code;
    } catch (const hankel::IndexedError& e) {
        Json err = error_document(e.kind(), e.what());
        err["index"] = e.index();
        std::cerr << err.dump() << '\n';
        return exit_code_for(e);
    } catch (const hankel::Error& e) {
        std::cerr << error_document(e.kind(), e.what()).dump() << '\n';
        return exit_code_for(e);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << error_document("ParseError", e.what()).dump() << '\n';
        return kParse;
    }
}
