#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hankel;

namespace {

std::vector<Rational> d_values(const MomentSequence& s, std::size_t count) {
    std::vector<Rational> out;
    for (std::size_t n = 0; n < count; ++n) out.push_back(hankel_det(s, n));
    return out;
}

} // namespace

TEST(FrobeniusCheck, Examples) {
    auto r = frobenius_check(TargetSequence{0, 1, 0, 0});
    EXPECT_FALSE(r.solvable);
    ASSERT_TRUE(r.violation);
    EXPECT_EQ(r.violation->k, 0u);
    EXPECT_EQ(r.violation->index, 1u);
    EXPECT_EQ(r.violation->value, -1);

    r = frobenius_check(TargetSequence{1, 0, 1});
    EXPECT_FALSE(r.solvable);
    EXPECT_EQ(r.violation->k, 1u);
    EXPECT_EQ(r.violation->gap, 2u);
    EXPECT_EQ(r.violation->value, -1);

    r = frobenius_check(TargetSequence{0, 0, 0});
    EXPECT_TRUE(r.solvable);
    EXPECT_TRUE(r.support.empty());

    r = frobenius_check(TargetSequence{1, -1, 0, 2});
    EXPECT_TRUE(r.solvable);
    EXPECT_EQ(r.support, (std::vector<std::size_t>{0, 1, 3}));
    ASSERT_EQ(r.deltas.size(), 1u);
    EXPECT_EQ(r.deltas[0].value, 2);
}

TEST(FrobeniusCheck, SignPatternTargetsAreSolvable) {
    oracle::Random rnd(501);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> t(static_cast<std::size_t>(rnd.integer(1, 9)));
        for (std::size_t n = 0; n < t.size(); ++n) {
            const Rational sign = (n * (n + 1) / 2) % 2 == 0 ? 1 : -1;
            t[n] = rnd.integer(0, 2) == 0 ? Rational(0) : sign * abs(rnd.nonzero());
        }
        EXPECT_TRUE(frobenius_check(TargetSequence(t)).solvable);
    }
}

TEST(FrobeniusCheck, ImageOfDeterminantTransformIsSolvable) {
    oracle::Random rnd(502);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = trial % 2 ? rnd.sequence(11) : rnd.sequence(11, -1, 1, 1);
        EXPECT_TRUE(frobenius_check(TargetSequence(determinant_transform(s).d_values)).solvable);
    }
}

TEST(SolveInverse, Examples) {
    auto sol = solve_inverse(TargetSequence{1, -1});
    EXPECT_EQ(sol.mode, SolutionMode::Exact);
    EXPECT_EQ(sol.exact(), (MomentSequence{1, 0, -1}));
    EXPECT_EQ(std::get<std::vector<Rational>>(sol.certificate), (std::vector<Rational>{1, -1}));

    sol = solve_inverse(TargetSequence{2, 1});
    EXPECT_EQ(d_values(sol.exact(), 2), (std::vector<Rational>{2, 1}));

    sol = solve_inverse(TargetSequence{0, 0, -1});
    EXPECT_EQ(sol.exact(), (MomentSequence{0, 0, 1, 0, 0}));

    EXPECT_THROW(solve_inverse(TargetSequence{0, 1}), NotSolvable);
    EXPECT_THROW(solve_inverse(TargetSequence{}), IndexOutOfRange);
}

TEST(SolveInverse, ZeroTargetGivesZeroSequence) {
    const auto sol = solve_inverse(TargetSequence{0, 0, 0, 0}, FreePolicy::seeded(3));
    EXPECT_EQ(sol.exact(), MomentSequence(std::vector<Rational>(7, 0)));
}

TEST(SolveInverse, ExactRoundTripWithGaps) {
    oracle::Random rnd(503);
    for (int trial = 0; trial < 60; ++trial) {
        const auto planted = oracle::planted_targets(rnd, 1 + trial % 4, 4, true, std::nullopt,
                                                     static_cast<std::size_t>(trial % 3));
        const TargetSequence t(planted.t);
        const auto policy = trial % 2 ? FreePolicy::zeros() : FreePolicy::seeded(trial);
        const auto sol = solve_inverse(t, policy);
        ASSERT_EQ(sol.mode, SolutionMode::Exact);
        EXPECT_EQ(sol.exact().size(), 2 * t.size() - 1);
        EXPECT_EQ(d_values(sol.exact(), t.size()), planted.t);
    }
}

TEST(SolveInverse, FloatRoundTripWithGaps) {
    oracle::Random rnd(504);
    int float_cases = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const auto planted = oracle::planted_targets(rnd, 2 + trial % 3, 4, false, std::nullopt,
                                                     static_cast<std::size_t>(trial % 2));
        const TargetSequence t(planted.t);
        InverseOptions options;
        options.precision_bits = 1024;
        const auto sol = solve_inverse(t, trial % 2 ? FreePolicy::zeros() : FreePolicy::seeded(trial), options);
        if (sol.mode == SolutionMode::Exact) {
            EXPECT_EQ(d_values(sol.exact(), t.size()), planted.t);
            continue;
        }
        ++float_cases;
        EXPECT_EQ(sol.precision_bits, 1024u);
        EXPECT_LE(sol.max_residual, BigFloat(Rational(1, 1) / pow(Rational(10), 30)));
        // Independent check in exact arithmetic on the rounded solution.
        std::vector<Rational> rounded;
        for (const auto& x : sol.real().terms()) rounded.push_back(x.to_rational());
        const auto d = d_values(MomentSequence(rounded), t.size());
        for (std::size_t n = 0; n < t.size(); ++n)
            EXPECT_LE(abs(d[n] - t[n]), Rational(1, 1) / pow(Rational(10), 30) * std::max(Rational(1), Rational(abs(t[n]))));
    }
    EXPECT_GT(float_cases, 20);
}

TEST(SolveInverse, FreeEntriesDoNotMoveDeterminants) {
    oracle::Random rnd(505);
    for (int trial = 0; trial < 20; ++trial) {
        const auto planted = oracle::planted_targets(rnd, 3, 3, true);
        const TargetSequence t(planted.t);
        const auto a = solve_inverse(t, FreePolicy::zeros());
        const auto b = solve_inverse(t, FreePolicy::seeded(1000 + trial));
        EXPECT_EQ(d_values(a.exact(), t.size()), d_values(b.exact(), t.size()));
    }
}

TEST(SolveInverse, RejectsWithFirstViolation) {
    oracle::Random rnd(506);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const auto which = static_cast<std::size_t>(rnd.integer(0, 2));
        const auto bad = oracle::planted_targets(rnd, 5, 4, true, which);
        if (bad.conditions.size() <= which) continue;
        const auto report = frobenius_check(TargetSequence(bad.t));
        ASSERT_FALSE(report.solvable);
        EXPECT_EQ(report.violation->k, bad.conditions[which]);
        EXPECT_EQ(report.violation->index, bad.support[bad.conditions[which]]);
        EXPECT_THROW(solve_inverse(TargetSequence(bad.t)), NotSolvable);
        ++checked;
    }
    EXPECT_GT(checked, 20);
}

TEST(FreePolicy, Parsing) {
    EXPECT_EQ(FreePolicy::parse("zeros").kind, FreePolicy::Kind::Zeros);
    const auto p = FreePolicy::parse("seed:42");
    EXPECT_EQ(p.kind, FreePolicy::Kind::Seed);
    EXPECT_EQ(p.seed, 42u);
    EXPECT_EQ(p.to_string(), "seed:42");
    EXPECT_THROW(FreePolicy::parse("seed:"), ParseError);
    EXPECT_THROW(FreePolicy::parse("seed:-1"), ParseError);
    EXPECT_THROW(FreePolicy::parse("random"), ParseError);
}

TEST(SolveInverse, PrecisionExhaustedWhenToleranceUnreachable) {
    InverseOptions options;
    options.precision_bits = 64;
    options.tol = Rational(1, 1) / pow(Rational(10), 200);
    EXPECT_THROW(solve_inverse(TargetSequence{2, 0, -3, 0, 0, 5}, FreePolicy::seeded(1), options),
                 PrecisionExhausted);
}

TEST(SolveInverse, IllConditionedTargetNeedsMoreBits) {
    // With zero free entries the forced tail grows past 1e29, so 256 bits
    // cannot hold D_13 = 0 to within the tolerance.
    const TargetSequence t{0, 0, Rational(6, 7), 0, Rational(-36, 7), Rational(-180, 7), 0,
                           0, 0, Rational(-540, 7), 0, Rational(1080, 7), 0, 0};
    EXPECT_THROW(solve_inverse(t), PrecisionExhausted);
    InverseOptions options;
    options.precision_bits = 512;
    const auto sol = solve_inverse(t, FreePolicy::zeros(), options);
    EXPECT_EQ(sol.mode, SolutionMode::BigFloat);
    EXPECT_LE(sol.max_residual, BigFloat(options.tol));
}
