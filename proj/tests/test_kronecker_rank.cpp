#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hankel;

TEST(HankelRank, Examples) {
    auto c = hankel_rank(MomentSequence{1, 3, 9, 27, 81, 243});
    EXPECT_EQ(c.verdict, RankVerdict::FiniteRank);
    EXPECT_EQ(c.rank, 1u);
    EXPECT_EQ(c.horizon, 6u);
    ASSERT_TRUE(c.witness);
    EXPECT_EQ(c.witness->d, (std::vector<Rational>{3}));

    c = hankel_rank(MomentSequence{2, 1, 1, 1, 1, 1, 1});
    EXPECT_EQ(c.verdict, RankVerdict::FiniteRank);
    EXPECT_EQ(c.rank, 2u);
    EXPECT_EQ(c.d_profile.d_values, (std::vector<Rational>{2, 1, 0, 0}));

    c = hankel_rank(MomentSequence{1, 1, 2, 5, 14});
    EXPECT_EQ(c.verdict, RankVerdict::RankAtLeast);
    EXPECT_EQ(c.rank, 3u);
    EXPECT_FALSE(c.witness);

    EXPECT_EQ(hankel_rank(MomentSequence{0, 0, 0}).verdict, RankVerdict::ZeroSequence);
    c = hankel_rank(MomentSequence{0, 0, 1});
    EXPECT_EQ(c.verdict, RankVerdict::RankAtLeast);
    EXPECT_GE(c.rank, 1u);
}

TEST(HankelRank, RecurrenceBreakDowngradesVerdict) {
    // Rank 1 on s_0..s_4, broken at s_5: D_n = 0 for every computable n >= 1.
    const MomentSequence s{1, 2, 4, 8, 16, 33};
    EXPECT_EQ(determinant_transform(s).d_values, (std::vector<Rational>{1, 0, 0}));
    const auto c = hankel_rank(s);
    EXPECT_EQ(c.verdict, RankVerdict::RankAtLeast);
    EXPECT_EQ(c.rank, 1u);
}

TEST(RationalForm, Examples) {
    auto rf = rational_form(MomentSequence{1, 2, 4, 8}, 1);
    EXPECT_EQ(rf.p, (RationalPolynomial{-2, 1}));
    EXPECT_EQ(rf.q, RationalPolynomial::constant(1));
    rf = rational_form(MomentSequence{2, 1, 1, 1}, 2);
    EXPECT_EQ(rf.p, (RationalPolynomial{0, -1, 1}));
    EXPECT_EQ(rf.q, (RationalPolynomial{-1, 2}));
    EXPECT_THROW(rational_form(MomentSequence{1, 1, 1, 1}, 2), SingularLeadingMinor);
}

TEST(ExpandRational, Examples) {
    EXPECT_EQ(expand_rational({RationalPolynomial{-2, 1}, RationalPolynomial::constant(1)}, 4),
              (MomentSequence{1, 2, 4, 8, 16}));
    EXPECT_THROW(expand_rational({RationalPolynomial{-2, 1}, RationalPolynomial{0, 1}}, 3), DegreeViolation);
    EXPECT_THROW(expand_rational({RationalPolynomial{}, RationalPolynomial{}}, 3), DegreeViolation);
    // Non-monic denominator: 3 / (2x - 1) = (3/2) sum (1/2)^m x^{-m-1}.
    EXPECT_EQ(expand_rational({RationalPolynomial{-1, 2}, RationalPolynomial::constant(3)}, 2),
              (MomentSequence{Rational(3, 2), Rational(3, 4), Rational(3, 8)}));
}

TEST(ExpandRational, AgreesWithApproxSequence) {
    oracle::Random rnd(401);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const auto s = rnd.sequence(2 * r);
        if (hankel_det(s, r - 1) == 0) continue;
        const auto e = expand_rational(rational_form(s, r), 2 * r + 5);
        EXPECT_EQ(e, approx_sequence(s, r, 2 * r + 5));
        EXPECT_EQ(e.prefix(2 * r), s);
    }
}

TEST(RationalForm, CoprimeForPlantedRank) {
    oracle::Random rnd(402);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const auto s = oracle::planted_finite_rank(rnd, r, 2 * r + 4);
        const auto rf = rational_form(s, r);
        EXPECT_TRUE(gcd(rf.p, rf.q).is_constant());
        EXPECT_FALSE(gcd(rf.p, rf.q).is_zero());
        // x^r p(1/x) at x = 0 is the leading coefficient D_{r-1}.
        EXPECT_EQ(rf.p.leading(), hankel_det(s, r - 1));
    }
}

TEST(RankCheckers, AgreeOnPlantedAndPerturbedSequences) {
    oracle::Random rnd(403);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 4;
        auto s = oracle::planted_finite_rank(rnd, r, 2 * r + 6);
        const bool perturb = trial % 3 == 0;
        if (perturb) {
            std::vector<Rational> v(s.terms().begin(), s.terms().end());
            v.back() += 1;
            s = MomentSequence(v);
        }
        const bool a = check_matches_approx(s, r);
        const bool c = check_rational_expansion(s, r);
        const bool d = check_recurrence(s, r);
        EXPECT_EQ(a, !perturb);
        EXPECT_EQ(a, c);
        EXPECT_EQ(a, d);
        // The determinant check sees s only up to the last full determinant, so a change in
        // the final odd-index term is invisible to it.
        EXPECT_TRUE(check_determinants_vanish(s, r));
        const auto cert = hankel_rank(s);
        EXPECT_EQ(cert.verdict == RankVerdict::FiniteRank, !perturb);
        EXPECT_EQ(cert.rank, r);
    }
}

TEST(RankCheckers, DeterminantCheckSeesEvenLengthPerturbation) {
    oracle::Random rnd(404);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + trial % 4;
        auto s = oracle::planted_finite_rank(rnd, r, 2 * r + 5);
        std::vector<Rational> v(s.terms().begin(), s.terms().end());
        v[2 * r + 2] += 1; // inside H_{r+1}
        const MomentSequence u(v);
        EXPECT_FALSE(check_determinants_vanish(u, r));
        EXPECT_FALSE(check_matches_approx(u, r));
        EXPECT_FALSE(check_rational_expansion(u, r));
        EXPECT_FALSE(check_recurrence(u, r));
    }
}

TEST(RankCheckers, SamePrefixSameExtension) {
    oracle::Random rnd(405);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t r = 1 + trial % 4;
        const auto s = oracle::planted_finite_rank(rnd, r, 2 * r + 6);
        const auto t = approx_sequence(s.prefix(2 * r), r, 2 * r + 5);
        const auto cs = hankel_rank(s), ct = hankel_rank(t);
        EXPECT_EQ(t, s);
        EXPECT_EQ(cs.witness, ct.witness);
        EXPECT_EQ(cs.rank, ct.rank);
    }
}

TEST(GrowthEstimate, Examples) {
    std::vector<Rational> v;
    Rational p = 1;
    for (int k = 0; k < 64; ++k, p *= 2) v.push_back(p);
    const BigFloat g = growth_estimate(MomentSequence(v));
    EXPECT_LT(abs(g - BigFloat(2L)), BigFloat(Rational(1, 50)));
    EXPECT_EQ(growth_estimate(MomentSequence(std::vector<Rational>(10, 1))), BigFloat(1L));
    EXPECT_THROW(growth_estimate(MomentSequence{1, 2, 3}), IndexOutOfRange);
}
