#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace hankel;

namespace {

MomentSequence quasi_definite(oracle::Random& rnd, std::size_t len) {
    for (;;) {
        auto s = rnd.sequence(len);
        bool ok = true;
        for (std::size_t n = 0; 2 * n + 1 < len && ok; ++n) ok = hankel_det(s, n) != 0;
        if (ok) return s;
    }
}

} // namespace

TEST(PolyP, Examples) {
    EXPECT_EQ(poly_P(MomentSequence{1, 2}, 1), (RationalPolynomial{-2, 1}));
    EXPECT_EQ(poly_P(MomentSequence{2, 1, 1, 1}, 2), (RationalPolynomial{0, -1, 1}));
    EXPECT_EQ(poly_P(MomentSequence{1, 0, Rational(1, 2), 0}, 2),
              (RationalPolynomial{Rational(-1, 4), 0, Rational(1, 2)}));
    EXPECT_EQ(poly_P(MomentSequence{}, 0), RationalPolynomial::constant(1));
    EXPECT_THROW(poly_P(MomentSequence{1, 2}, 2), IndexOutOfRange);
}

TEST(PolyP, MatchesCofactorOracleIncludingDegenerateCases) {
    oracle::Random rnd(201);
    for (int trial = 0; trial < 80; ++trial) {
        // Small integer entries make vanishing minors common.
        const auto s = trial % 2 ? rnd.sequence(9) : rnd.sequence(9, -1, 1, 1);
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto p = poly_P(s, n);
            EXPECT_EQ(p, oracle::poly_P(s, n));
            const Rational lead = n == 0 ? Rational(1) : hankel_det(s, n - 1);
            EXPECT_EQ(p.coeff(n), lead);
            EXPECT_EQ(p.degree() == n, lead != 0);
        }
    }
}

TEST(PolyQ, ExamplesAndOracle) {
    EXPECT_EQ(poly_Q(MomentSequence{1, 7}, 1), RationalPolynomial::constant(1));
    EXPECT_EQ(poly_Q(MomentSequence{2, 1, 1, 1}, 2), (RationalPolynomial{-1, 2}));
    EXPECT_TRUE(poly_Q(MomentSequence{3}, 0).is_zero());
    oracle::Random rnd(202);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s = rnd.sequence(9);
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto q = poly_Q(s, n);
            EXPECT_EQ(q, oracle::poly_Q(s, n));
            if (!q.is_zero()) EXPECT_LT(*q.degree(), n);
        }
    }
}

TEST(ApplyL, ExamplesAndOrthogonality) {
    const MomentSequence s{2, 1, 1, 1};
    EXPECT_EQ(apply_L(s, RationalPolynomial::constant(1)), 2);
    EXPECT_EQ(apply_L(s, poly_P(s, 1).shifted(1)), 1);
    EXPECT_EQ(apply_L(s, poly_P(s, 1)), 0);
    const MomentSequence t{1, 0, Rational(1, 2), 0, Rational(3, 4)};
    const auto p2 = poly_P(t, 2);
    EXPECT_EQ(apply_L(t, p2 * p2), hankel_det(t, 2) * hankel_det(t, 1));
    EXPECT_THROW(apply_L(MomentSequence{1, 2}, RationalPolynomial::monomial(2)), IndexOutOfRange);

    oracle::Random rnd(203);
    for (int trial = 0; trial < 40; ++trial) {
        const auto u = rnd.sequence(9);
        for (std::size_t n = 0; n <= 4; ++n) {
            const auto p = poly_P(u, n);
            for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(apply_L(u, p.shifted(k)), 0);
            const Rational below = n == 0 ? Rational(1) : hankel_det(u, n - 1);
            EXPECT_EQ(apply_L(u, p * p), hankel_det(u, n) * below);
        }
    }
}

TEST(KroneckerResidual, VanishesAndGivesCoprimality) {
    EXPECT_EQ(kronecker_residual(MomentSequence{2, 1, 1, 1}, 2), 0);
    EXPECT_EQ(kronecker_residual(MomentSequence{5, 3}, 1), 0);
    EXPECT_THROW(kronecker_residual(MomentSequence{1, 2}, 0), IndexOutOfRange);
    oracle::Random rnd(204);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + trial % 5;
        const auto s = trial % 3 ? rnd.sequence(2 * r) : rnd.sequence(2 * r, -1, 1, 1);
        EXPECT_EQ(kronecker_residual(s, r), 0);
        if (hankel_det(s, r - 1) != 0) {
            EXPECT_TRUE(gcd(poly_P(s, r), poly_Q(s, r)).is_constant());
            EXPECT_TRUE(gcd(poly_P(s, r), poly_P(s, r - 1)).is_constant());
        }
    }
}

TEST(Jacobi, Examples) {
    const auto j = jacobi_from_moments(MomentSequence{1, 0, Rational(1, 2), 0}, 2);
    EXPECT_EQ(j.a, (std::vector<Rational>{0, 0}));
    EXPECT_EQ(j.b, (std::vector<Rational>{1, Rational(1, 2)}));
    const auto c = jacobi_from_moments(MomentSequence{1, 1, 2, 5}, 1);
    EXPECT_EQ(c.a.front(), 1);
    EXPECT_EQ(c.b.front(), 1);
    try {
        jacobi_from_moments(MomentSequence{1, 0, 0, 0}, 2);
        FAIL() << "expected NotQuasiDefinite";
    } catch (const NotQuasiDefinite& e) {
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_EQ(moments_from_jacobi(j), (MomentSequence{1, 0, Rational(1, 2), 0}));
    EXPECT_EQ(moments_from_jacobi({{Rational(7, 3)}, {1}}), (MomentSequence{1, Rational(7, 3)}));
    EXPECT_THROW(moments_from_jacobi({{1, 2}, {1, 0}}), ZeroB);
}

TEST(Jacobi, RoundTripBothWays) {
    oracle::Random rnd(205);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        JacobiCoeffs j;
        for (std::size_t k = 0; k < n; ++k) {
            j.a.push_back(rnd.rational());
            j.b.push_back(rnd.nonzero());
        }
        const auto s = moments_from_jacobi(j);
        EXPECT_EQ(s.size(), 2 * n);
        EXPECT_EQ(jacobi_from_moments(s, n), j);

        const auto u = quasi_definite(rnd, 2 * n);
        EXPECT_EQ(moments_from_jacobi(jacobi_from_moments(u, n)), u);
    }
}

TEST(SolvePrescribed, ExamplesAndRoundTrip) {
    EXPECT_EQ(solve_prescribed({1}, {0}), (MomentSequence{1, 0}));
    EXPECT_EQ(solve_prescribed({1, Rational(1, 2)}, {0, 0}), (MomentSequence{1, 0, Rational(1, 2), 0}));
    EXPECT_THROW(solve_prescribed({1, 0}, {0, 0}), ZeroTarget);
    EXPECT_THROW(solve_prescribed({1, 2}, {0}), IndexOutOfRange);

    oracle::Random rnd(206);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<Rational> t, tp;
        for (std::size_t k = 0; k < n; ++k) {
            t.push_back(rnd.nonzero());
            tp.push_back(rnd.rational());
        }
        const auto s = solve_prescribed(t, tp);
        const auto profile = determinant_transform(s);
        EXPECT_EQ(std::vector<Rational>(profile.d_values.begin(), profile.d_values.begin() + n - 1),
                  std::vector<Rational>(t.begin(), t.end() - 1));
        // D_{n-1} needs s_{2n-2}; D'_n needs s_{2n-1}.
        EXPECT_EQ(hankel_det(s, n - 1), t.back());
        EXPECT_EQ(profile.d_prime_values, tp);
    }
}

TEST(FrobeniusRecurrence, ResidualVanishes) {
    EXPECT_TRUE(frobenius_recurrence_residual(MomentSequence{1, 0, Rational(1, 2), 0, Rational(3, 4), 0}, 1)
                    .is_zero());
    oracle::Random rnd(207);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = trial % 5;
        const auto s = trial % 3 ? rnd.sequence(2 * n + 2) : rnd.sequence(2 * n + 2, -1, 1, 1);
        EXPECT_TRUE(frobenius_recurrence_residual(s, n).is_zero()) << "n = " << n;
    }
}
