#include "jumpstat/genfunc.hpp"
#include "jumpstat/io.hpp"
#include "jumpstat/oracle.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

namespace jumpstat {
namespace {

const Poly2 t = Poly2::t();
const Poly2 q = Poly2::q();

TEST(Catalan, SeriesMatchesFactorialFormula) {
    const Series f = solve_catalan(30);
    for (unsigned n = 0; n <= 30; ++n) {
        EXPECT_EQ(f[n], Poly2(Rational(testing::catalan_by_factorials(n)))) << "n=" << n;
    }
}

TEST(Catalan, RadicalForm) {
    EXPECT_TRUE(check_identity(identities::catalan(), solve_catalan(40)).pass);
}

TEST(Trivariate, LowCoefficients) {
    const Series f = solve_F(3);
    EXPECT_EQ(f[0], Poly2(1));
    EXPECT_EQ(f[1], t);
    EXPECT_EQ(f[2], q * t + t * t);
}

TEST(Trivariate, MatchesBruteForce) {
    const Series f = solve_F(10);
    EXPECT_EQ(f, brute_force_enumerator(10));
}

TEST(Trivariate, ClosedFormAtSmallOrders) {
    EXPECT_TRUE(verify_F_closed_form(0).pass);
    EXPECT_TRUE(verify_F_closed_form(12).pass);
}

TEST(Trivariate, RadicandFactorsAsSquareTimesJumpRadicand) {
    EXPECT_TRUE(trivariate_radicand_factors());
}

TEST(Trivariate, SignFlipIsCaughtEarly) {
    RadicalIdentity id = identities::trivariate();
    id.remainder[1] = t + q * t;  // was t - q t
    const Verdict v = check_identity(id, solve_F(12));
    ASSERT_FALSE(v.pass);
    ASSERT_TRUE(v.first_failure);
    EXPECT_LE(v.first_failure->n, 2u);
    EXPECT_FALSE(v.first_failure->residual.is_zero());
}

TEST(Jumps, Coefficients) {
    const Series h = solve_H(4);
    EXPECT_EQ(h[2], Poly2(1) + q);
    EXPECT_EQ(h[3], Poly2(1) + Rational(3) * q + q * q);
    for (unsigned n = 0; n <= 4; ++n) EXPECT_EQ(evaluate(h[n], 1, 1), Rational(catalan(n)));
}

TEST(Depth, Coefficients) {
    const Series j = solve_Jdepth(3);
    EXPECT_EQ(j[1], t);
    EXPECT_EQ(j[2], t + t * t);
    EXPECT_EQ(substitute(j, Marker::t, 1), solve_catalan(3));
    EXPECT_TRUE(verdict_from_residual("4", depth_equation_residual(solve_Jdepth(20))).pass);
}

TEST(JumpDistance, Coefficients) {
    const Series k = solve_K(3);
    EXPECT_EQ(k[1], Poly2(1));
    EXPECT_EQ(k[2], Poly2(1) + q);
    EXPECT_EQ(k[3], Poly2(1) + Rational(2) * q + Rational(2) * (q * q));
    EXPECT_EQ(substitute(solve_K(20), Marker::q, 1), solve_catalan(20));
}

TEST(JumpDistance, AgreesWithDepthOracle) {
    // JD = V - D, so reversing the brute-force depth exponents gives K.
    const Series brute = brute_force_series(10, [](const TreeStats& s) {
        return std::pair<std::uint64_t, std::uint64_t>{0, s.jd};
    });
    EXPECT_EQ(solve_K(10), brute);
}

TEST(Depth, MatchesDepthOracle) {
    const Series brute = brute_force_series(10, [](const TreeStats& s) {
        return std::pair<std::uint64_t, std::uint64_t>{s.d, 0};
    });
    EXPECT_EQ(solve_Jdepth(10), brute);
}

TEST(Series, CoefficientsAreIntegral) {
    for (const Series& s : {solve_F(15), solve_Jdepth(15), solve_K(15)}) {
        for (unsigned n = 0; n <= s.order(); ++n) {
            EXPECT_TRUE(s[n].has_integer_coefficients()) << "n=" << n;
        }
    }
}

TEST(VerifyTheorem, AllPassAtModerateOrder) {
    for (unsigned theorem = 0; theorem <= 6; ++theorem) {
        const Verdict v = verify_theorem(theorem, 20);
        EXPECT_TRUE(v.pass) << "theorem " << theorem;
        EXPECT_EQ(v.theorem, std::to_string(theorem));
        EXPECT_FALSE(v.first_failure);
    }
    EXPECT_THROW(verify_theorem(7, 5), ContractViolation);
}

TEST(VerifyTheorem, OrderZero) {
    for (unsigned theorem = 0; theorem <= 6; ++theorem) {
        EXPECT_TRUE(verify_theorem(theorem, 0).pass) << "theorem " << theorem;
    }
}

TEST(Verdict, MutatedIdentitiesFail) {
    RadicalIdentity jumps = identities::jumps();
    jumps.multiplier[1] = Rational(3) * q;
    EXPECT_FALSE(check_identity(jumps, solve_H(10)).pass);

    RadicalIdentity depth = identities::depth();
    depth.remainder[0] = Poly2(-3);
    EXPECT_FALSE(check_identity(depth, solve_Jdepth(10)).pass);

    RadicalIdentity jd = identities::jump_distance();
    jd.radicand[1] = Rational(-4) * (q * q);
    EXPECT_FALSE(check_identity(jd, solve_K(10)).pass);
}

TEST(Verdict, Json) {
    EXPECT_EQ(to_json(verify_theorem(0, 3)).dump(),
              R"({"theorem":"0","order":3,"pass":true,"first_failure":null})");
    RadicalIdentity id = identities::catalan();
    id.remainder[0] = Poly2(-2);
    const Json j = to_json(check_identity(id, solve_catalan(3)));
    EXPECT_FALSE(j["pass"].get<bool>());
    EXPECT_EQ(j["first_failure"]["n"], 0);
}

TEST(Verdict, CombineReportsEarliestFailure) {
    Verdict a{"x", 5, false, Verdict::Failure{4, Poly2(1)}};
    Verdict b{"x", 5, false, Verdict::Failure{2, Poly2(1)}};
    Verdict ok{"x", 5, true, std::nullopt};
    const Verdict v = combine("x", 5, {ok, a, b});
    EXPECT_FALSE(v.pass);
    EXPECT_EQ(v.first_failure->n, 2u);
    EXPECT_TRUE(combine("x", 5, {ok, ok}).pass);
}

}  // namespace
}  // namespace jumpstat
