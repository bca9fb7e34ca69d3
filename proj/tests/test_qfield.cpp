#include <gtest/gtest.h>

#include "macq/qfield.hpp"
#include "macq/rng.hpp"

using namespace macq;

namespace {

const CoeffRat q(UnitMono::q());
const CoeffRat t(UnitMono::t());

}  // namespace

TEST(QField, QnumExamples) {
    EXPECT_TRUE(qnum(0).is_zero());
    EXPECT_TRUE(qnum(1).is_one());
    EXPECT_EQ(qnum(2), q + q.inv());
    EXPECT_EQ(qnum(-2), -(q + q.inv()));
    EXPECT_EQ(qnum(3).str(), "q^2 + 1 + q^-2");
}

TEST(QField, QnumMatchesQuotient) {
    for (int a = -6; a <= 6; ++a) {
        CoeffRat direct = (q.pow(a) - q.pow(-a)) / (q - q.inv());
        EXPECT_EQ(qnum(a), direct) << a;
    }
}

TEST(QField, FallingFactorialExamples) {
    EXPECT_TRUE(qfall(5, 0).is_one());
    EXPECT_EQ(qfall(2, 2), q + q.inv());
    EXPECT_TRUE(qfall(1, 3).is_zero());
    EXPECT_TRUE(qfact(0).is_one());
    EXPECT_TRUE(qfact(1).is_one());
    EXPECT_EQ(qfact(3), (q.pow(2) + 1 + q.pow(-2)) * (q + q.inv()));
    EXPECT_THROW(qfact(-1), std::domain_error);
}

TEST(QField, FallingFactorialRecursion) {
    for (int a = -4; a <= 6; ++a)
        for (int m = 1; m <= 5; ++m) EXPECT_EQ(qfall(a, m), qnum(a) * qfall(a - 1, m - 1));
}

TEST(QField, QnumSymmetries) {
    for (int a = -5; a <= 5; ++a) {
        EXPECT_EQ(qnum(-a), -qnum(a));
        EXPECT_EQ(subst(qnum(a), UnitMono::q(-1), UnitMono::t()), qnum(a));
    }
}

TEST(QField, PochRatio) {
    EXPECT_TRUE(poch_ratio(3, 0, 2).is_one());
    EXPECT_EQ(poch_ratio(0, 1, 1), 1 - t);
    EXPECT_EQ(poch_ratio(2, 1, 0), 1 - q.pow(2));
    for (int a = -2; a <= 2; ++a)
        for (int d1 = 0; d1 <= 3; ++d1)
            for (int d2 = 0; d2 <= 3; ++d2)
                EXPECT_EQ(poch_ratio(a, d1 + d2, 1), poch_ratio(a, d1, 1) * poch_ratio(a + d1, d2, 1));
}

TEST(QField, Substitution) {
    EXPECT_EQ(subst(1 - t, UnitMono::q(), UnitMono::q(2)), 1 - q.pow(2));
    EXPECT_TRUE(subst((1 - t) / (1 - q), UnitMono::q(), UnitMono::q()).is_one());
    EXPECT_EQ(subst(qnum(2), UnitMono::q(-1), UnitMono::t()), q + q.inv());
    EXPECT_THROW(subst(1 / (q - t), UnitMono::q(), UnitMono::q()), std::domain_error);
    UnitMono minus_q{-1, 1, 0};
    EXPECT_EQ(subst(q.pow(3) + t, minus_q, UnitMono::t()), -q.pow(3) + t);
}

TEST(QField, CanonicalForm) {
    CoeffRat x = (q * q - 1) / (q - 1);
    EXPECT_EQ(x, q + 1);
    EXPECT_TRUE(x.is_laurent());
    CoeffRat y = CoeffRat(LaurentQT(2)) / CoeffRat(LaurentQT(4));
    EXPECT_EQ(y.str(), "1/2");
    CoeffRat z = 1 / (q.inv() - q);
    EXPECT_EQ(z.den().lead().c, 1);
    EXPECT_GE(z.den().min_q(), 0);
    EXPECT_EQ(z.str(), "-q/(q^2 - 1)");
    CoeffRat w = (1 - t) / (1 - q * t);
    EXPECT_EQ(w.str(), "(t - 1)/(q*t - 1)");
}

TEST(QField, FieldAxiomsOnSamples) {
    Rng rng(7);
    for (int s = 0; s < 60; ++s) {
        CoeffRat x = random_rat(rng), y = random_rat(rng), z = random_rat(rng);
        EXPECT_EQ((x + y) * z, x * z + y * z);
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x * y) * z, x * (y * z));
        if (!x.is_zero()) EXPECT_TRUE((x / x).is_one());
        EXPECT_TRUE((x - x).is_zero());
        // cross-multiplication agrees with canonical equality
        CoeffRat u = x * y;
        EXPECT_EQ(u.num() * x.den() * y.den(), x.num() * y.num() * u.den());
    }
}

TEST(QField, GcdIsCommonDivisor) {
    Rng rng(11);
    for (int s = 0; s < 40; ++s) {
        LaurentQT a = random_laurent(rng, 3, 2), b = random_laurent(rng, 3, 2), c = random_laurent(rng, 2, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        a = a.shifted(-a.min_q(), -a.min_t());
        b = b.shifted(-b.min_q(), -b.min_t());
        c = c.shifted(-c.min_q(), -c.min_t());
        LaurentQT g = poly_gcd(a * c, b * c);
        EXPECT_NO_THROW(poly_divexact(a * c, g));
        EXPECT_NO_THROW(poly_divexact(b * c, g));
        EXPECT_NO_THROW(poly_divexact(g, c));
    }
}
