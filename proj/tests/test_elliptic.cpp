#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nodoid/elliptic.hpp"
#include "nodoid/errors.hpp"
#include "oracles.hpp"

using namespace nodoid;
using namespace nodoid::elliptic;

TEST(CompleteK, ZeroModulusIsHalfPi) {
    EXPECT_NEAR(complete_K(0.0), std::numbers::pi / 2.0, 1e-15);
}

TEST(CompleteK, MatchesQuadratureOfDefiningIntegral) {
    for (double msq : {0.25, 0.5, 0.9}) {
        EXPECT_NEAR(complete_K(msq), oracle::elliptic_F(std::numbers::pi / 2.0, msq), 1e-10)
            << "msq = " << msq;
    }
}

TEST(CompleteK, QuarterPeriodOfTheMassMinusThreeNodoid) {
    // A = 3/4 and k'^2 = 8/9 for m = -3; a published quarter period of 0.8428.
    EXPECT_NEAR(complete_K(8.0 / 9.0) / 0.75, 4.0 * 0.8428, 2e-3);
}

TEST(CompleteK, IncreasingAndUnbounded) {
    EXPECT_LT(complete_K(0.5), complete_K(0.9));
    EXPECT_LT(complete_K(0.9), complete_K(0.99));
    EXPECT_GT(complete_K(1.0 - 1e-12), 14.0);
}

TEST(CompleteK, RejectsOutOfRangeModulus) {
    EXPECT_THROW((void)complete_K(1.0), DomainError);
    EXPECT_THROW((void)complete_K(-0.1), DomainError);
    EXPECT_THROW((void)complete_K(std::nan("")), DomainError);
}

TEST(IncompleteF, Basics) {
    EXPECT_EQ(incomplete_F(0.0, 0.3), 0.0);
    EXPECT_NEAR(incomplete_F(std::numbers::pi / 2.0, 0.25), complete_K(0.25), 1e-15);
    EXPECT_NEAR(incomplete_F(0.7, 0.5), oracle::elliptic_F(0.7, 0.5), 1e-10);
    EXPECT_NEAR(incomplete_F(2.5, 0.8), oracle::elliptic_F(2.5, 0.8), 1e-10);
    EXPECT_NEAR(incomplete_F(-1.1, 0.4), -incomplete_F(1.1, 0.4), 1e-15);
    EXPECT_THROW((void)incomplete_F(0.5, 1.0), DomainError);
}

TEST(IncompleteF, StrictlyIncreasing) {
    double prev = incomplete_F(-4.0, 0.7);
    for (int i = 1; i <= 400; ++i) {
        const double cur = incomplete_F(-4.0 + 0.02 * i, 0.7);
        ASSERT_GT(cur, prev) << "phi = " << -4.0 + 0.02 * i;
        prev = cur;
    }
}

TEST(JacobiTriple, SpecialValues) {
    const auto z = jacobi_triple(0.0, 0.6);
    EXPECT_EQ(z.sn, 0.0);
    EXPECT_EQ(z.cn, 1.0);
    EXPECT_EQ(z.dn, 1.0);

    const auto d = jacobi_triple(1.2, 0.0);
    EXPECT_NEAR(d.sn, std::sin(1.2), 1e-15);
    EXPECT_NEAR(d.cn, std::cos(1.2), 1e-15);
    EXPECT_EQ(d.dn, 1.0);

    for (double msq : {0.1, 0.5, 0.95}) {
        const auto q = jacobi_triple(complete_K(msq), msq);
        EXPECT_NEAR(q.sn, 1.0, 1e-12);
        EXPECT_NEAR(q.cn, 0.0, 1e-7);  // cn ~ sqrt(1 - sn), so only half the digits survive
        EXPECT_NEAR(q.dn, std::sqrt(1.0 - msq), 1e-12);
    }
    EXPECT_THROW((void)jacobi_triple(0.3, 1.0), DomainError);
}

TEST(JacobiTriple, InvertsTheIncompleteIntegral) {
    const double msq = 0.5, xi = 0.8;
    const double phi = oracle::bisect([&](double ph) { return oracle::elliptic_F(ph, msq) - xi; }, 0.0,
                                      std::numbers::pi / 2.0);
    const auto e = jacobi_triple(xi, msq);
    EXPECT_NEAR(e.sn, std::sin(phi), 1e-10);
    EXPECT_NEAR(e.cn, std::cos(phi), 1e-10);
    EXPECT_NEAR(e.dn, std::sqrt(1.0 - msq * std::sin(phi) * std::sin(phi)), 1e-10);
}

class JacobiProperties : public ::testing::Test {
protected:
    std::mt19937_64 gen = oracle::rng();
    std::uniform_real_distribution<double> xi_dist{-10.0, 10.0};
    std::uniform_real_distribution<double> msq_dist{0.0, 0.99};
};

TEST_F(JacobiProperties, PythagoreanIdentitiesAndRange) {
    for (int i = 0; i < 1000; ++i) {
        const double xi = xi_dist(gen), msq = msq_dist(gen);
        const auto e = jacobi_triple(xi, msq);
        ASSERT_NEAR(e.sn * e.sn + e.cn * e.cn, 1.0, 1e-12);
        ASSERT_NEAR(e.dn * e.dn + msq * e.sn * e.sn, 1.0, 1e-12);
        ASSERT_GE(e.dn, std::sqrt(1.0 - msq) - 1e-15);
        ASSERT_LE(e.dn, 1.0);
    }
}

TEST_F(JacobiProperties, DerivativeOfSnIsCnDn) {
    const double h = 1e-5;
    for (int i = 0; i < 1000; ++i) {
        const double xi = xi_dist(gen), msq = msq_dist(gen);
        const double fd = (jacobi_triple(xi + h, msq).sn - jacobi_triple(xi - h, msq).sn) / (2.0 * h);
        const auto e = jacobi_triple(xi, msq);
        ASSERT_NEAR(fd, e.cn * e.dn, 1e-6) << "xi = " << xi << " msq = " << msq;
    }
}

TEST_F(JacobiProperties, Periodicity) {
    for (int i = 0; i < 1000; ++i) {
        const double xi = xi_dist(gen), msq = msq_dist(gen);
        const double k = complete_K(msq);
        ASSERT_NEAR(jacobi_triple(xi + 4.0 * k, msq).sn, jacobi_triple(xi, msq).sn, 1e-10);
        ASSERT_NEAR(jacobi_triple(xi + 2.0 * k, msq).dn, jacobi_triple(xi, msq).dn, 1e-10);
    }
}

TEST_F(JacobiProperties, AdditionFormula) {
    for (int i = 0; i < 1000; ++i) {
        const double u = xi_dist(gen), v = xi_dist(gen), msq = msq_dist(gen);
        const auto a = jacobi_triple(u, msq);
        const auto b = jacobi_triple(v, msq);
        const double quotient = (a.sn * b.cn * b.dn + b.sn * a.cn * a.dn) /
                                (1.0 - msq * a.sn * a.sn * b.sn * b.sn);
        ASSERT_NEAR(quotient, jacobi_triple(u + v, msq).sn, 1e-9);
    }
}

TEST(CarlsonRF, KnownValues) {
    // R_F(0, 1, 2) = 1.31102877714605990523 (Carlson 1995 test table).
    EXPECT_NEAR(carlson_RF(0.0, 1.0, 2.0), 1.3110287771460599052, 1e-14);
    EXPECT_NEAR(carlson_RF(1.0, 1.0, 1.0), 1.0, 1e-15);
    EXPECT_THROW((void)carlson_RF(0.0, 0.0, 1.0), DomainError);
}
