#include <gtest/gtest.h>

#include "exact.hpp"
#include "ldaha/leonard.hpp"
#include "ldaha/qracah_params.hpp"

using namespace ldaha;

namespace {

void expect_close(CScalar got, CScalar want, double rel = 1e-12) {
    EXPECT_TRUE(approx_eq(got, want, {rel, 1e-15}).ok) << got << " vs " << want;
}

// h solved from c_1 = 1 in the c_i closed form with diameter d: c_1 is linear in h.
exact::Q h_from_c1(const exact::Desk &e, const exact::Q &ss) {
    using exact::pow;
    const auto q = e.q;
    const exact::Q c1_over_h = (1 - q) * (1 - ss * pow(q, e.d + 2)) * (e.r1 - ss * q) * (e.r2 - ss * q) /
                               (ss * pow(q, e.d) * (1 - ss * q * q) * (1 - ss * pow(q, 3)));
    return 1 / c1_over_h;
}

}  // namespace

TEST(FixSquareRoots, DeskPointR2) {
    QRacahParams p = fix_square_roots(4, 0.5, 5.0, 3.0, 2.0 / 3.0);
    expect_close(p.r2, 45.0 / 64.0);
}

TEST(FixSquareRoots, RootConstraintExactByConstruction) {
    for (CScalar q : {CScalar(0.5), CScalar(0.3, 0.4), CScalar(-0.7, 0.1)}) {
        QRacahParams p = fix_square_roots(5, q, CScalar(2, -1), 3.5, CScalar(-0.4, 0.9));
        expect_close(p.r1_half * p.r2_half, p.s_half * p.sstar_half * ipow(p.q_half, 6), 1e-15);
    }
}

TEST(FixSquareRoots, UnitSeedsGiveQPower) {
    QRacahParams p = fix_square_roots(6, 0.4, 1.0, 1.0, 1.0);
    expect_close(p.r2, ipow(0.4, 7));
}

TEST(FixSquareRoots, ZeroInputThrows) {
    EXPECT_THROW(fix_square_roots(4, 0.0, 5.0, 3.0, 2.0 / 3.0), std::invalid_argument);
    EXPECT_THROW(fix_square_roots(4, 0.5, 5.0, 0.0, 2.0 / 3.0), std::invalid_argument);
}

TEST(PrincipalSqrt, Branches) {
    expect_close(principal_sqrt(4.0), 2.0);
    expect_close(principal_sqrt(-9.0), CScalar(0, 3));
    CScalar r = principal_sqrt(CScalar(-1, -1e-3));
    EXPECT_GE(r.real(), 0.0);
}

TEST(Validate, DeskPointPasses) {
    ValidationReport r = validate(desk_point(), 1e-3);
    EXPECT_TRUE(r.passed) << r.first_failure();
    EXPECT_TRUE(r.first_failure().empty());
}

TEST(Validate, DeskPointWithR1ThreeQuartersFails) {
    QRacahParams p = make_params(4, 0.5, 5.0, 3.0, 0.75);
    ValidationReport r = validate(p, 1e-3);
    EXPECT_FALSE(r.passed);
    bool found = false;
    for (const auto &c : r.checks)
        if (c.name == "sstar*q^2/r1") {
            found = true;
            EXPECT_FALSE(c.ok);
            EXPECT_LT(c.distance, 1e-12);
        }
    EXPECT_TRUE(found);
}

TEST(Validate, QEqualOneFails) {
    QRacahParams p = make_params(4, 1.0, 5.0, 3.0, 2.0 / 3.0);
    ValidationReport r = validate(p);
    EXPECT_FALSE(r.passed);
    bool flagged = false;
    for (const auto &c : r.checks)
        if (c.name == "q^2 != 1")
            flagged = !c.ok;
    EXPECT_TRUE(flagged);
}

TEST(Validate, BrokenRootConstraintFails) {
    QRacahParams p = desk_point();
    p.r2_half = -p.r2_half;
    EXPECT_FALSE(validate(p).passed);
}

TEST(DeriveH, DeskPointMatchesExactSolutionOfC1) {
    exact::Desk e;
    const exact::Q h = h_from_c1(e, e.ss);
    EXPECT_EQ(h, exact::Q(96, 1037));
    expect_close(derive_h(desk_point()), exact::to_c(h));
}

TEST(DeriveH, HStarMatchesSubstitutionBeforeEliminatingS) {
    exact::Desk e;
    expect_close(derive_hstar(desk_point()), exact::to_c(h_from_c1(e, e.s)));
}

TEST(DeriveH, C1IsOneAtSampledPoints) {
    for (int d = 3; d <= 8; ++d)
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            QRacahParams p = sample(seed, d);
            const CScalar h = derive_h(p), hs = derive_hstar(p);
            EXPECT_NE(h, 0.0);
            EXPECT_NE(hs, 0.0);
            TridiagonalCoeffs bc = qracah_b_c(primary_qracah_data(p, h, hs));
            EXPECT_NEAR(std::abs(bc.c[1] - 1.0), 0.0, 1e-12);
        }
}

TEST(Sample, DeterministicAndValid) {
    QRacahParams a = sample(1, 4), b = sample(1, 4);
    EXPECT_EQ(a.q, b.q);
    EXPECT_EQ(a.s, b.s);
    EXPECT_EQ(a.sstar, b.sstar);
    EXPECT_EQ(a.r1, b.r1);
    EXPECT_TRUE(validate(a, 1e-3).passed);
    EXPECT_EQ(a.theta0, 0.0);
    EXPECT_EQ(a.theta0star, 0.0);
}

TEST(Sample, DiameterEight) {
    QRacahParams p = sample(2, 8);
    EXPECT_EQ(p.d, 8);
    EXPECT_TRUE(validate(p, 1e-3).passed);
}

TEST(Sample, SampledRootsSquareBack) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        QRacahParams p = sample(seed, 3 + seed % 6);
        expect_close(p.q_half * p.q_half, p.q, 1e-15);
        expect_close(p.s_half * p.s_half, p.s, 1e-15);
        expect_close(p.sstar_half * p.sstar_half, p.sstar, 1e-15);
        expect_close(p.r1_half * p.r1_half, p.r1, 1e-15);
        expect_close(p.r2_half * p.r2_half, p.r2, 1e-15);
        expect_close(p.r1 * p.r2, p.s * p.sstar * ipow(p.q, p.d + 1));
    }
}

TEST(Sample, RejectsDiameterBelowThree) { EXPECT_THROW(sample(1, 2), std::invalid_argument); }

TEST(Sample, ExhaustedBudgetThrows) {
    SampleRanges bad;
    bad.q_lo = 0.999999999999;
    bad.q_hi = 0.9999999999999;
    EXPECT_THROW(sample(3, 4, 1e-3, bad), std::runtime_error);
}
