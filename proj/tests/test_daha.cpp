#include <gtest/gtest.h>

#include "exact.hpp"
#include "ldaha/daha.hpp"

using namespace ldaha;

namespace {

void expect_all_ok(const std::vector<Check> &checks, const std::string &where = "") {
    EXPECT_FALSE(checks.empty());
    for (const auto &c : checks)
        EXPECT_TRUE(c.cmp.ok) << where << " " << c.name << " residual " << c.cmp.residual << " bound " << c.cmp.bound;
}

bool all_ok(const std::vector<Check> &checks) {
    for (const auto &c : checks)
        if (!c.cmp.ok) return false;
    return true;
}

std::vector<QRacahParams> sweep_points() {
    std::vector<QRacahParams> ps{desk_point(), make_params(5, 0.6, 2.0, 3.0, 0.7, 4.0, -1.0),
                                 make_params(4, CScalar(0.5, 0.4), CScalar(2, 1), CScalar(-3, 0.5),
                                             CScalar(0.6, -0.8), CScalar(1, 2), CScalar(0, -1))};
    for (int d = 3; d <= 8; ++d)
        for (std::uint64_t seed = 0; seed < 10; ++seed)
            ps.push_back(sample(seed, d));
    return ps;
}

std::string label(const QRacahParams &p) { return "d=" + std::to_string(p.d); }

}  // namespace

TEST(Daha, KConstantsAtDeskPoint) {
    const auto k = k_constants(desk_point());
    EXPECT_NEAR(std::abs(k[1] - 4.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(k[0] * k[0] - 5.0 / 32.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(k[2] * k[2] - 3.0 / 32.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(k[3] * k[3] - 135.0 / 128.0), 0.0, 1e-14);
    for (const auto &x : k) EXPECT_GT(x.real(), 0.0);
}

TEST(Daha, OneByOneBlocksAtDeskPoint) {
    const QRacahParams p = desk_point();
    const CMatrix t10 = t_block(p, 1, 0);
    ASSERT_EQ(t10.rows(), 1u);
    EXPECT_NEAR(std::abs(t10(0, 0) - 4.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t_block(p, 1, 4)(0, 0) - 4.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(t_block(p, 2, 0)(0, 0) - std::sqrt(3.0 / 32.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(t_block(p, 2, 4)(0, 0) - std::sqrt(32.0 / 3.0)), 0.0, 1e-13);
}

TEST(Daha, BlockIndexRange) {
    const QRacahParams p = desk_point();
    EXPECT_THROW(t_block(p, 0, 4), std::out_of_range);
    EXPECT_THROW(t_block(p, 3, -1), std::out_of_range);
    EXPECT_THROW(t_block(p, 1, 5), std::out_of_range);
    EXPECT_THROW(t_block(p, 4, 0), std::out_of_range);
    EXPECT_NO_THROW(t_block(p, 2, 4));
}

// sqrt(s* r1 r2) t0(i) has rational entries at the desk point.
TEST(Daha, T0BlockAgainstRationalOracle) {
    exact::Desk e;
    using exact::pow;
    const QRacahParams p = desk_point();
    const double root = std::sqrt(exact::to_double(e.ss * e.r1 * e.r2));
    const double ratio = exact::to_double(e.ss);  // sqrt(s*/(r1 r2)) * sqrt(s* r1 r2)
    for (int i = 0; i < e.d; ++i) {
        const exact::Q qn = pow(e.q, i + 1), den = 1 - e.ss * pow(e.q, 2 * i + 2);
        const exact::Q W = (e.r1 - e.ss * qn) * (e.r2 - e.ss * qn) / den;
        const exact::Q U = (1 - e.r1 * qn) * (1 - e.r2 * qn) / den;
        const CMatrix b = t_block(p, 0, i);
        EXPECT_NEAR(b(0, 0).real() * root, exact::to_double(W + e.ss), 1e-12) << i;
        EXPECT_NEAR(b(1, 0).real() * root, exact::to_double(W), 1e-12) << i;
        EXPECT_NEAR(b(0, 1).real() * root, -ratio * exact::to_double(U), 1e-12) << i;
        EXPECT_NEAR(b(1, 1).real() * root, ratio * exact::to_double(1 - U), 1e-12) << i;
    }
}

TEST(Daha, DiagonalEntriesAtDeskPoint) {
    const DahaRep rep = assemble(desk_point());
    const double s3 = std::sqrt(3.0);
    EXPECT_NEAR(std::abs(rep.Bbold(0, 0) - (2.0 / s3 + s3 / 2.0)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(rep.Bdag(0, 0) - (std::sqrt(2.0 / 3.0) + std::sqrt(1.5))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(rep.X(0, 0) - 2.0 / s3), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(rep.X(1, 1) - s3 / 2.0), 0.0, 1e-12);
}

TEST(Daha, RelationsTablesAndMainTheorem) {
    for (const auto &p : sweep_points()) {
        const DahaRep rep = assemble(p);
        const ModuleInputs in = derive_inputs(p);
        const ModuleRep mod = build_module(in);
        expect_all_ok(verify_blocks(p), label(p));
        expect_all_ok(verify_daha_relations(rep, p), label(p));
        expect_all_ok(verify_action_tables(rep, p), label(p));
        expect_all_ok(verify_main_theorem(rep, in, mod), label(p));
    }
}

TEST(Daha, MainTheoremSurvivesThetaShift) {
    const QRacahParams base = desk_point();
    const QRacahParams shifted = make_params(base.d, base.q, base.s, base.sstar, base.r1, base.theta0 + 7.5,
                                             base.theta0star - 2.25);
    const ModuleInputs in = derive_inputs(shifted);
    const DahaRep rep = assemble(shifted);
    expect_all_ok(verify_main_theorem(rep, in, build_module(in)));
    // The DAHA side does not see theta0 at all.
    EXPECT_TRUE(approx_eq(rep.Abold, assemble(base).Abold).ok);
}

TEST(Daha, PerturbedGeneratorBreaksRelations) {
    const QRacahParams p = desk_point();
    DahaRep rep = assemble(p);
    rep.T[2](1, 2) *= 1.0 + 1e-6;
    EXPECT_FALSE(all_ok(verify_daha_relations(rep, p)));
}

TEST(Daha, ScaledT0BreaksProductRelation) {
    const QRacahParams p = desk_point();
    DahaRep rep = assemble(p);
    rep.T[0] = CScalar(1.01) * rep.T[0];
    for (const auto &c : verify_daha_relations(rep, p))
        if (c.name.rfind("T0 T1 T2 T3", 0) == 0) {
            EXPECT_FALSE(c.cmp.ok);
            EXPECT_GT(c.cmp.relative(), 1e-3);
        }
}

TEST(Daha, BlockInverseIsAdjugate) {
    const QRacahParams p = desk_point();
    for (int n = 0; n < 4; ++n) {
        const int lo = (n == 1 || n == 2) ? 1 : 0;
        for (int i = lo; i < p.d; ++i) {
            const CMatrix b = t_block(p, n, i);
            EXPECT_TRUE(approx_eq(b * block_inverse(b), CMatrix::identity(2)).ok) << n << " " << i;
        }
    }
    EXPECT_NEAR(std::abs(block_inverse(CMatrix{{4.0}})(0, 0) - 0.25), 0.0, 0.0);
    EXPECT_THROW(block_inverse(CMatrix::identity(3)), DimensionError);
}

TEST(Daha, PerturbedTableEntryIsDetected) {
    const QRacahParams p = desk_point();
    DahaRep rep = assemble(p);
    rep.Abold(3, 4) += 1e-6 * norm_inf(rep.Abold);
    bool flagged = false;
    for (const auto &c : verify_action_tables(rep, p))
        if (c.name.rfind("A-bold matches", 0) == 0) flagged = !c.cmp.ok;
    EXPECT_TRUE(flagged);
}

TEST(Daha, WrongBranchFailsMainTheorem) {
    // Flipping the sign of sqrt(q) changes q^{-1/2} in the product relation.
    QRacahParams p = desk_point();
    p.q_half = -p.q_half;
    const DahaRep rep = assemble(p);
    const ModuleInputs in = derive_inputs(desk_point());
    EXPECT_FALSE(all_ok(verify_main_theorem(rep, in, build_module(in))));
}

TEST(Daha, CommutantDimensions) {
    const int n = 8;
    EXPECT_EQ(commutant_dimension({CMatrix::identity(n)}), n * n);
    std::vector<CScalar> dg;
    for (int i = 0; i < n; ++i) dg.push_back(CScalar(1.0 + i, 0.5 * i * i));
    EXPECT_EQ(commutant_dimension({CMatrix::diagonal(dg)}), n);

    const ModuleInputs in = derive_inputs(desk_point());
    const ModuleRep mod = build_module(in);
    EXPECT_EQ(commutant_dimension({mod.M(OperatorId::A, BasisId::C), mod.M(OperatorId::Astar, BasisId::C),
                                   mod.M(OperatorId::AstarTilde, BasisId::C)}),
              1);
    const DahaRep rep = assemble(desk_point());
    EXPECT_EQ(commutant_dimension({rep.T[0], rep.T[1], rep.T[2], rep.T[3]}), 1);
    // A alone has two-dimensional eigenspaces: 1 + 4 + 4 + 4 + 1.
    EXPECT_EQ(commutant_dimension({mod.M(OperatorId::A, BasisId::C)}), 14);
}

TEST(Daha, CommutantSweep) {
    for (const auto &p : sweep_points()) {
        const ModuleInputs in = derive_inputs(p);
        const ModuleRep mod = build_module(in);
        const DahaRep rep = assemble(p);
        EXPECT_EQ(commutant_dimension({mod.M(OperatorId::A, BasisId::C), mod.M(OperatorId::Astar, BasisId::C),
                                       mod.M(OperatorId::AstarTilde, BasisId::C)}),
                  1)
            << label(p);
        EXPECT_EQ(commutant_dimension({rep.T[0], rep.T[1], rep.T[2], rep.T[3]}), 1) << label(p);
    }
}

TEST(Daha, CommutantNearThresholdIsAmbiguous) {
    EXPECT_THROW(commutant_dimension({CMatrix::diagonal({1.0, 1.0 + 1e-7, 2.0})}), AmbiguousRankError);
}
