#include <gtest/gtest.h>

#include "exact.hpp"
#include "ldaha/module_w.hpp"

using namespace ldaha;

namespace {

void expect_all_ok(const std::vector<Check> &checks) {
    EXPECT_FALSE(checks.empty());
    for (const auto &c : checks)
        EXPECT_TRUE(c.cmp.ok) << c.name << " residual " << c.cmp.residual << " bound " << c.cmp.bound;
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

// Permutation matrix whose column j is e_{cols[j]}.
CMatrix perm(const std::vector<int> &cols) {
    CMatrix m(cols.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m(cols[j], j) = 1.0;
    return m;
}

void expect_matrix_eq(const CMatrix &a, const CMatrix &b, double tol) {
    ASSERT_EQ(a.rows(), b.rows());
    ASSERT_EQ(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_NEAR(std::abs(a(i, j) - b(i, j)), 0.0, tol) << i << "," << j;
}

}  // namespace

TEST(ModuleW, NamesRoundTrip) {
    for (BasisId b : kAllBases) EXPECT_EQ(parse_basis(to_string(b)), b);
    for (OperatorId op : kAllOperators) EXPECT_EQ(parse_operator(to_string(op)), op);
    EXPECT_FALSE(parse_basis("D").has_value());
    EXPECT_FALSE(parse_operator("Ahat").has_value());
}

TEST(ModuleW, PermutationTransitionsAtDiameterFour) {
    const ModuleInputs in = derive_inputs(desk_point());
    // B = (v0..v4, vp0..vp2) at positions 0..7; Balt = (v0, v1, vp0, v2, vp1, v3, vp2, v4).
    expect_matrix_eq(transition_matrix(in, BasisId::B, BasisId::Balt), perm({0, 1, 5, 2, 6, 3, 7, 4}), 0.0);
    expect_matrix_eq(transition_matrix(in, BasisId::Balt, BasisId::B), perm({0, 1, 3, 5, 7, 2, 4, 6}), 0.0);
    // tilde B = (vt0..vt3, vtp0..vtp3); tilde B alt = (vt0, vtp0, vt1, vtp1, ...).
    expect_matrix_eq(transition_matrix(in, BasisId::Btilde, BasisId::BtildeAlt), perm({0, 4, 1, 5, 2, 6, 3, 7}), 0.0);
    expect_matrix_eq(transition_matrix(in, BasisId::BtildeAlt, BasisId::Btilde), perm({0, 2, 4, 6, 1, 3, 5, 7}), 0.0);
}

TEST(ModuleW, DeskPointFirstTransitionBlock) {
    exact::Desk e;
    using exact::pow;
    const exact::Q xi1 = (1 - pow(e.q, 1 - e.d)) * (1 - e.ss * e.q * e.q);
    const exact::Q xi_eps1 = pow(e.q, -e.d) * (1 - e.q) * (1 - e.ss * pow(e.q, e.d + 2));
    EXPECT_EQ(xi1, exact::Q(-7, 4));
    EXPECT_EQ(xi_eps1, exact::Q(61, 8));

    const ModuleInputs in = derive_inputs(desk_point());
    const CMatrix T = transition_matrix(in, BasisId::C, BasisId::Balt);
    // Rows C0+, C1-; columns v1, vperp0.
    EXPECT_NEAR(std::abs(T(1, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(T(2, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(T(1, 2) - exact::to_c(xi1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(T(2, 2) - exact::to_c(xi_eps1)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(T(0, 0) - 1.0), 0.0, 0.0);
    EXPECT_NEAR(std::abs(T(7, 7) - 1.0), 0.0, 0.0);
}

TEST(ModuleW, DiagonalRepresentations) {
    const ModuleInputs in = derive_inputs(desk_point());
    const auto &ts = in.pa.theta_star;
    const auto &tt = in.cs.tilde_theta_star;
    const CMatrix As = operator_matrix(in, OperatorId::Astar, BasisId::C);
    const CMatrix Ats = operator_matrix(in, OperatorId::AstarTilde, BasisId::C);
    expect_matrix_eq(As, CMatrix::diagonal({ts[0], ts[1], ts[1], ts[2], ts[2], ts[3], ts[3], ts[4]}), 0.0);
    expect_matrix_eq(Ats, CMatrix::diagonal({tt[0], tt[0], tt[1], tt[1], tt[2], tt[2], tt[3], tt[3]}), 0.0);
    expect_matrix_eq(operator_matrix(in, OperatorId::P, BasisId::B), CMatrix::diagonal({1, 1, 1, 1, 1, 0, 0, 0}), 0.0);
    expect_matrix_eq(operator_matrix(in, OperatorId::Ptilde, BasisId::Btilde),
                     CMatrix::diagonal({1, 1, 1, 1, 0, 0, 0, 0}), 0.0);
}

TEST(ModuleW, GramDiagonalAtDeskPoint) {
    exact::Desk e;
    using exact::pow;
    using Q = exact::Q;
    const Q q = e.q, ss = e.ss, r1 = e.r1, r2 = e.r2;
    const int d = e.d;
    const Q h(96, 1037);
    auto b = [&](int i) {
        return h * (1 - pow(q, i - d)) * (1 - ss * pow(q, i + 1)) * (1 - r1 * pow(q, i + 1)) * (1 - r2 * pow(q, i + 1)) /
               ((1 - ss * pow(q, 2 * i + 1)) * (1 - ss * pow(q, 2 * i + 2)));
    };
    auto c = [&](int i) {
        return h * (1 - pow(q, i)) * (1 - ss * pow(q, i + d + 1)) * (r1 - ss * pow(q, i)) * (r2 - ss * pow(q, i)) /
               (ss * pow(q, d) * (1 - ss * pow(q, 2 * i)) * (1 - ss * pow(q, 2 * i + 1)));
    };
    auto bt = [&](int i) {
        return h * (1 - pow(q, i + 1 - d)) * (1 - ss * pow(q, i + 2)) * (1 - r1 * pow(q, i + 1)) *
               (1 - r2 * pow(q, i + 1)) / ((1 - ss * pow(q, 2 * i + 2)) * (1 - ss * pow(q, 2 * i + 3)));
    };
    auto ct = [&](int i) {
        return h * (1 - pow(q, i)) * (1 - ss * pow(q, i + d + 1)) * (r1 - ss * pow(q, i + 1)) *
               (r2 - ss * pow(q, i + 1)) / (ss * pow(q, d) * (1 - ss * pow(q, 2 * i + 1)) * (1 - ss * pow(q, 2 * i + 2)));
    };
    ASSERT_EQ(c(1), Q(1));
    const Q k = b(0);
    // theta_d - theta_0 = h (1 - q^d)(1 - s q^{d+1}) q^{-d}, shifted so that theta_0 = k.
    const Q theta_d_graph = k + h * (1 - pow(q, d)) * (1 - e.s * pow(q, d + 1)) / pow(q, d);
    const Q Csize = 1 - k / theta_d_graph;

    std::vector<Q> want;
    Q minus = 1, plus = Csize - 1;
    for (int i = 0; i < d; ++i) {
        if (i >= 1) {
            minus *= bt(i - 1) / c(i);
            plus *= b(i) / ct(i);
        }
        want.push_back(minus);
        want.push_back(plus);
    }

    const ModuleInputs in = derive_inputs(desk_point());
    const auto g = gram_diagonal(in.abc, in.cs);
    ASSERT_EQ(g.size(), want.size());
    EXPECT_NEAR(std::abs(g[0] - 1.0), 0.0, 1e-15);
    for (std::size_t i = 0; i < g.size(); ++i)
        EXPECT_NEAR(std::abs(g[i] - exact::to_c(want[i])), 0.0, 1e-10 * std::abs(exact::to_c(want[i]))) << i;
}

TEST(ModuleW, GramMatchesCellSizes) {
    for (const auto &p : sweep_points()) {
        const ModuleInputs in = derive_inputs(p);
        const auto g = gram_diagonal(in.abc, in.cs);
        for (int i = 0; i < p.d; ++i) {
            EXPECT_TRUE(approx_eq(g[2 * i], in.cs.card_minus[i]).ok) << "d=" << p.d << " i=" << i;
            EXPECT_TRUE(approx_eq(g[2 * i + 1], in.cs.card_plus[i]).ok) << "d=" << p.d << " i=" << i;
        }
    }
}

TEST(ModuleW, TransitionsInvertEachOther) {
    for (const auto &p : sweep_points()) {
        SCOPED_TRACE("d=" + std::to_string(p.d));
        expect_all_ok(transition_checks(build_module(derive_inputs(p))));
    }
}

TEST(ModuleW, ConjugationReproducesDirectRepresentations) {
    for (const auto &p : sweep_points()) {
        SCOPED_TRACE("d=" + std::to_string(p.d));
        expect_all_ok(conjugation_checks(build_module(derive_inputs(p))));
    }
}

TEST(ModuleW, ReversedConjugationOrientationFails) {
    const ModuleInputs in = derive_inputs(desk_point());
    const ModuleRep rep = build_module(in);
    const CMatrix wrong =
        rep.T(BasisId::C, BasisId::Balt) * rep.M(OperatorId::A, BasisId::C) * rep.T(BasisId::Balt, BasisId::C);
    EXPECT_FALSE(approx_eq(wrong, rep.M(OperatorId::A, BasisId::Balt)).ok);
}

TEST(ModuleW, ProjectionAlgebra) {
    for (const auto &p : sweep_points()) {
        SCOPED_TRACE("d=" + std::to_string(p.d));
        const ModuleInputs in = derive_inputs(p);
        expect_all_ok(projection_checks(in, build_module(in)));
    }
}

TEST(ModuleW, StructureChecks) {
    for (const auto &p : sweep_points()) {
        SCOPED_TRACE("d=" + std::to_string(p.d));
        const ModuleInputs in = derive_inputs(p);
        expect_all_ok(structure_checks(in, build_module(in)));
    }
}

TEST(ModuleW, GramCheckRejectsAsymmetricPerturbation) {
    const ModuleInputs in = derive_inputs(desk_point());
    ModuleRep rep = build_module(in);
    rep.rep[{OperatorId::A, BasisId::C}](0, 1) += 0.1;
    bool gram_ok = true;
    for (const auto &c : structure_checks(in, rep))
        if (c.name == "Gram self-adjointness of [A]_C") gram_ok = c.cmp.ok;
    EXPECT_FALSE(gram_ok);
}

TEST(ModuleW, SpectralMultiplicitiesAtDeskPoint) {
    const ModuleInputs in = derive_inputs(desk_point());
    const auto reports = spectral_dims(in, build_module(in));
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].multiplicity, (std::vector<int>{1, 2, 2, 2, 1}));
    EXPECT_EQ(reports[1].multiplicity, (std::vector<int>{1, 2, 2, 2, 1}));
    EXPECT_EQ(reports[2].multiplicity, (std::vector<int>{2, 2, 2, 2}));
    for (const auto &r : reports) {
        EXPECT_TRUE(r.ok) << r.name;
        EXPECT_EQ(r.unmatched, 0) << r.name;
    }
}

TEST(ModuleW, SpectralMultiplicitiesSweep) {
    for (const auto &p : sweep_points()) {
        const ModuleInputs in = derive_inputs(p);
        for (const auto &r : spectral_dims(in, build_module(in))) EXPECT_TRUE(r.ok) << r.name << " d=" << p.d;
    }
}

TEST(ModuleW, AmbiguousClusteringThrows) {
    const CMatrix m = CMatrix::diagonal({1.0, 2.0});
    EXPECT_THROW(count_multiplicities("m", m, {1.0, 1.0 + 1e-9}, {1, 1}), AmbiguousClusterError);
}

TEST(ModuleW, UnmatchedEigenvalueIsReported) {
    const CMatrix m = CMatrix::diagonal({1.0, 5.0});
    const auto r = count_multiplicities("m", m, {1.0, 2.0}, {1, 1});
    EXPECT_EQ(r.unmatched, 1);
    EXPECT_FALSE(r.ok);
}

TEST(ModuleW, ExtendedSpectrumOfIllConditionedPoint) {
    // The Gram form is indefinite here and the double [A]_C has eigenvalues
    // far outside the clustering radius; the 50-digit table does not.
    const QRacahParams p = sample(27, 6);
    const ModuleInputs in = derive_inputs(p);
    const ModuleRep rep = build_module(in);
    const CMatrix &a = rep.M(OperatorId::A, BasisId::C);
    std::vector<int> ends(7, 2);
    ends.front() = ends.back() = 1;
    EXPECT_FALSE(count_multiplicities("double", a, in.pa.theta, ends).ok);
    const auto wide = a_C_eigenvalues_extended(p);
    ASSERT_EQ(wide.size(), 12u);
    for (CScalar ev : wide) {
        double best = 1e300;
        for (CScalar t : in.pa.theta) best = std::min(best, std::abs(ev - t));
        EXPECT_LT(best, 1e-9 * norm_inf(a));
    }
    EXPECT_TRUE(count_eigenvalues("wide", wide, 1e-6 * norm_inf(a), in.pa.theta, ends).ok);
}

TEST(ModuleW, ExtendedTableMatchesDoubleSpectrumAtDeskPoint) {
    const ModuleInputs in = derive_inputs(desk_point());
    std::vector<CScalar> got = a_C_eigenvalues_extended(in.p);
    const CMatrix a = a_matrix_C_qexplicit(in);
    std::vector<int> ends{1, 2, 2, 2, 1};
    EXPECT_TRUE(count_eigenvalues("wide", got, 1e-12 * norm_inf(a), in.pa.theta, ends).ok);
}

TEST(ModuleW, SpectrumMuchNarrowerThanMatrixNorm) {
    // h ~ 6e-5: every theta_i lies in [0, 0.005] while norm_inf [A]_C ~ 1, so
    // theta_1 - theta_0 is below 1e-6 * norm_inf.
    const QRacahParams p = sample(69, 8);
    const ModuleInputs in = derive_inputs(p);
    const ModuleRep rep = build_module(in);
    ASSERT_LT(std::abs(in.pa.theta[1] - in.pa.theta[0]), 2e-6 * norm_inf(rep.M(OperatorId::A, BasisId::C)));
    const auto reports = spectral_dims(in, rep);
    EXPECT_EQ(reports[0].multiplicity, (std::vector<int>{1, 2, 2, 2, 2, 2, 2, 2, 1}));
    for (const auto &r : reports) EXPECT_TRUE(r.ok) << r.name;
}
