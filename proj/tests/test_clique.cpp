#include <gtest/gtest.h>

#include "exact.hpp"
#include "ldaha/clique.hpp"

using namespace ldaha;

namespace {

struct Fixture {
    QRacahParams p;
    CScalar h, hs;
    ParameterArray pa;
    TridiagonalCoeffs abc;
    CliqueScalars cs;
    DerivedArrays derived;
    explicit Fixture(QRacahParams params) : p(params) {
        h = derive_h(p);
        hs = derive_hstar(p);
        pa = primary_parameter_array(p, h, hs);
        abc = intersection_numbers(pa);
        cs = compute_clique_scalars(p, h, hs, pa);
        derived = derived_parameter_arrays(p, h, hs, cs.tilde_theta_star[0]);
    }
};

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

}  // namespace

TEST(CliqueScalars, DeskPointExactValues) {
    exact::Desk e;
    using exact::pow;
    const auto q = e.q, ss = e.ss;
    const int d = e.d;
    // Closed forms at i = 1 (epsilon, xi) and i = 0 (tau, zeta).
    const exact::Q eps1 = (1 - q) * (1 - ss * pow(q, d + 2)) / (pow(q, d) * (1 - pow(q, 1 - d)) * (1 - ss * q * q));
    const exact::Q xi1 = (1 - pow(q, 1 - d)) * (1 - ss * q * q);
    const exact::Q tau0 = ss * (1 - e.r1 * q) * (1 - e.r2 * q) / ((e.r1 - ss * q) * (e.r2 - ss * q));
    const exact::Q zeta0 = (e.r1 - ss * q) * (e.r2 - ss * q);
    EXPECT_EQ(eps1, exact::Q(-61, 14));
    EXPECT_EQ(xi1, exact::Q(-7, 4));
    EXPECT_EQ(tau0, exact::Q(166, 85));
    EXPECT_EQ(zeta0, exact::Q(85, 128));
    EXPECT_EQ(xi1 * eps1, exact::Q(61, 8));

    Fixture f(desk_point());
    const Tolerance tight{1e-12, 1e-15};
    EXPECT_TRUE(approx_eq(f.cs.epsilon(1), exact::to_c(eps1), tight).ok);
    EXPECT_TRUE(approx_eq(f.cs.xi_at(1), exact::to_c(xi1), tight).ok);
    EXPECT_TRUE(approx_eq(f.cs.tau[0], exact::to_c(tau0), tight).ok);
    EXPECT_TRUE(approx_eq(f.cs.zeta[0], exact::to_c(zeta0), tight).ok);
    EXPECT_TRUE(approx_eq(f.cs.N[0], 1.0, tight).ok);
}

TEST(CliqueScalars, EpsilonFromCellCardinalities) {
    // Independent oracle for epsilon_1: -|C_0^+|/|C_1^-| with |C_0^+| = |C| - 1 and
    // |C_1^-| = tilde_b_0 / c_1, from the intersection numbers of the parameter array.
    Fixture f(desk_point());
    const CScalar k = f.abc.b[0];
    const CScalar theta_d = f.pa.theta[4] - f.pa.theta[0] + k;
    const CScalar size = 1.0 - k / theta_d;
    const CScalar tb0 = k - size + 1.0;
    EXPECT_TRUE(approx_eq(-(size - 1.0) / (tb0 / f.abc.c[1]), -61.0 / 14.0, {1e-12, 1e-15}).ok);
}

TEST(CliqueScalars, SizesAndBoundaries) {
    Fixture f(sample(4, 6));
    EXPECT_EQ(f.cs.N.size(), 6u);
    EXPECT_EQ(f.cs.tilde_a.size(), 6u);
    EXPECT_EQ(f.cs.eps.size(), 5u);
    EXPECT_EQ(f.cs.xi.size(), 5u);
    EXPECT_EQ(f.cs.tau.size(), 6u);
    EXPECT_EQ(f.cs.zeta.size(), 6u);
    EXPECT_EQ(f.cs.tilde_c[0], 0.0);
    EXPECT_EQ(f.cs.tilde_b[5], 0.0);
    EXPECT_EQ(f.cs.card_minus[0], 1.0);
    EXPECT_TRUE(approx_eq(f.cs.card_plus[0], f.cs.Csize - 1.0).ok);
}

TEST(CliqueScalars, NonvanishingAndRowSum) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        const CScalar theta0 = p.theta0;
        for (int i = 0; i < p.d; ++i) {
            EXPECT_GT(std::abs(f.cs.N[i]), 1e-9);
            EXPECT_GT(std::abs(f.cs.Csize - f.cs.N[i]), 1e-9);
            EXPECT_GT(std::abs(f.cs.tau[i]), 1e-12);
            EXPECT_GT(std::abs(f.cs.zeta[i]), 1e-12);
            EXPECT_TRUE(approx_eq(f.cs.tilde_a[i] + f.cs.tilde_b[i] + f.cs.tilde_c[i], theta0).ok);
        }
        for (int i = 1; i < p.d; ++i) {
            EXPECT_GT(std::abs(f.cs.epsilon(i)), 1e-12);
            EXPECT_GT(std::abs(f.cs.xi_at(i)), 1e-12);
        }
    }
}

TEST(CliqueScalars, ConsistencyChecks) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        expect_all_ok(clique_consistency_checks(p, f.pa, f.abc, f.cs));
    }
}

TEST(CliqueScalars, CountingIdentities) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        expect_all_ok(counting_identity_checks(f.abc, f.cs));
    }
}

TEST(CliqueScalars, CountingIdentityDetectsPerturbation) {
    Fixture f(desk_point());
    CliqueScalars bad = f.cs;
    bad.tilde_b[1] *= 1.0 + 1e-6;
    bool any_failed = false;
    for (const auto &c : counting_identity_checks(f.abc, bad))
        any_failed |= !c.cmp.ok;
    EXPECT_TRUE(any_failed);
}

TEST(CliqueScalars, XiEpsilonRelations) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        expect_all_ok(xi_eps_relation_checks(f.abc, intersection_numbers(f.derived.Phi_perp), f.cs));
    }
}

TEST(CliqueScalars, ZetaTauRelations) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        expect_all_ok(zeta_tau_relation_checks(f.abc, intersection_numbers(f.derived.Phi_tilde_perp), f.cs));
    }
}

TEST(DerivedArrays, Diameters) {
    Fixture f(desk_point());
    EXPECT_EQ(f.derived.Phi_tilde.diam, 3);
    EXPECT_EQ(f.derived.Phi_perp.diam, 2);
    EXPECT_EQ(f.derived.Phi_tilde_perp.diam, 3);
}

TEST(DerivedArrays, EndpointShifts) {
    Fixture f(desk_point());
    for (int i = 0; i <= 2; ++i) {
        EXPECT_TRUE(approx_eq(f.derived.Phi_perp.theta[i], f.pa.theta[i + 1]).ok);
        EXPECT_TRUE(approx_eq(f.derived.Phi_perp.theta_star[i], f.pa.theta_star[i + 1]).ok);
    }
    for (int i = 0; i <= 3; ++i) {
        EXPECT_TRUE(approx_eq(f.derived.Phi_tilde_perp.theta[i], f.pa.theta[i + 1]).ok);
        EXPECT_TRUE(approx_eq(f.derived.Phi_tilde_perp.theta_star[i], f.cs.tilde_theta_star[i]).ok);
        EXPECT_TRUE(approx_eq(f.derived.Phi_tilde.theta[i], f.pa.theta[i]).ok);
        EXPECT_TRUE(approx_eq(f.derived.Phi_tilde.theta_star[i], f.cs.tilde_theta_star[i]).ok);
    }
}

TEST(DerivedArrays, TildeIntersectionNumbersMatchCliqueForms) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        TridiagonalCoeffs t = intersection_numbers(f.derived.Phi_tilde);
        CMatrix got(3, p.d), want(3, p.d);
        for (int i = 0; i < p.d; ++i) {
            got(0, i) = t.a[i], got(1, i) = t.b[i], got(2, i) = t.c[i];
            want(0, i) = f.cs.tilde_a[i], want(1, i) = f.cs.tilde_b[i], want(2, i) = f.cs.tilde_c[i];
        }
        EXPECT_TRUE(approx_eq(got, want).ok);
    }
}

TEST(DerivedArrays, AllPassParameterArrayConditions) {
    for (const auto &p : sweep_points()) {
        Fixture f(p);
        for (const auto *a : {&f.derived.Phi_tilde, &f.derived.Phi_perp, &f.derived.Phi_tilde_perp}) {
            PAReport r = check_PA(*a);
            EXPECT_TRUE(r.passed) << "d=" << p.d;
            EXPECT_LT(r.max_identity_residual(), 1e-8);
        }
        for (const auto &[arr, data] : {std::pair{&f.derived.Phi_tilde, &f.derived.tilde},
                                        std::pair{&f.derived.Phi_perp, &f.derived.perp},
                                        std::pair{&f.derived.Phi_tilde_perp, &f.derived.tilde_perp}}) {
            TridiagonalCoeffs x = intersection_numbers(*arr), y = qracah_b_c(*data);
            CMatrix mx(2, x.b.size()), my(2, y.b.size());
            for (std::size_t i = 0; i < x.b.size(); ++i)
                mx(0, i) = x.b[i], mx(1, i) = x.c[i], my(0, i) = y.b[i], my(1, i) = y.c[i];
            EXPECT_TRUE(approx_eq(mx, my).ok);
            EXPECT_LT(u_recurrence_residual(*data), 1e-8);
        }
    }
}

TEST(DerivedArrays, DiameterThreeGivesDiameterOnePerp) {
    Fixture f(sample(8, 3));
    EXPECT_EQ(f.derived.Phi_perp.diam, 1);
    EXPECT_TRUE(check_PA(f.derived.Phi_perp).passed);
}
