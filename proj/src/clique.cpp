#include "ldaha/clique.hpp"

#include <sstream>
#include <string>

namespace ldaha {

namespace {

std::string label(const char *name, int i) {
    std::ostringstream os;
    os << name << "[" << i << "]";
    return os.str();
}

std::string label(const char *name, int i, int j) {
    std::ostringstream os;
    os << name << "[" << i << "," << j << "]";
    return os.str();
}

void push(std::vector<Check> &out, std::string name, CScalar lhs, CScalar rhs, Tolerance tol) {
    out.push_back({std::move(name), approx_eq(lhs, rhs, tol)});
}

}  // namespace

CScalar tilde_h_star(const QRacahParams &p, CScalar hstar) {
    const CScalar rr = p.r1 * p.r2;
    return safe_div(p.sstar / p.q - rr, p.sstar - rr, "tilde h*") * hstar;
}

CScalar tilde_theta_star_0(const QRacahParams &p, CScalar hstar) {
    const CScalar q = p.q, ss = p.sstar, rr = p.r1 * p.r2;
    const CScalar den = ss - rr;
    if (den == 0.0)
        throw DegenerateError("vanishing denominator in tilde theta*_0");
    return p.theta0star + hstar * (ss * (q - 1.0) * (p.r1 + p.r2) / den + (ss / q - rr) * (1.0 + ss * q * q) / den -
                                   1.0 - ss * q);
}

CliqueScalars compute_clique_scalars(const QRacahParams &p, CScalar h, CScalar hstar, const ParameterArray &pa) {
    const int d = p.d;
    const CScalar q = p.q, s = p.s, ss = p.sstar, r1 = p.r1, r2 = p.r2;
    const CScalar qd = ipow(q, d);
    const TridiagonalCoeffs bc = qracah_b_c(primary_qracah_data(p, h, hstar));

    CliqueScalars cs;
    cs.d = d;
    cs.h = h;
    cs.k = bc.b[0];
    cs.theta_d_graph = pa.theta[d] - pa.theta[0] + cs.k;

    cs.Csize = safe_div(h * (1.0 - qd) * (1.0 - s * qd * q), cs.theta_d_graph * qd, "|C|");
    for (int i = 0; i < d; ++i) {
        const CScalar qi1 = ipow(q, i + 1);
        cs.N.push_back(safe_div(h * (qd - 1.0) * (r1 - ss * qi1) * (r2 - ss * qi1),
                                cs.theta_d_graph * ss * qd * (1.0 - ss * ipow(q, 2 * i + 2)), "N_i"));
    }

    cs.tilde_b.assign(d, 0.0);
    cs.tilde_c.assign(d, 0.0);
    cs.tilde_b[0] = safe_div(h * (1.0 - ipow(q, 1 - d)) * (1.0 - r1 * q) * (1.0 - r2 * q), 1.0 - ss * ipow(q, 3),
                             "tilde b_0");
    for (int i = 1; i <= d - 2; ++i) {
        const CScalar qi = ipow(q, i);
        cs.tilde_b[i] = safe_div(h * (1.0 - ipow(q, i - d + 1)) * (1.0 - ss * ipow(q, i + 2)) *
                                     (1.0 - r1 * qi * q) * (1.0 - r2 * qi * q),
                                 (1.0 - ss * ipow(q, 2 * i + 2)) * (1.0 - ss * ipow(q, 2 * i + 3)), "tilde b_i");
        cs.tilde_c[i] = safe_div(h * (1.0 - qi) * (1.0 - ss * ipow(q, i + d + 1)) * (r1 - ss * qi * q) *
                                     (r2 - ss * qi * q),
                                 ss * qd * (1.0 - ss * ipow(q, 2 * i + 1)) * (1.0 - ss * ipow(q, 2 * i + 2)),
                                 "tilde c_i");
    }
    cs.tilde_c[d - 1] = safe_div(h * (1.0 - ipow(q, d - 1)) * (r1 - ss * qd) * (r2 - ss * qd),
                                 ss * qd * (1.0 - ss * ipow(q, 2 * d - 1)), "tilde c_{d-1}");
    for (int i = 0; i < d; ++i)
        cs.tilde_a.push_back(p.theta0 - cs.tilde_b[i] - cs.tilde_c[i]);

    cs.tilde_h_star = tilde_h_star(p, hstar);
    const CScalar tts0 = tilde_theta_star_0(p, hstar);
    for (int i = 0; i < d; ++i) {
        const CScalar qi = ipow(q, i);
        cs.tilde_theta_star.push_back(tts0 + cs.tilde_h_star * (1.0 - qi) * (1.0 - ss * q * qi * q) / qi);
    }

    for (int i = 1; i <= d - 1; ++i) {
        const CScalar qi = ipow(q, i);
        cs.eps.push_back(safe_div((1.0 - qi) * (1.0 - ss * ipow(q, i + d + 1)),
                                  qd * (1.0 - ipow(q, i - d)) * (1.0 - ss * qi * q), "epsilon_i"));
        cs.xi.push_back(ipow(q, 1 - i) * (1.0 - ipow(q, i - d)) * (1.0 - ss * qi * q));
        cs.one_minus_eps.push_back(safe_div((qd - 1.0) * (1.0 - ss * ipow(q, 2 * i + 1)),
                                            qd * (1.0 - ipow(q, i - d)) * (1.0 - ss * qi * q), "1 - epsilon_i"));
    }
    for (int i = 0; i < d; ++i) {
        const CScalar qi1 = ipow(q, i + 1);
        cs.tau.push_back(safe_div(ss * (1.0 - r1 * qi1) * (1.0 - r2 * qi1), (r1 - ss * qi1) * (r2 - ss * qi1), "tau_i"));
        cs.zeta.push_back(ipow(q, -i) * (r1 - ss * qi1) * (r2 - ss * qi1));
        cs.one_minus_tau.push_back(safe_div((r1 * r2 - ss) * (1.0 - ss * qi1 * qi1), (r1 - ss * qi1) * (r2 - ss * qi1),
                                            "1 - tau_i"));
    }

    // |C_i^-| = tilde_b_0...tilde_b_{i-1} / (c_1...c_i), |C_i^+| = b_1...b_i / (tilde_c_1...tilde_c_i) (|C| - 1).
    CScalar minus = 1.0, plus = cs.Csize - 1.0;
    for (int i = 0; i < d; ++i) {
        if (i > 0) {
            minus *= safe_div(cs.tilde_b[i - 1], bc.c[i], "|C_i^-|");
            plus *= safe_div(bc.b[i], cs.tilde_c[i], "|C_i^+|");
        }
        cs.card_minus.push_back(minus);
        cs.card_plus.push_back(plus);
    }
    return cs;
}

DerivedArrays derived_parameter_arrays(const QRacahParams &p, CScalar h, CScalar hstar,
                                       CScalar theta0_tilde_star) {
    const int d = p.d;
    const CScalar q = p.q;
    const QRacahData primary = primary_qracah_data(p, h, hstar);
    const ParameterArray pa = qracah_parameter_array(primary);
    const CScalar hts = tilde_h_star(p, hstar);

    DerivedArrays out;
    out.tilde = {d - 1, q, h, hts, p.s, p.sstar * q, p.r1, p.r2, p.theta0, theta0_tilde_star};
    out.perp = {d - 2, q, h / q, hstar / q, p.s * q * q, p.sstar * q * q, p.r1 * q, p.r2 * q, pa.theta[1],
                pa.theta_star[1]};
    out.tilde_perp = {d - 1, q, h / q, hts, p.s * q * q, p.sstar * q, p.r1 * q, p.r2 * q, pa.theta[1],
                      theta0_tilde_star};
    out.Phi_tilde = qracah_parameter_array(out.tilde);
    out.Phi_perp = qracah_parameter_array(out.perp);
    out.Phi_tilde_perp = qracah_parameter_array(out.tilde_perp);
    return out;
}

std::vector<Check> clique_consistency_checks(const QRacahParams &p, const ParameterArray &pa,
                                             const TridiagonalCoeffs &abc, const CliqueScalars &cs,
                                             Tolerance tol) {
    std::vector<Check> out;
    const int d = cs.d;
    const CScalar q = p.q, ss = p.sstar, r1 = p.r1, r2 = p.r2;
    const CScalar qd = ipow(q, d);

    push(out, "N_0 = 1", cs.N[0], 1.0, tol);
    push(out, "|C| = 1 - k/theta_d", cs.Csize, 1.0 - cs.k / cs.theta_d_graph, tol);
    push(out, "tilde_b_0 = k - |C| + 1", cs.tilde_b[0], cs.k - cs.Csize + 1.0, tol);

    for (int i = 0; i < d; ++i) {
        // N_i from the u-polynomials at theta_d.
        const CScalar ui = u_at_theta_d(pa, i), ui1 = u_at_theta_d(pa, i + 1);
        push(out, label("N_i via u_i(theta_d)", i), cs.N[i], cs.Csize * ui1 / (ui1 - ui), tol);
        push(out, label("tilde_theta*_i mixing form", i), cs.tilde_theta_star[i],
             (cs.N[i] * pa.theta_star[i] + (cs.Csize - cs.N[i]) * pa.theta_star[i + 1]) / cs.Csize, tol);
        push(out, label("tau_i = -|C_i^+|/|C_i^-|", i), cs.tau[i], -cs.card_plus[i] / cs.card_minus[i], tol);
        push(out, label("tau_i = (N_i - |C|)/N_i", i), cs.tau[i], (cs.N[i] - cs.Csize) / cs.N[i], tol);
        push(out, label("1 - tau_i factored form", i), cs.one_minus_tau[i], 1.0 - cs.tau[i], tol);
        push(out, label("zeta_i tau_i closed form", i), cs.zeta[i] * cs.tau[i],
             ipow(q, -i) * ss * (1.0 - r1 * ipow(q, i + 1)) * (1.0 - r2 * ipow(q, i + 1)), tol);
        for (int j = 0; j < d; ++j)
            push(out, label("tilde_theta*_i - tilde_theta*_j", i, j),
                 cs.tilde_theta_star[i] - cs.tilde_theta_star[j],
                 cs.tilde_h_star * (1.0 - ipow(q, i - j)) * (1.0 - ss * ipow(q, i + j + 2)) * ipow(q, -i), tol);
    }
    for (int i = 1; i <= d - 1; ++i) {
        push(out, label("tilde_c_i = N_i c_i / N_{i-1}", i), cs.tilde_c[i], cs.N[i] / cs.N[i - 1] * abc.c[i], tol);
        push(out, label("epsilon_i = -|C_{i-1}^+|/|C_i^-|", i), cs.epsilon(i),
             -cs.card_plus[i - 1] / cs.card_minus[i], tol);
        push(out, label("1 - epsilon_i factored form", i), cs.one_minus_epsilon(i), 1.0 - cs.epsilon(i), tol);
        push(out, label("xi_i epsilon_i closed form", i), cs.xi_at(i) * cs.epsilon(i),
             ipow(q, 1 - i - d) * (1.0 - ipow(q, i)) * (1.0 - ss * ipow(q, i + d + 1)), tol);
    }
    for (int i = 0; i <= d - 2; ++i)
        push(out, label("tilde_b_i = (|C|-N_i) b_{i+1} / (|C|-N_{i+1})", i), cs.tilde_b[i],
             (cs.Csize - cs.N[i]) / (cs.Csize - cs.N[i + 1]) * abc.b[i + 1], tol);
    for (int i = 0; i < d; ++i) {
        const CScalar qi1 = ipow(q, i + 1);
        push(out, label("|C| - N_i closed form", i), cs.Csize - cs.N[i],
             -cs.h * (qd - 1.0) * (1.0 - r1 * qi1) * (1.0 - r2 * qi1) /
                 (cs.theta_d_graph * qd * (1.0 - ss * ipow(q, 2 * i + 2))),
             tol);
    }
    return out;
}

std::vector<Check> counting_identity_checks(const TridiagonalCoeffs &abc, const CliqueScalars &cs, Tolerance tol) {
    std::vector<Check> out;
    const int d = cs.d;
    const auto &b = abc.b, &c = abc.c, &tb = cs.tilde_b, &tc = cs.tilde_c;
    const auto &cm = cs.card_minus, &cp = cs.card_plus;
    for (int i = 0; i <= d - 2; ++i) {
        push(out, label("edges C-_i|C-_{i+1}", i), tb[i] * cm[i], c[i + 1] * cm[i + 1], tol);
        push(out, label("edges C+_i|C+_{i+1}", i), b[i + 1] * cp[i], tc[i + 1] * cp[i + 1], tol);
        push(out, label("edges C+_i|C-_{i+1}", i), (tb[i] - b[i + 1]) * cp[i], (tc[i + 1] - c[i + 1]) * cm[i + 1],
             tol);
    }
    for (int i = 0; i <= d - 1; ++i)
        push(out, label("edges C-_i|C+_i", i), (b[i] - tb[i]) * cm[i], (c[i + 1] - tc[i]) * cp[i],
             tol);
    return out;
}

std::vector<Check> xi_eps_relation_checks(const TridiagonalCoeffs &abc, const TridiagonalCoeffs &perp,
                                          const CliqueScalars &cs, Tolerance tol) {
    std::vector<Check> out;
    const int d = cs.d;
    const auto &a = abc.a, &b = abc.b, &c = abc.c;
    const auto &ta = cs.tilde_a, &tb = cs.tilde_b, &tc = cs.tilde_c;
    auto xi = [&](int i) { return cs.xi_at(i); };
    auto ep = [&](int i) { return cs.epsilon(i); };
    (void)a;
    for (int i = 1; i <= d - 2; ++i) {
        push(out, label("b_perp_{i-1} xi_i = xi_{i+1} b_i", i), perp.b[i - 1] * xi(i), xi(i + 1) * b[i], tol);
        push(out, label("b_perp_{i-1} xi_i eps_i", i), perp.b[i - 1] * xi(i) * ep(i),
             xi(i + 1) * (b[i] - tb[i]) + xi(i + 1) * ep(i + 1) * tb[i], tol);
    }
    for (int i = 0; i <= d - 2; ++i) {
        const CScalar tc_next = i + 1 <= d - 1 ? tc[i + 1] : CScalar(0.0);
        push(out, label("a_perp_i", i), perp.a[i], ta[i] - c[i + 1] + tc[i] + ep(i + 1) * (tb[i] - b[i + 1]), tol);
        push(out, label("a_perp_i eps_{i+1}", i), perp.a[i] * ep(i + 1),
             tc_next - c[i + 1] + ep(i + 1) * (ta[i + 1] - b[i + 1] + tb[i + 1]), tol);
        // Middle diagonal in the form b_0 - tilde_b_i - tilde_c_{i+1}, shifted by theta_0 - b_0.
        push(out, label("a_perp_i = theta_0 - tilde_b_i - tilde_c_{i+1}", i), perp.a[i],
             ta[0] + tb[0] + tc[0] - tb[i] - tc_next, tol);
    }
    for (int i = 0; i <= d - 3; ++i) {
        push(out, label("c_perp_{i+1} xi_{i+2}", i), perp.c[i + 1] * xi(i + 2),
             xi(i + 1) * tc[i + 1] + xi(i + 1) * ep(i + 1) * (c[i + 2] - tc[i + 1]), tol);
        push(out, label("c_perp_{i+1} xi_{i+2} eps_{i+2}", i), perp.c[i + 1] * xi(i + 2) * ep(i + 2),
             xi(i + 1) * ep(i + 1) * c[i + 2], tol);
    }
    return out;
}

std::vector<Check> zeta_tau_relation_checks(const TridiagonalCoeffs &abc, const TridiagonalCoeffs &tp,
                                            const CliqueScalars &cs, Tolerance tol) {
    std::vector<Check> out;
    const int d = cs.d;
    const auto &b = abc.b, &c = abc.c;
    const auto &ta = cs.tilde_a, &tb = cs.tilde_b, &tc = cs.tilde_c;
    const auto &z = cs.zeta, &t = cs.tau;
    const CScalar theta0 = ta[0] + tb[0] + tc[0];
    for (int i = 1; i <= d - 1; ++i) {
        push(out, label("zeta tau b_tperp (i)", i), z[i - 1] * t[i - 1] * tp.b[i - 1], z[i] * t[i] * tb[i - 1], tol);
        push(out, label("zeta b_tperp (ii)", i), z[i - 1] * tp.b[i - 1],
             z[i] * t[i] * (tb[i - 1] - b[i]) + z[i] * b[i], tol);
    }
    for (int i = 0; i <= d - 1; ++i) {
        push(out, label("a_tperp tau (iii)", i), tp.a[i] * t[i], t[i] * (ta[i] - b[i] + tb[i]) + (b[i] - tb[i]), tol);
        push(out, label("a_tperp (iv)", i), tp.a[i], t[i] * (c[i + 1] - tc[i]) + ta[i] - c[i + 1] + tc[i], tol);
        push(out, label("a_tperp_i = theta_0 - b_i - c_{i+1}", i), tp.a[i], theta0 - b[i] - c[i + 1], tol);
    }
    for (int i = 0; i <= d - 2; ++i) {
        push(out, label("zeta tau c_tperp (v)", i), z[i + 1] * t[i + 1] * tp.c[i + 1],
             z[i] * t[i] * c[i + 1] + z[i] * (tc[i + 1] - c[i + 1]), tol);
        push(out, label("zeta c_tperp (vi)", i), z[i + 1] * tp.c[i + 1], z[i] * tc[i + 1], tol);
    }
    return out;
}

}  // namespace ldaha
