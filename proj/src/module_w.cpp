#include "ldaha/module_w.hpp"

#include "a_table.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace ldaha {

std::string to_string(BasisId b) {
    switch (b) {
    case BasisId::C: return "C";
    case BasisId::B: return "B";
    case BasisId::Balt: return "Balt";
    case BasisId::Btilde: return "Btilde";
    case BasisId::BtildeAlt: return "BtildeAlt";
    }
    return "?";
}

std::string to_string(OperatorId op) {
    switch (op) {
    case OperatorId::A: return "A";
    case OperatorId::Astar: return "Astar";
    case OperatorId::AstarTilde: return "AstarTilde";
    case OperatorId::P: return "P";
    case OperatorId::Ptilde: return "Ptilde";
    }
    return "?";
}

std::optional<BasisId> parse_basis(const std::string &s) {
    for (BasisId b : kAllBases)
        if (to_string(b) == s) return b;
    return std::nullopt;
}

std::optional<OperatorId> parse_operator(const std::string &s) {
    for (OperatorId op : kAllOperators)
        if (to_string(op) == s) return op;
    return std::nullopt;
}

ModuleInputs derive_inputs(const QRacahParams &p) {
    ModuleInputs in;
    in.p = p;
    in.h = derive_h(p);
    in.hstar = derive_hstar(p);
    in.pa = primary_parameter_array(p, in.h, in.hstar);
    in.abc = intersection_numbers(in.pa);
    in.cs = compute_clique_scalars(p, in.h, in.hstar, in.pa);
    in.derived = derived_parameter_arrays(p, in.h, in.hstar, in.cs.tilde_theta_star[0]);
    in.perp = intersection_numbers(in.derived.Phi_perp);
    in.tilde_perp = intersection_numbers(in.derived.Phi_tilde_perp);
    return in;
}

namespace {

// Positions of the named vectors inside each ordered basis.
struct Pos {
    int d;
    int c_minus(int i) const { return 2 * i; }
    int c_plus(int i) const { return 2 * i + 1; }
    int b_v(int i) const { return i; }
    int b_perp(int j) const { return d + 1 + j; }
    int balt_v(int i) const { return i == 0 ? 0 : (i == d ? 2 * d - 1 : 2 * i - 1); }
    int balt_perp(int j) const { return 2 * j + 2; }
    int bt_v(int i) const { return i; }
    int bt_perp(int i) const { return d + i; }
    int bta_v(int i) const { return 2 * i; }
    int bta_perp(int i) const { return 2 * i + 1; }
};

// Position in B -> position in Balt, and tilde B -> tilde B alt.
std::vector<int> b_to_balt(int d) {
    Pos ps{d};
    std::vector<int> m(2 * d);
    for (int i = 0; i <= d; ++i) m[ps.b_v(i)] = ps.balt_v(i);
    for (int j = 0; j <= d - 2; ++j) m[ps.b_perp(j)] = ps.balt_perp(j);
    return m;
}

std::vector<int> bt_to_bta(int d) {
    Pos ps{d};
    std::vector<int> m(2 * d);
    for (int i = 0; i < d; ++i) {
        m[ps.bt_v(i)] = ps.bta_v(i);
        m[ps.bt_perp(i)] = ps.bta_perp(i);
    }
    return m;
}

// Same operator, vectors relabelled: out(m[i], m[j]) = in(i, j).
CMatrix relabel(const CMatrix &a, const std::vector<int> &m) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(m[i], m[j]) = a(i, j);
    return out;
}

// Column j of the result is e_{m[j]}: vector j of the target basis is vector m[j] of the source.
CMatrix permutation(const std::vector<int> &m) {
    CMatrix out(m.size(), m.size());
    for (std::size_t j = 0; j < m.size(); ++j) out(m[j], j) = 1.0;
    return out;
}

std::vector<int> invert(const std::vector<int> &m) {
    std::vector<int> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[m[i]] = static_cast<int>(i);
    return r;
}

int path_index(BasisId b) {
    switch (b) {
    case BasisId::B: return 0;
    case BasisId::Balt: return 1;
    case BasisId::C: return 2;
    case BasisId::BtildeAlt: return 3;
    case BasisId::Btilde: return 4;
    }
    return -1;
}

constexpr std::array<BasisId, 5> kPath{BasisId::B, BasisId::Balt, BasisId::C, BasisId::BtildeAlt, BasisId::Btilde};

// q-power shorthand bound to one parameter set.
struct QForms {
    const QRacahParams &p;
    CScalar Q(int n) const { return ipow(p.q, n); }

    // xi_i eps_i and zeta_i tau_i as printed next to the transition blocks.
    CScalar xi_eps(int i) const {
        return Q(1 - i - p.d) * (1.0 - Q(i)) * (1.0 - p.sstar * Q(i + p.d + 1));
    }
    CScalar zeta_tau(int i) const {
        return Q(-i) * p.sstar * (1.0 - p.r1 * Q(i + 1)) * (1.0 - p.r2 * Q(i + 1));
    }

    // Entries of the inverse block S_i (balt -> C), 1 <= i <= d-1.
    CScalar s_eps_over(int i) const {  // eps/(eps-1)
        return (1.0 - Q(i)) * (1.0 - p.sstar * Q(i + p.d + 1)) / ((1.0 - Q(p.d)) * (1.0 - p.sstar * Q(2 * i + 1)));
    }
    CScalar s_one_over(int i) const {  // 1/(1-eps)
        return Q(p.d) * (1.0 - Q(i - p.d)) * (1.0 - p.sstar * Q(i + 1)) /
               ((Q(p.d) - 1.0) * (1.0 - p.sstar * Q(2 * i + 1)));
    }
    CScalar s_xi_one(int i) const {  // 1/(xi(1-eps))
        return Q(p.d + i - 1) / ((Q(p.d) - 1.0) * (1.0 - p.sstar * Q(2 * i + 1)));
    }
    CScalar s_xi_eps(int i) const {  // 1/(xi(eps-1))
        return Q(p.d + i - 1) / ((1.0 - Q(p.d)) * (1.0 - p.sstar * Q(2 * i + 1)));
    }

    // Entries of the inverse block Q_i (tilde balt -> C), 0 <= i <= d-1.
    CScalar den_t(int i) const { return 1.0 - p.sstar * Q(2 * i + 2); }
    CScalar q_one_tau(int i) const {  // 1/(1-tau)
        return (p.r1 - p.sstar * Q(i + 1)) * (p.r2 - p.sstar * Q(i + 1)) / ((p.r1 * p.r2 - p.sstar) * den_t(i));
    }
    CScalar q_tau_over(int i) const {  // tau/(tau-1)
        return p.sstar * (1.0 - p.r1 * Q(i + 1)) * (1.0 - p.r2 * Q(i + 1)) / ((p.sstar - p.r1 * p.r2) * den_t(i));
    }
    CScalar q_zeta_tau_m(int i) const {  // 1/(zeta(tau-1))
        return Q(i) / ((p.sstar - p.r1 * p.r2) * den_t(i));
    }
    CScalar q_zeta_one_m(int i) const {  // 1/(zeta(1-tau))
        return Q(i) / ((p.r1 * p.r2 - p.sstar) * den_t(i));
    }
};

CMatrix adjacent_transition(const ModuleInputs &in, BasisId from, BasisId to) {
    const int d = in.p.d;
    const CliqueScalars &cs = in.cs;
    QForms f{in.p};
    Pos ps{d};
    const int n = 2 * d;

    if (from == BasisId::B && to == BasisId::Balt) return permutation(invert(b_to_balt(d)));
    if (from == BasisId::Balt && to == BasisId::B) return permutation(b_to_balt(d));
    if (from == BasisId::Btilde && to == BasisId::BtildeAlt) return permutation(invert(bt_to_bta(d)));
    if (from == BasisId::BtildeAlt && to == BasisId::Btilde) return permutation(bt_to_bta(d));

    CMatrix m(n, n);
    if (from == BasisId::C && to == BasisId::Balt) {
        // v_0 = C0-, v_d = C(d-1)+, and for 1 <= i <= d-1
        // v_i = C(i-1)+ + Ci-, vperp_{i-1} = xi_i C(i-1)+ + xi_i eps_i Ci-.
        m(ps.c_minus(0), ps.balt_v(0)) = 1.0;
        m(ps.c_plus(d - 1), ps.balt_v(d)) = 1.0;
        for (int i = 1; i <= d - 1; ++i) {
            m(ps.c_plus(i - 1), ps.balt_v(i)) = 1.0;
            m(ps.c_minus(i), ps.balt_v(i)) = 1.0;
            m(ps.c_plus(i - 1), ps.balt_perp(i - 1)) = cs.xi_at(i);
            m(ps.c_minus(i), ps.balt_perp(i - 1)) = f.xi_eps(i);
        }
        return m;
    }
    if (from == BasisId::Balt && to == BasisId::C) {
        m(ps.balt_v(0), ps.c_minus(0)) = 1.0;
        m(ps.balt_v(d), ps.c_plus(d - 1)) = 1.0;
        for (int i = 1; i <= d - 1; ++i) {
            m(ps.balt_v(i), ps.c_plus(i - 1)) = f.s_eps_over(i);
            m(ps.balt_v(i), ps.c_minus(i)) = f.s_one_over(i);
            m(ps.balt_perp(i - 1), ps.c_plus(i - 1)) = f.s_xi_one(i);
            m(ps.balt_perp(i - 1), ps.c_minus(i)) = f.s_xi_eps(i);
        }
        return m;
    }
    if (from == BasisId::C && to == BasisId::BtildeAlt) {
        // vt_i = Ci- + Ci+, vtperp_i = zeta_i tau_i Ci- + zeta_i Ci+.
        for (int i = 0; i < d; ++i) {
            m(ps.c_minus(i), ps.bta_v(i)) = 1.0;
            m(ps.c_plus(i), ps.bta_v(i)) = 1.0;
            m(ps.c_minus(i), ps.bta_perp(i)) = f.zeta_tau(i);
            m(ps.c_plus(i), ps.bta_perp(i)) = cs.zeta[i];
        }
        return m;
    }
    if (from == BasisId::BtildeAlt && to == BasisId::C) {
        for (int i = 0; i < d; ++i) {
            m(ps.bta_v(i), ps.c_minus(i)) = f.q_one_tau(i);
            m(ps.bta_v(i), ps.c_plus(i)) = f.q_tau_over(i);
            m(ps.bta_perp(i), ps.c_minus(i)) = f.q_zeta_tau_m(i);
            m(ps.bta_perp(i), ps.c_plus(i)) = f.q_zeta_one_m(i);
        }
        return m;
    }
    throw std::invalid_argument("not an adjacent basis pair: " + to_string(from) + " -> " + to_string(to));
}

// Tridiagonal matrix with a on the diagonal, b above, c below (column action:
// A v_j = b_{j-1} v_{j-1} + a_j v_j + c_{j+1} v_{j+1}, so row i holds c_i, a_i, b_i).
CMatrix tridiagonal(const TridiagonalCoeffs &t) {
    const std::size_t n = t.a.size();
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = t.a[i];
        if (i > 0) m(i, i - 1) = t.c[i];
        if (i + 1 < n) m(i, i + 1) = t.b[i];
    }
    return m;
}

CMatrix a_in_C(const ModuleInputs &in) {
    const int d = in.p.d;
    const CliqueScalars &cs = in.cs;
    const auto &b = in.abc.b;
    const auto &c = in.abc.c;
    CMatrix m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        const int r = 2 * i;
        m(r, r) = cs.tilde_a[i] - b[i] + cs.tilde_b[i];
        m(r, r + 1) = b[i] - cs.tilde_b[i];
        m(r + 1, r) = c[i + 1] - cs.tilde_c[i];
        m(r + 1, r + 1) = cs.tilde_a[i] - c[i + 1] + cs.tilde_c[i];
        if (i + 1 < d) {
            m(r, r + 2) = cs.tilde_b[i];
            m(r + 1, r + 2) = cs.tilde_b[i] - b[i + 1];
            m(r + 1, r + 3) = b[i + 1];
        }
        if (i >= 1) {
            m(r, r - 2) = c[i];
            m(r, r - 1) = cs.tilde_c[i] - c[i];
            m(r + 1, r - 1) = cs.tilde_c[i];
        }
    }
    return m;
}

CMatrix a_in_B(const ModuleInputs &in) {
    return CMatrix::block_diagonal({tridiagonal(in.abc), tridiagonal(in.perp)});
}

CMatrix a_in_Btilde(const ModuleInputs &in) {
    return CMatrix::block_diagonal({tridiagonal(intersection_numbers(in.derived.Phi_tilde)), tridiagonal(in.tilde_perp)});
}

// The four diagonal blocks of [A*] relative to tilde B, from theta*, tau, zeta.
struct Blocks4 {
    std::vector<CScalar> C, D, E, F;
};

Blocks4 astar_tilde_blocks(const ModuleInputs &in) {
    const int d = in.p.d;
    const auto &ts = in.pa.theta_star;
    const auto &tau = in.cs.tau;
    const auto &zeta = in.cs.zeta;
    const auto &omt = in.cs.one_minus_tau;
    Blocks4 out;
    for (int i = 0; i < d; ++i) {
        const CScalar diff = ts[i] - ts[i + 1];
        out.C.push_back(ts[i + 1] + diff / omt[i]);  // (theta*_i - tau theta*_{i+1}) / (1 - tau)
        out.D.push_back(zeta[i] * tau[i] * diff / omt[i]);
        out.E.push_back(-diff / (zeta[i] * omt[i]));
        out.F.push_back(ts[i] - diff / omt[i]);  // (tau theta*_i - theta*_{i+1}) / (tau - 1)
    }
    return out;
}

Blocks4 astar_tilde_blocks_q(const ModuleInputs &in) {
    const QRacahParams &p = in.p;
    QForms f{p};
    const auto &ts = in.pa.theta_star;
    const CScalar hs = in.hstar, ss = p.sstar, r1 = p.r1, r2 = p.r2, q = p.q;
    const CScalar g = ss - r1 * r2;
    Blocks4 out;
    for (int i = 0; i < p.d; ++i) {
        const CScalar u = (1.0 - r1 * f.Q(i + 1)) * (1.0 - r2 * f.Q(i + 1));
        const CScalar w = (r1 - ss * f.Q(i + 1)) * (r2 - ss * f.Q(i + 1));
        out.C.push_back(ts[i] + hs * ss * f.Q(-i - 1) * (1.0 - q) * u / g);
        out.D.push_back(hs * ss * f.Q(-2 * i - 1) * (1.0 - q) * w * u / g);
        out.E.push_back(hs * f.Q(-1) * (q - 1.0) / g);
        out.F.push_back(ts[i + 1] + hs * ss * f.Q(-i - 1) * (q - 1.0) * u / g);
    }
    return out;
}

// Entries of [tilde A*] relative to B for 1 <= i <= d-1 (index i-1), from tilde theta*, eps, xi.
Blocks4 astar_t_in_B_entries(const ModuleInputs &in) {
    const int d = in.p.d;
    const auto &tt = in.cs.tilde_theta_star;
    Blocks4 out;
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar e = in.cs.epsilon(i), x = in.cs.xi_at(i), ome = in.cs.one_minus_epsilon(i);
        const CScalar diff = tt[i - 1] - tt[i];
        out.C.push_back(tt[i - 1] - diff / ome);  // (eps tt_{i-1} - tt_i) / (eps - 1)
        out.D.push_back(-e * x * diff / ome);
        out.E.push_back(diff / (x * ome));
        out.F.push_back(tt[i] + diff / ome);  // (tt_{i-1} - eps tt_i) / (1 - eps)
    }
    return out;
}

Blocks4 astar_t_in_B_entries_q(const ModuleInputs &in) {
    const QRacahParams &p = in.p;
    QForms f{p};
    const int d = p.d;
    const auto &tt = in.cs.tilde_theta_star;
    const CScalar ht = in.cs.tilde_h_star, q = p.q, ss = p.sstar;
    Blocks4 out;
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar u = (1.0 - q) * (1.0 - f.Q(d - i)) * (1.0 - ss * f.Q(i + 1));
        out.C.push_back(tt[i - 1] + ht * u / (1.0 - f.Q(d)));
        out.D.push_back(ht * f.Q(1 - 2 * i) * (1.0 - q) * (1.0 - f.Q(i)) * (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1)) *
                        (1.0 - ss * f.Q(d + i + 1)) / (f.Q(d) - 1.0));
        out.E.push_back(ht * f.Q(d - 1) * (1.0 - q) / (1.0 - f.Q(d)));
        out.F.push_back(tt[i] + ht * u / (f.Q(d) - 1.0));
    }
    return out;
}

CMatrix astar_in(const ModuleInputs &in, BasisId basis) {
    const int d = in.p.d;
    const auto &ts = in.pa.theta_star;
    Pos ps{d};
    switch (basis) {
    case BasisId::C:
    case BasisId::Balt: {
        std::vector<CScalar> diag{ts[0]};
        for (int i = 1; i <= d - 1; ++i) {
            diag.push_back(ts[i]);
            diag.push_back(ts[i]);
        }
        diag.push_back(ts[d]);
        return CMatrix::diagonal(diag);
    }
    case BasisId::B: {
        std::vector<CScalar> diag(ts.begin(), ts.end());
        for (int i = 1; i <= d - 1; ++i) diag.push_back(ts[i]);
        return CMatrix::diagonal(diag);
    }
    case BasisId::Btilde: {
        Blocks4 k = astar_tilde_blocks(in);
        CMatrix m(2 * d, 2 * d);
        for (int i = 0; i < d; ++i) {
            m(ps.bt_v(i), ps.bt_v(i)) = k.C[i];
            m(ps.bt_v(i), ps.bt_perp(i)) = k.D[i];
            m(ps.bt_perp(i), ps.bt_v(i)) = k.E[i];
            m(ps.bt_perp(i), ps.bt_perp(i)) = k.F[i];
        }
        return m;
    }
    case BasisId::BtildeAlt: return relabel(astar_in(in, BasisId::Btilde), bt_to_bta(d));
    }
    return {};
}

CMatrix astar_tilde_in(const ModuleInputs &in, BasisId basis) {
    const int d = in.p.d;
    const auto &tt = in.cs.tilde_theta_star;
    Pos ps{d};
    switch (basis) {
    case BasisId::C:
    case BasisId::BtildeAlt: {
        std::vector<CScalar> diag;
        for (int i = 0; i < d; ++i) {
            diag.push_back(tt[i]);
            diag.push_back(tt[i]);
        }
        return CMatrix::diagonal(diag);
    }
    case BasisId::Btilde: {
        std::vector<CScalar> diag(tt.begin(), tt.end());
        diag.insert(diag.end(), tt.begin(), tt.end());
        return CMatrix::diagonal(diag);
    }
    case BasisId::B: {
        Blocks4 k = astar_t_in_B_entries(in);
        CMatrix m(2 * d, 2 * d);
        m(ps.b_v(0), ps.b_v(0)) = tt[0];
        m(ps.b_v(d), ps.b_v(d)) = tt[d - 1];
        for (int i = 1; i <= d - 1; ++i) {
            m(ps.b_v(i), ps.b_v(i)) = k.C[i - 1];
            m(ps.b_v(i), ps.b_perp(i - 1)) = k.D[i - 1];
            m(ps.b_perp(i - 1), ps.b_v(i)) = k.E[i - 1];
            m(ps.b_perp(i - 1), ps.b_perp(i - 1)) = k.F[i - 1];
        }
        return m;
    }
    case BasisId::Balt: return relabel(astar_tilde_in(in, BasisId::B), b_to_balt(d));
    }
    return {};
}

// [p] relative to tilde B: four d x d tridiagonal blocks [[P, Q], [R, S]].
// Every 1 - tau and 1 - eps is taken from its factored form.
CMatrix p_in_Btilde(const ModuleInputs &in) {
    const int d = in.p.d;
    const CliqueScalars &cs = in.cs;
    auto eps = [&](int i) { return cs.epsilon(i); };
    auto ome = [&](int i) { return cs.one_minus_epsilon(i); };
    auto tau = [&](int i) { return cs.tau[i]; };
    auto omt = [&](int i) { return cs.one_minus_tau[i]; };
    auto zeta = [&](int i) { return cs.zeta[i]; };
    CMatrix P(d, d), Q(d, d), R(d, d), S(d, d);

    const int L = d - 1;
    P(0, 0) = (1.0 - eps(1) * omt(0)) / (omt(0) * ome(1));
    P(L, L) = (1.0 - tau(L) * ome(L)) / (omt(L) * ome(L));
    Q(0, 0) = zeta(0) * tau(0) / (omt(0) * ome(1));
    Q(L, L) = zeta(L) * tau(L) * eps(L) / (omt(L) * ome(L));
    R(0, 0) = -1.0 / (zeta(0) * omt(0) * ome(1));
    R(L, L) = -eps(L) / (zeta(L) * omt(L) * ome(L));
    S(0, 0) = (-tau(0) * ome(1) - eps(1)) / (omt(0) * ome(1));
    S(L, L) = (omt(L) - eps(L)) / (omt(L) * ome(L));

    for (int i = 1; i <= d - 2; ++i) {
        const CScalar den = omt(i) * ome(i) * ome(i + 1);
        P(i, i) = (ome(i + 1) + eps(i + 1) * tau(i) * ome(i)) / den;
        Q(i, i) = zeta(i) * tau(i) * (1.0 - eps(i) * eps(i + 1)) / den;
        R(i, i) = (-1.0 + eps(i) * eps(i + 1)) / (zeta(i) * den);
        S(i, i) = -(tau(i) * ome(i + 1) + eps(i + 1) * ome(i)) / den;
    }
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar den = omt(i) * ome(i);
        P(i, i - 1) = -eps(i) / den;
        Q(i, i - 1) = -zeta(i - 1) * eps(i) / den;
        R(i, i - 1) = eps(i) / (zeta(i) * den);
        S(i, i - 1) = zeta(i - 1) * eps(i) / (zeta(i) * den);
    }
    for (int i = 0; i <= d - 2; ++i) {
        const CScalar den = omt(i) * ome(i + 1);
        P(i, i + 1) = -tau(i) / den;
        Q(i, i + 1) = -tau(i) * tau(i + 1) * zeta(i + 1) / den;
        R(i, i + 1) = 1.0 / (zeta(i) * den);
        S(i, i + 1) = zeta(i + 1) * tau(i + 1) / (zeta(i) * den);
    }
    CMatrix m(2 * d, 2 * d);
    m.set_block(0, 0, P);
    m.set_block(0, d, Q);
    m.set_block(d, 0, R);
    m.set_block(d, d, S);
    return m;
}

// [tilde p] relative to B: blocks P~ (d+1)x(d+1), Q~ (d+1)x(d-1), R~ (d-1)x(d+1), S~ (d-1)x(d-1).
CMatrix ptilde_in_B(const ModuleInputs &in) {
    const int d = in.p.d;
    const CliqueScalars &cs = in.cs;
    auto eps = [&](int i) { return cs.epsilon(i); };
    auto ome = [&](int i) { return cs.one_minus_epsilon(i); };
    auto xi = [&](int i) { return cs.xi_at(i); };
    auto tau = [&](int i) { return cs.tau[i]; };
    auto omt = [&](int i) { return cs.one_minus_tau[i]; };
    CMatrix P(d + 1, d + 1), Q(d + 1, d - 1), R(d - 1, d + 1), S(d - 1, d - 1);

    P(0, 0) = 1.0 / omt(0);
    P(0, 1) = -tau(0) / omt(0);
    P(d, d - 1) = 1.0 / omt(d - 1);
    P(d, d) = -tau(d - 1) / omt(d - 1);
    for (int i = 1; i <= d - 1; ++i) {
        P(i, i - 1) = -eps(i) / (omt(i - 1) * ome(i));
        P(i, i) = (eps(i) * tau(i - 1) * omt(i) + omt(i - 1)) / (omt(i - 1) * omt(i) * ome(i));
        P(i, i + 1) = -tau(i) / (ome(i) * omt(i));
    }

    Q(0, 0) = -tau(0) * xi(1) / omt(0);
    Q(d, d - 2) = xi(d - 1) * eps(d - 1) / omt(d - 1);
    for (int i = 2; i <= d - 1; ++i) Q(i, i - 2) = -xi(i - 1) * eps(i - 1) * eps(i) / (omt(i - 1) * ome(i));
    for (int i = 1; i <= d - 1; ++i)
        // 1 - tau_{i-1} tau_i = tau_i (1 - tau_{i-1}) + (1 - tau_i)
        Q(i, i - 1) = xi(i) * eps(i) * (tau(i) * omt(i - 1) + omt(i)) / (omt(i - 1) * omt(i) * ome(i));
    for (int i = 1; i <= d - 2; ++i) Q(i, i) = -tau(i) * xi(i + 1) / (ome(i) * omt(i));

    for (int i = 0; i <= d - 2; ++i) {
        R(i, i) = 1.0 / (xi(i + 1) * ome(i + 1) * omt(i));
        R(i, i + 1) = -(tau(i + 1) * omt(i) + omt(i + 1)) / (xi(i + 1) * ome(i + 1) * omt(i + 1) * omt(i));
        R(i, i + 2) = tau(i + 1) / (xi(i + 1) * ome(i + 1) * omt(i + 1));
    }

    for (int i = 0; i <= d - 2; ++i)
        S(i, i) = -(tau(i) * omt(i + 1) + eps(i + 1) * omt(i)) / (omt(i) * omt(i + 1) * ome(i + 1));
    for (int i = 1; i <= d - 2; ++i) S(i, i - 1) = xi(i) * eps(i) / (xi(i + 1) * ome(i + 1) * omt(i));
    for (int i = 0; i <= d - 3; ++i) S(i, i + 1) = tau(i + 1) * xi(i + 2) / (xi(i + 1) * ome(i + 1) * omt(i + 1));

    CMatrix m(2 * d, 2 * d);
    m.set_block(0, 0, P);
    m.set_block(0, d + 1, Q);
    m.set_block(d + 1, 0, R);
    m.set_block(d + 1, d + 1, S);
    return m;
}

CMatrix p_in(const ModuleInputs &in, BasisId basis) {
    const int d = in.p.d;
    const CliqueScalars &cs = in.cs;
    switch (basis) {
    case BasisId::C: {
        CMatrix m(2 * d, 2 * d);
        m(0, 0) = 1.0;
        m(2 * d - 1, 2 * d - 1) = 1.0;
        for (int i = 1; i <= d - 1; ++i) {
            const CScalar e = cs.epsilon(i), ome = cs.one_minus_epsilon(i);
            const int r = 2 * i - 1;  // rows/cols C(i-1)+, Ci-
            for (int k = 0; k < 2; ++k) {
                m(r + k, r) = -e / ome;
                m(r + k, r + 1) = 1.0 / ome;
            }
        }
        return m;
    }
    case BasisId::B: {
        std::vector<CScalar> diag(2 * d, 0.0);
        for (int i = 0; i <= d; ++i) diag[i] = 1.0;
        return CMatrix::diagonal(diag);
    }
    case BasisId::Balt: return relabel(p_in(in, BasisId::B), b_to_balt(d));
    case BasisId::Btilde: return p_in_Btilde(in);
    case BasisId::BtildeAlt: return relabel(p_in_Btilde(in), bt_to_bta(d));
    }
    return {};
}

CMatrix ptilde_in(const ModuleInputs &in, BasisId basis) {
    const int d = in.p.d;
    switch (basis) {
    case BasisId::C: {
        CMatrix m(2 * d, 2 * d);
        for (int i = 0; i < d; ++i) {
            const CScalar t = in.cs.tau[i], omt = in.cs.one_minus_tau[i];
            for (int k = 0; k < 2; ++k) {
                m(2 * i + k, 2 * i) = 1.0 / omt;
                m(2 * i + k, 2 * i + 1) = -t / omt;
            }
        }
        return m;
    }
    case BasisId::Btilde: {
        std::vector<CScalar> diag(2 * d, 0.0);
        for (int i = 0; i < d; ++i) diag[i] = 1.0;
        return CMatrix::diagonal(diag);
    }
    case BasisId::BtildeAlt: return relabel(ptilde_in(in, BasisId::Btilde), bt_to_bta(d));
    case BasisId::B: return ptilde_in_B(in);
    case BasisId::Balt: return relabel(ptilde_in_B(in), b_to_balt(d));
    }
    return {};
}

Comparison compare_seq(const std::vector<CScalar> &a, const std::vector<CScalar> &b, Tolerance tol) {
    return approx_eq(CMatrix(1, a.size(), a), CMatrix(1, b.size(), b), tol);
}

}  // namespace

bool adjacent(BasisId x, BasisId y) { return std::abs(path_index(x) - path_index(y)) == 1; }

CMatrix transition_matrix(const ModuleInputs &in, BasisId from, BasisId to) {
    const int n = 2 * in.p.d;
    if (from == to) return CMatrix::identity(n);
    if (adjacent(from, to)) return adjacent_transition(in, from, to);
    const int a = path_index(from), b = path_index(to);
    const int step = b > a ? 1 : -1;
    CMatrix m = CMatrix::identity(n);
    for (int k = a; k != b; k += step) m = m * adjacent_transition(in, kPath[k], kPath[k + step]);
    return m;
}

CMatrix operator_matrix(const ModuleInputs &in, OperatorId op, BasisId basis) {
    const int d = in.p.d;
    switch (op) {
    case OperatorId::A:
        switch (basis) {
        case BasisId::C: return a_in_C(in);
        case BasisId::B: return a_in_B(in);
        case BasisId::Balt: return relabel(a_in_B(in), b_to_balt(d));
        case BasisId::Btilde: return a_in_Btilde(in);
        case BasisId::BtildeAlt: return relabel(a_in_Btilde(in), bt_to_bta(d));
        }
        break;
    case OperatorId::Astar: return astar_in(in, basis);
    case OperatorId::AstarTilde: return astar_tilde_in(in, basis);
    case OperatorId::P: return p_in(in, basis);
    case OperatorId::Ptilde: return ptilde_in(in, basis);
    }
    return {};
}

CMatrix a_matrix_C_qexplicit(const ModuleInputs &in) {
    const QRacahParams &p = in.p;
    CMatrix m(2 * p.d, 2 * p.d);
    // The table's diagonal constant is the valency; with a free theta_0 it is theta_0.
    detail::a_table_C<CScalar>(p.d, p.q, p.sstar, p.r1, p.r2, in.h, p.theta0,
                               [&](int i, int j, CScalar v) { m(i, j) = v; });
    return m;
}

std::vector<CScalar> gram_diagonal(const TridiagonalCoeffs &abc, const CliqueScalars &cs) {
    std::vector<CScalar> g;
    CScalar minus = 1.0, plus = cs.Csize - 1.0;
    for (int i = 0; i < cs.d; ++i) {
        if (i >= 1) {
            minus *= cs.tilde_b[i - 1] / abc.c[i];
            plus *= abc.b[i] / cs.tilde_c[i];
        }
        g.push_back(minus);
        g.push_back(plus);
    }
    return g;
}

ModuleRep build_module(const ModuleInputs &in) {
    ModuleRep rep;
    rep.dim = 2 * in.p.d;
    for (BasisId x : kAllBases)
        for (BasisId y : kAllBases)
            if (x != y) rep.trans[{x, y}] = transition_matrix(in, x, y);
    for (OperatorId op : kAllOperators)
        for (BasisId b : kAllBases) rep.rep[{op, b}] = operator_matrix(in, op, b);
    rep.gram_C = gram_diagonal(in.abc, in.cs);
    return rep;
}

std::vector<Check> transition_checks(const ModuleRep &rep, Tolerance tol) {
    std::vector<Check> out;
    const CMatrix I = CMatrix::identity(rep.dim);
    for (BasisId x : kAllBases)
        for (BasisId y : kAllBases)
            if (x != y)
                out.push_back({"trans " + to_string(x) + "->" + to_string(y) + " * reverse = I",
                               approx_eq(rep.T(x, y) * rep.T(y, x), I, tol)});
    return out;
}

std::vector<Check> conjugation_checks(const ModuleRep &rep, Tolerance tol) {
    std::vector<Check> out;
    for (OperatorId op : kAllOperators)
        for (BasisId x : kAllBases)
            for (BasisId y : kAllBases) {
                if (x == y) continue;
                const CMatrix &P = rep.T(x, y);
                out.push_back({"[" + to_string(op) + "] " + to_string(x) + " conjugated to " + to_string(y),
                               approx_eq(rep.M(op, x) * P, P * rep.M(op, y), tol)});
            }
    return out;
}

std::vector<Check> projection_checks(const ModuleInputs &in, const ModuleRep &rep, Tolerance tol) {
    std::vector<Check> out;
    const int d = in.p.d;
    for (BasisId b : kAllBases) {
        const std::string s = " in " + to_string(b);
        const CMatrix &P = rep.M(OperatorId::P, b), &Pt = rep.M(OperatorId::Ptilde, b);
        const CMatrix &A = rep.M(OperatorId::A, b), &As = rep.M(OperatorId::Astar, b),
                      &Ats = rep.M(OperatorId::AstarTilde, b);
        out.push_back({"p^2 = p" + s, approx_eq(P * P, P, tol)});
        out.push_back({"pt^2 = pt" + s, approx_eq(Pt * Pt, Pt, tol)});
        out.push_back({"trace p = d+1" + s, approx_eq(P.trace(), CScalar(d + 1), tol)});
        out.push_back({"trace pt = d" + s, approx_eq(Pt.trace(), CScalar(d), tol)});
        // Commutators measured against the scale of the products they cancel.
        auto comm = [&](const std::string &name, const CMatrix &x, const CMatrix &y) {
            const CMatrix xy = x * y, yx = y * x;
            out.push_back({name + s, approx_eq(xy, yx, tol)});
        };
        comm("[A, p] = 0", A, P);
        comm("[A*, p] = 0", As, P);
        comm("[A, pt] = 0", A, Pt);
        comm("[tilde A*, pt] = 0", Ats, Pt);
    }
    return out;
}

std::vector<Check> structure_checks(const ModuleInputs &in, const ModuleRep &rep, Tolerance tol) {
    std::vector<Check> out;
    const int d = in.p.d;
    const int n = rep.dim;
    const CMatrix &A = rep.M(OperatorId::A, BasisId::C);
    const auto &g = rep.gram_C;

    // M_ji g_j = M_ij g_i.
    CMatrix lhs(n, n), rhs(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            lhs(i, j) = A(j, i) * g[j];
            rhs(i, j) = A(i, j) * g[i];
        }
    out.push_back({"Gram self-adjointness of [A]_C", approx_eq(lhs, rhs, tol)});

    // Exact zeros outside the block-tridiagonal pattern: block row i only touches
    // block columns i-1, i, i+1, and the fixed zeros inside B_i and C_i.
    double stray = 0.0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const int bi = r / 2, bj = c / 2;
            bool allowed = std::abs(bi - bj) <= 1;
            if (bj == bi + 1 && r % 2 == 0 && c % 2 == 1) allowed = false;  // B_i upper right
            if (bj == bi - 1 && r % 2 == 1 && c % 2 == 0) allowed = false;  // C_i lower left
            if (!allowed) stray = std::max(stray, std::abs(A(r, c)));
        }
    Comparison band;
    band.ok = stray == 0.0;
    band.residual = stray;
    band.scale = norm_inf(A);
    out.push_back({"[A]_C block-tridiagonal zero pattern", band});

    out.push_back({"[A]_C matches the q-explicit table", approx_eq(A, a_matrix_C_qexplicit(in), tol)});

    QForms f{in.p};
    std::vector<CScalar> a, b;
    for (int i = 1; i <= d - 1; ++i) {
        a.push_back(in.cs.xi_at(i) * in.cs.epsilon(i));
        b.push_back(f.xi_eps(i));
    }
    out.push_back({"xi_i eps_i closed form", compare_seq(a, b, tol)});
    a.clear();
    b.clear();
    for (int i = 0; i < d; ++i) {
        a.push_back(in.cs.zeta[i] * in.cs.tau[i]);
        b.push_back(f.zeta_tau(i));
    }
    out.push_back({"zeta_i tau_i closed form", compare_seq(a, b, tol)});

    // Inverse transition blocks: q-forms against the eps/xi and tau/zeta expressions.
    a.clear();
    b.clear();
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar e = in.cs.epsilon(i), x = in.cs.xi_at(i);
        a.insert(a.end(), {e / (e - 1.0), 1.0 / (1.0 - e), 1.0 / (x * (1.0 - e)), 1.0 / (x * (e - 1.0))});
        b.insert(b.end(), {f.s_eps_over(i), f.s_one_over(i), f.s_xi_one(i), f.s_xi_eps(i)});
    }
    out.push_back({"Balt->C block closed forms", compare_seq(a, b, tol)});
    a.clear();
    b.clear();
    for (int i = 0; i < d; ++i) {
        const CScalar t = in.cs.tau[i], z = in.cs.zeta[i];
        a.insert(a.end(), {1.0 / (1.0 - t), t / (t - 1.0), 1.0 / (z * (t - 1.0)), 1.0 / (z * (1.0 - t))});
        b.insert(b.end(), {f.q_one_tau(i), f.q_tau_over(i), f.q_zeta_tau_m(i), f.q_zeta_one_m(i)});
    }
    out.push_back({"BtildeAlt->C block closed forms", compare_seq(a, b, tol)});

    auto cmp4 = [&](const std::string &name, const Blocks4 &x, const Blocks4 &y) {
        out.push_back({name + " C", compare_seq(x.C, y.C, tol)});
        out.push_back({name + " D", compare_seq(x.D, y.D, tol)});
        out.push_back({name + " E", compare_seq(x.E, y.E, tol)});
        out.push_back({name + " F", compare_seq(x.F, y.F, tol)});
    };
    cmp4("[A*]_Btilde q-form", astar_tilde_blocks(in), astar_tilde_blocks_q(in));
    cmp4("[tilde A*]_B q-form", astar_t_in_B_entries(in), astar_t_in_B_entries_q(in));

    // Endpoint-shift diagonals: the second blocks carry theta*_1.. and tilde theta*_0.. again.
    std::vector<CScalar> want(in.pa.theta_star.begin(), in.pa.theta_star.end());
    for (int i = 1; i <= d - 1; ++i) want.push_back(in.derived.Phi_perp.theta_star[i - 1]);
    out.push_back({"[A*]_B diagonal from Phi and Phi-perp", compare_seq(rep.M(OperatorId::Astar, BasisId::B).diag(), want, tol)});
    want.assign(in.derived.Phi_tilde.theta_star.begin(), in.derived.Phi_tilde.theta_star.end());
    want.insert(want.end(), in.derived.Phi_tilde_perp.theta_star.begin(), in.derived.Phi_tilde_perp.theta_star.end());
    out.push_back({"[tilde A*]_Btilde diagonal from tilde Phi and tilde Phi-perp",
                   compare_seq(rep.M(OperatorId::AstarTilde, BasisId::Btilde).diag(), want, tol)});
    return out;
}

SpectralReport count_eigenvalues(const std::string &name, const std::vector<CScalar> &eigenvalues, double radius,
                                 const std::vector<CScalar> &targets, std::vector<int> expected) {
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = i + 1; j < targets.size(); ++j)
            if (std::abs(targets[i] - targets[j]) < 2.0 * radius)
                throw AmbiguousClusterError(name + ": targets " + std::to_string(i) + " and " + std::to_string(j) +
                                            " lie within the clustering radius");
    SpectralReport r;
    r.name = name;
    r.expected = std::move(expected);
    r.multiplicity.assign(targets.size(), 0);
    for (const CScalar ev : eigenvalues) {
        bool hit = false;
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (std::abs(ev - targets[i]) <= radius) {
                ++r.multiplicity[i];
                hit = true;
                break;
            }
        if (!hit) ++r.unmatched;
    }
    r.ok = r.unmatched == 0 && r.multiplicity == r.expected;
    return r;
}

SpectralReport count_multiplicities(const std::string &name, const CMatrix &m, const std::vector<CScalar> &targets,
                                    std::vector<int> expected) {
    Eigen::MatrixXcd em(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) em(i, j) = m(i, j);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(em, false);
    const auto &ev = solver.eigenvalues();
    return count_eigenvalues(name, std::vector<CScalar>(ev.data(), ev.data() + ev.size()), 1e-6 * norm_inf(m), targets,
                             std::move(expected));
}

namespace {

double spectral_scale(const std::vector<CScalar> &v) {
    double m = 0.0;
    for (CScalar x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

std::vector<SpectralReport> spectral_dims(const ModuleInputs &in, const ModuleRep &rep) {
    const int d = in.p.d;
    std::vector<int> ends(d + 1, 2);
    ends.front() = ends.back() = 1;
    return {
        count_eigenvalues("[A]_C", a_C_eigenvalues_extended(in.p), 1e-6 * spectral_scale(in.pa.theta), in.pa.theta,
                          ends),
        count_multiplicities("[A*]_C", rep.M(OperatorId::Astar, BasisId::C), in.pa.theta_star, ends),
        count_multiplicities("[tilde A*]_C", rep.M(OperatorId::AstarTilde, BasisId::C), in.cs.tilde_theta_star,
                             std::vector<int>(d, 2)),
    };
}

}  // namespace ldaha
