#include "ldaha/daha.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ldaha {

namespace {

// Closed-form building blocks shared by the block definitions and the tables.
struct Forms {
    const QRacahParams &p;
    CScalar Q(int n) const { return ipow(p.q, n); }
    CScalar U(int n) const { return (1.0 - p.r1 * Q(n)) * (1.0 - p.r2 * Q(n)); }
    CScalar V(int n) const { return (p.r1 - p.sstar * Q(n)) * (p.r2 - p.sstar * Q(n)); }
    CScalar D(int n) const { return 1.0 - p.sstar * Q(n); }
    // 1 - U(n)/D(2n) without the cancellation near q^n -> 0.
    CScalar one_minus_u(int n) const {
        return Q(n) * ((p.r1 + p.r2) - Q(n) * (p.sstar + p.r1 * p.r2)) / D(2 * n);
    }
    // V(n)/D(2n) + s*.
    CScalar v_plus_sstar(int n) const {
        return (p.r1 * p.r2 + p.sstar - p.sstar * Q(n) * (p.r1 + p.r2)) / D(2 * n);
    }
    // Numerators shared by the diagonals of t_1(i) and t_2(i).
    CScalar diag_a(int i) const { return 1.0 + Q(p.d) - Q(i) * (1.0 + p.sstar * Q(p.d + 1)); }
    CScalar diag_b(int i) const { return 1.0 + p.sstar * Q(p.d + 1) - p.sstar * Q(i + 1) * (1.0 + Q(p.d)); }
    CScalar qh(int n) const { return ipow(p.q_half, n); }
    CScalar rr() const { return p.r1_half * p.r2_half; }  // sqrt(r1 r2)
    // sqrt(s* q^d / (r1 r2)) and 1 / sqrt(s* r1 r2 q^d).
    CScalar a() const { return p.sstar_half * qh(p.d) / rr(); }
    CScalar bq() const { return 1.0 / (p.sstar_half * rr() * qh(p.d)); }
};

std::string idx(const std::string &s, int i) { return s + "(" + std::to_string(i) + ")"; }

Comparison distinctness(const std::vector<CScalar> &v, Tolerance tol) {
    double scale = 0.0, sep = std::numeric_limits<double>::infinity();
    for (const auto &x : v) scale = std::max(scale, std::abs(x));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) sep = std::min(sep, std::abs(v[i] - v[j]));
    Comparison c;
    c.scale = scale;
    c.bound = tol.abs + tol.rel * scale;
    c.residual = sep;  // here the smallest separation, required to exceed the bound
    c.ok = sep > c.bound;
    c.separation = true;
    return c;
}

CMatrix scalar_matrix(std::size_t n, CScalar c) { return c * CMatrix::identity(n); }

}  // namespace

std::array<CScalar, 4> k_constants(const QRacahParams &p) {
    Forms f{p};
    return {f.rr() / p.sstar_half, 1.0 / f.qh(p.d), p.sstar_half * f.qh(p.d + 1), p.r2_half / p.r1_half};
}

CMatrix t_block(const QRacahParams &p, int n, int i) {
    const int d = p.d;
    Forms f{p};
    const CScalar ss = p.sstar;
    switch (n) {
    case 0: {
        if (i < 0 || i > d - 1) break;
        const CScalar u = f.U(i + 1) / f.D(2 * i + 2), v = f.V(i + 1) / f.D(2 * i + 2);
        const CScalar inv = 1.0 / (p.sstar_half * f.rr()), sq = p.sstar_half / f.rr();
        return CMatrix{{inv * f.v_plus_sstar(i + 1), -sq * u}, {inv * v, sq * f.one_minus_u(i + 1)}};
    }
    case 1: {
        const CScalar h = f.qh(d);
        if (i == 0 || i == d) return CMatrix{{1.0 / h}};
        if (i < 1 || i > d - 1) break;
        const CScalar x = (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1)) / f.D(2 * i + 1);
        const CScalar y = (1.0 - f.Q(i)) * (1.0 - ss * f.Q(d + i + 1)) / f.D(2 * i + 1);
        // Diagonals h x + 1/h and (1 - y)/h with the unit terms cancelled by hand.
        const CScalar den = h * f.D(2 * i + 1);
        return CMatrix{{f.diag_a(i) / den, -h * x}, {y / h, f.Q(i) * f.diag_b(i) / den}};
    }
    case 2: {
        const CScalar w = p.sstar_half * f.qh(d + 1);  // sqrt(s* q^{d+1})
        if (i == 0) return CMatrix{{w}};
        if (i == d) return CMatrix{{1.0 / w}};
        if (i < 1 || i > d - 1) break;
        const CScalar den = f.D(2 * i + 1);
        return CMatrix{{f.diag_b(i) / (w * den), f.Q(i) * w * (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1)) / den},
                       {(f.Q(i) - 1.0) * (1.0 - ss * f.Q(d + i + 1)) / (f.Q(i) * w * den),
                        w * f.Q(i - d) * f.diag_a(i) / den}};
    }
    case 3: {
        if (i < 0 || i > d - 1) break;
        const CScalar u = f.U(i + 1) / f.D(2 * i + 2), v = f.V(i + 1) / f.D(2 * i + 2);
        const CScalar lo = 1.0 / (f.Q(i + 1) * f.rr()), hi = f.Q(i + 1) / f.rr();
        return CMatrix{{lo * f.one_minus_u(i + 1), lo * u}, {-hi * v, hi * f.v_plus_sstar(i + 1)}};
    }
    default: break;
    }
    throw std::out_of_range("t_block: index " + std::to_string(i) + " out of range for t_" + std::to_string(n) +
                            " at d = " + std::to_string(d));
}

CMatrix block_inverse(const CMatrix &b) {
    if (b.rows() == 1 && b.cols() == 1) return CMatrix{{safe_div(1.0, b(0, 0), "1x1 block inverse")}};
    if (b.rows() != 2 || b.cols() != 2) throw DimensionError("block_inverse: block must be 1x1 or 2x2");
    return CMatrix{{b(1, 1), -b(0, 1)}, {-b(1, 0), b(0, 0)}};
}

DahaRep assemble(const QRacahParams &p) {
    const int d = p.d;
    DahaRep rep;
    rep.k = k_constants(p);
    for (int n : {0, 3}) {
        std::vector<CMatrix> blocks;
        for (int i = 0; i < d; ++i) blocks.push_back(t_block(p, n, i));
        rep.T[n] = CMatrix::block_diagonal(blocks);
        for (auto &b : blocks) b = block_inverse(b);
        rep.Tinv[n] = CMatrix::block_diagonal(blocks);
    }
    for (int n : {1, 2}) {
        std::vector<CMatrix> blocks;
        for (int i = 0; i <= d; ++i) blocks.push_back(t_block(p, n, i));
        rep.T[n] = CMatrix::block_diagonal(blocks);
        for (auto &b : blocks) b = block_inverse(b);
        rep.Tinv[n] = CMatrix::block_diagonal(blocks);
    }
    rep.X = rep.T[3] * rep.T[0];
    rep.Y = rep.T[0] * rep.T[1];
    rep.Xinv = rep.Tinv[0] * rep.Tinv[3];
    rep.Yinv = rep.Tinv[1] * rep.Tinv[0];
    rep.Abold = rep.Y + rep.Yinv;
    rep.Bbold = rep.X + rep.Xinv;
    rep.Bdag = p.q_half * rep.X + (1.0 / p.q_half) * rep.Xinv;
    return rep;
}

std::vector<Check> verify_daha_relations(const DahaRep &rep, const QRacahParams &p, Tolerance tol) {
    std::vector<Check> out;
    const std::size_t n = rep.T[0].rows();
    const CMatrix I = CMatrix::identity(n);
    std::array<CMatrix, 4> sum;
    for (int m = 0; m < 4; ++m) {
        sum[m] = rep.T[m] + rep.Tinv[m];
        const std::string t = "T" + std::to_string(m);
        out.push_back({t + " T^-1 = I", product_eq(rep.T[m], rep.Tinv[m], I, tol)});
        out.push_back({t + "^-1 T = I", product_eq(rep.Tinv[m], rep.T[m], I, tol)});
        out.push_back({t + " + T^-1 = (k + 1/k) I",
                       approx_eq(sum[m], scalar_matrix(n, rep.k[m] + 1.0 / rep.k[m]), tol)});
    }
    // Two-sided so both products stay at the size of their factors; the
    // four-fold product cancels down to a scalar from entries up to 1e4 times larger.
    out.push_back({"T0 T1 T2 T3 = q^{-1/2} I, as T0 T1 = q^{-1/2} T3^-1 T2^-1",
                   approx_eq(rep.T[0] * rep.T[1], (1.0 / p.q_half) * (rep.Tinv[3] * rep.Tinv[2]), tol)});
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 4; ++k)
            out.push_back({"[T" + std::to_string(m) + ", T" + std::to_string(k) + " + T" + std::to_string(k) +
                               "^-1] = 0",
                           approx_eq(rep.T[m] * sum[k], sum[k] * rep.T[m], tol)});
    auto comm = [&](const std::string &name, const CMatrix &x, const CMatrix &y) {
        out.push_back({name, approx_eq(x * y, y * x, tol)});
    };
    comm("[A-bold, T0] = 0", rep.Abold, rep.T[0]);
    comm("[B-bold, T0] = 0", rep.Bbold, rep.T[0]);
    comm("[A-bold, T1] = 0", rep.Abold, rep.T[1]);
    comm("[B-dagger, T1] = 0", rep.Bdag, rep.T[1]);
    comm("[B-bold, B-dagger] = 0", rep.Bbold, rep.Bdag);

    Comparison k01;
    k01.scale = 1.0;
    k01.residual = std::min({std::abs(rep.k[0] - 1.0), std::abs(rep.k[0] + 1.0), std::abs(rep.k[1] - 1.0),
                             std::abs(rep.k[1] + 1.0)});
    k01.bound = tol.abs + tol.rel;
    k01.ok = k01.residual > k01.bound;
    k01.separation = true;
    out.push_back({"k0, k1 differ from +-1", k01});
    return out;
}

std::vector<Check> verify_blocks(const QRacahParams &p, Tolerance tol) {
    std::vector<Check> out;
    const int d = p.d;
    const auto k = k_constants(p);
    Forms f{p};
    for (int n = 0; n < 4; ++n) {
        const int lo = (n == 1 || n == 2) ? 1 : 0;
        const CScalar kk = k[n] + 1.0 / k[n];
        const std::string t = "t" + std::to_string(n);
        for (int i = lo; i <= d - 1; ++i) {
            const CMatrix b = t_block(p, n, i);
            out.push_back({idx("det " + t, i) + " = 1, as ad = 1 + bc",
                           approx_eq(b(0, 0) * b(1, 1), 1.0 + b(0, 1) * b(1, 0), tol)});
            out.push_back({idx("trace " + t, i) + " = k + 1/k", approx_eq(b.trace(), kk, tol)});
        }
        if (lo == 1)
            for (int i : {0, d}) {
                const CScalar x = t_block(p, n, i)(0, 0);
                out.push_back({idx(t, i) + " + 1/" + idx(t, i) + " = k + 1/k", approx_eq(x + 1.0 / x, kk, tol)});
            }
    }
    for (int i = 0; i <= d - 1; ++i) {
        const CScalar e = f.Q(i + 1) * p.sstar_half;
        out.push_back({idx("t3 t0", i) + " diagonal, as t0 = t3^-1 diag",
                       approx_eq(t_block(p, 0, i), block_inverse(t_block(p, 3, i)) * CMatrix::diagonal({1.0 / e, e}),
                                 tol)});
    }
    const CScalar w = p.sstar_half * p.q_half;  // sqrt(s* q)
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar e = f.Q(i) * w;
        out.push_back({idx("t1 t2", i) + " diagonal, as t2 = t1^-1 diag",
                       approx_eq(t_block(p, 2, i), block_inverse(t_block(p, 1, i)) * CMatrix::diagonal({1.0 / e, e}),
                                 tol)});
    }
    out.push_back({"t1(0) t2(0) = sqrt(s* q)", approx_eq(t_block(p, 1, 0)(0, 0) * t_block(p, 2, 0)(0, 0), w, tol)});
    out.push_back({"t1(d) t2(d) = 1/(q^d sqrt(s* q))",
                   approx_eq(t_block(p, 1, d)(0, 0) * t_block(p, 2, d)(0, 0), 1.0 / (f.Q(d) * w), tol)});
    return out;
}

CMatrix y_matrix_from_table(const QRacahParams &p) {
    const int d = p.d;
    Forms f{p};
    const CScalar a = f.a(), bq = f.bq(), ss = p.sstar;
    CMatrix m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        const int cm = 2 * i, cp = 2 * i + 1;
        // Y C_i^-
        const CScalar x = (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1));
        const CScalar y = (f.Q(i) - 1.0) * (1.0 - ss * f.Q(d + i + 1)) / f.D(2 * i + 1) + 1.0;
        if (i >= 1) {
            m(cm - 2, cm) = a * x * f.U(i) / (f.D(2 * i) * f.D(2 * i + 1));
            m(cm - 1, cm) = a * x / f.D(2 * i + 1) * (f.U(i) / f.D(2 * i) - 1.0);
        }
        m(cm, cm) = bq * y * (f.V(i + 1) / f.D(2 * i + 2) + ss);
        m(cp, cm) = bq * f.V(i + 1) / f.D(2 * i + 2) * y;
        // Y C_i^+
        const CScalar z = (1.0 - f.Q(i - d + 1)) * (1.0 - ss * f.Q(i + 2)) / f.D(2 * i + 3) + f.Q(-d);
        const CScalar u = f.U(i + 1) / f.D(2 * i + 2);
        m(cm, cp) = -a * u * z;
        m(cp, cp) = a * (1.0 - u) * z;
        if (i + 1 <= d - 1) {
            const CScalar w = (1.0 - f.Q(i + 1)) * (1.0 - ss * f.Q(d + i + 2)) / f.D(2 * i + 3);
            m(cm + 2, cp) = bq * w * (f.V(i + 2) / f.D(2 * i + 4) + ss);
            m(cp + 2, cp) = bq * w * f.V(i + 2) / f.D(2 * i + 4);
        }
    }
    return m;
}

CMatrix y_inverse_from_table(const QRacahParams &p) {
    const int d = p.d;
    Forms f{p};
    const CScalar a = f.a(), bq = f.bq(), ss = p.sstar;
    CMatrix m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        const int cm = 2 * i, cp = 2 * i + 1;
        const CScalar x = (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1)) / f.D(2 * i + 1);
        const CScalar u = f.U(i + 1) / f.D(2 * i + 2);
        const CScalar v = f.V(i + 1) / f.D(2 * i + 2);
        const CScalar w = (1.0 - f.Q(i + 1)) * (1.0 - ss * f.Q(d + i + 2)) / f.D(2 * i + 3);
        // Y^{-1} C_i^-
        if (i >= 1) m(cm - 1, cm) = a * x * (1.0 - u);
        m(cm, cm) = a * (1.0 - u) * (x + f.Q(-d));
        m(cp, cm) = bq * v * (w - 1.0);
        if (i + 1 <= d - 1) m(cm + 2, cm) = bq * w * v;
        // Y^{-1} C_i^+
        if (i >= 1) m(cm - 1, cp) = a * x * u;
        m(cm, cp) = a * u * (x + f.Q(-d));
        m(cp, cp) = bq * (v + ss) * (1.0 - w);
        if (i + 1 <= d - 1) m(cm + 2, cp) = bq * (-w) * (v + ss);
    }
    return m;
}

CMatrix a_bold_from_table(const QRacahParams &p) {
    const int d = p.d;
    Forms f{p};
    const CScalar a = f.a(), ss = p.sstar, sqd = p.sstar * f.Q(d);
    CMatrix m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        const int cm = 2 * i, cp = 2 * i + 1;
        const CScalar x = (1.0 - f.Q(i - d)) * (1.0 - ss * f.Q(i + 1));
        const CScalar y = (1.0 - f.Q(i)) * (1.0 - ss * f.Q(i + d + 1));
        const CScalar w = (1.0 - f.Q(i + 1)) * (1.0 - ss * f.Q(i + d + 2));
        const CScalar z = (1.0 - f.Q(i - d + 1)) * (1.0 - ss * f.Q(i + 2));
        // A-bold C_i^-
        if (i >= 1) {
            m(cm - 2, cm) = a * x * f.U(i) / (f.D(2 * i) * f.D(2 * i + 1));
            m(cm - 1, cm) = a * x / f.D(2 * i + 1) * (f.U(i) / f.D(2 * i) - f.U(i + 1) / f.D(2 * i + 2));
        }
        m(cm, cm) = (a + 1.0 / a) - a * (y * f.V(i + 1) / (sqd * f.D(2 * i + 1) * f.D(2 * i + 2)) +
                                         x * f.U(i + 1) / (f.D(2 * i + 1) * f.D(2 * i + 2)));
        m(cp, cm) = a * f.V(i + 1) / (sqd * f.D(2 * i + 2)) * (w / f.D(2 * i + 3) - y / f.D(2 * i + 1));
        if (i + 1 <= d - 1) m(cm + 2, cm) = a * w * f.V(i + 1) / (sqd * f.D(2 * i + 2) * f.D(2 * i + 3));
        // A-bold C_i^+
        if (i >= 1) m(cm - 1, cp) = a * x * f.U(i + 1) / (f.D(2 * i + 1) * f.D(2 * i + 2));
        m(cm, cp) = a * f.U(i + 1) / f.D(2 * i + 2) * (x / f.D(2 * i + 1) - z / f.D(2 * i + 3));
        m(cp, cp) = (a + 1.0 / a) - a * (w * f.V(i + 1) / (sqd * f.D(2 * i + 2) * f.D(2 * i + 3)) +
                                         z * f.U(i + 1) / (f.D(2 * i + 2) * f.D(2 * i + 3)));
        if (i + 1 <= d - 1) {
            m(cm + 2, cp) = a * w / (sqd * f.D(2 * i + 3)) * (f.V(i + 2) / f.D(2 * i + 4) - f.V(i + 1) / f.D(2 * i + 2));
            m(cp + 2, cp) = a * w * f.V(i + 2) / (sqd * f.D(2 * i + 3) * f.D(2 * i + 4));
        }
    }
    return m;
}

CMatrix t0_normalized_from_table(const QRacahParams &p) {
    const int d = p.d;
    Forms f{p};
    const CScalar g = p.r1 * p.r2 - p.sstar;
    CMatrix m(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        const CScalar cm = f.V(i + 1) / (g * f.D(2 * i + 2));
        const CScalar cp = p.sstar * f.U(i + 1) / (-g * f.D(2 * i + 2));
        for (int r : {2 * i, 2 * i + 1}) {
            m(r, 2 * i) = cm;
            m(r, 2 * i + 1) = cp;
        }
    }
    return m;
}

CMatrix t1_normalized_from_table(const QRacahParams &p) {
    const int d = p.d;
    Forms f{p};
    CMatrix m(2 * d, 2 * d);
    m(0, 0) = 1.0;
    m(2 * d - 1, 2 * d - 1) = 1.0;
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar on_minus =
            f.Q(d) * (1.0 - f.Q(i - d)) * (1.0 - p.sstar * f.Q(i + 1)) / ((f.Q(d) - 1.0) * f.D(2 * i + 1));
        const CScalar on_plus =
            (1.0 - f.Q(i)) * (1.0 - p.sstar * f.Q(i + d + 1)) / ((1.0 - f.Q(d)) * f.D(2 * i + 1));
        for (int r : {2 * i - 1, 2 * i}) {
            m(r, 2 * i) = on_minus;     // column C_i^-
            m(r, 2 * i - 1) = on_plus;  // column C_{i-1}^+
        }
    }
    return m;
}

std::vector<Check> verify_action_tables(const DahaRep &rep, const QRacahParams &p, Tolerance tol) {
    std::vector<Check> out;
    const int d = p.d;
    const std::size_t n = 2 * d;
    Forms f{p};

    out.push_back({"Y matches its coefficient table", approx_eq(rep.Y, y_matrix_from_table(p), tol)});
    out.push_back({"Y^-1 matches its coefficient table", approx_eq(rep.Yinv, y_inverse_from_table(p), tol)});
    out.push_back({"A-bold matches its coefficient table", approx_eq(rep.Abold, a_bold_from_table(p), tol)});

    // Y is exactly zero outside block row i x columns 2i-1 .. 2i+2.
    double stray = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const int lo = 2 * static_cast<int>(r / 2) - 1, hi = lo + 3;
            if (static_cast<int>(c) < lo || static_cast<int>(c) > hi) stray = std::max(stray, std::abs(rep.Y(r, c)));
        }
    Comparison band;
    band.ok = stray == 0.0;
    band.residual = stray;
    band.scale = norm_inf(rep.Y);
    out.push_back({"Y band pattern", band});

    std::vector<CScalar> xdiag, bdiag, bdag_diag, t12diag, beig, bdag_eig;
    const CScalar w = p.sstar_half * p.q_half;  // sqrt(s* q)
    for (int i = 0; i < d; ++i) {
        const CScalar e = f.Q(i + 1) * p.sstar_half;
        xdiag.insert(xdiag.end(), {1.0 / e, e});
        bdiag.insert(bdiag.end(), {1.0 / e + e, 1.0 / e + e});
        beig.push_back(1.0 / e + e);
        const CScalar em = f.Q(i) * w, ep = f.Q(i + 1) * w;
        bdag_diag.insert(bdag_diag.end(), {1.0 / em + em, 1.0 / ep + ep});
        bdag_eig.push_back(1.0 / em + em);
    }
    t12diag.push_back(w);
    for (int i = 1; i <= d - 1; ++i) {
        const CScalar e = f.Q(i) * w;
        t12diag.insert(t12diag.end(), {1.0 / e, e});
    }
    t12diag.push_back(1.0 / (f.Q(d) * w));

    out.push_back({"X = T3 T0 diagonal form", approx_eq(rep.X, CMatrix::diagonal(xdiag), tol)});
    out.push_back({"T1 T2 diagonal form", approx_eq(rep.T[1] * rep.T[2], CMatrix::diagonal(t12diag), tol)});
    out.push_back({"X multiplicity-free", distinctness(xdiag, tol)});
    out.push_back({"T1 T2 multiplicity-free", distinctness(t12diag, tol)});
    out.push_back({"B-bold diagonal eigenvalues", approx_eq(rep.Bbold, CMatrix::diagonal(bdiag), tol)});
    out.push_back({"B-dagger diagonal eigenvalues", approx_eq(rep.Bdag, CMatrix::diagonal(bdag_diag), tol)});
    out.push_back({"B-bold eigenvalues mutually distinct", distinctness(beig, tol)});
    out.push_back({"B-dagger eigenvalues mutually distinct", distinctness(bdag_eig, tol)});

    const CMatrix I = CMatrix::identity(n);
    const CScalar k0 = rep.k[0], k1 = rep.k[1];
    out.push_back({"(T0 - 1/k0)/(k0 - 1/k0) matches its table",
                   approx_eq((1.0 / (k0 - 1.0 / k0)) * (rep.T[0] - (1.0 / k0) * I), t0_normalized_from_table(p), tol)});
    out.push_back({"(T1 - 1/k1)/(k1 - 1/k1) matches its table",
                   approx_eq((1.0 / (k1 - 1.0 / k1)) * (rep.T[1] - (1.0 / k1) * I), t1_normalized_from_table(p), tol)});
    return out;
}

std::vector<Check> verify_main_theorem(const DahaRep &rep, const ModuleInputs &in, const ModuleRep &mod,
                                       Tolerance tol) {
    std::vector<Check> out;
    const QRacahParams &p = in.p;
    const std::size_t n = 2 * p.d;
    const CMatrix I = CMatrix::identity(n);
    const CScalar q = p.q, h = in.h, hs = in.hstar, ht = in.cs.tilde_h_star;
    const CScalar st = p.sstar * q;  // tilde s*

    // Fixed branches: sqrt(s q) = s_half q_half, sqrt(s* q) = sstar_half q_half,
    // sqrt(tilde s* q) = sqrt(s* q^2) = sstar_half q.
    const CScalar sq_sq = p.s_half * p.q_half;
    const CScalar sq_ssq = p.sstar_half * p.q_half;
    const CScalar sq_stq = p.sstar_half * q;

    const CMatrix &A = mod.M(OperatorId::A, BasisId::C);
    const CMatrix &As = mod.M(OperatorId::Astar, BasisId::C);
    const CMatrix &Ats = mod.M(OperatorId::AstarTilde, BasisId::C);
    const CScalar th0 = in.pa.theta[0], ths0 = in.pa.theta_star[0], tts0 = in.cs.tilde_theta_star[0];

    out.push_back({"A-bold = (A - (theta0 - h - h s q)) / (h sqrt(s q))",
                   approx_eq(rep.Abold, (1.0 / (h * sq_sq)) * (A - (th0 - h - h * p.s * q) * I), tol)});
    out.push_back({"B-bold = (tilde A* - (tilde theta*0 - tilde h* - tilde h* tilde s* q)) / (tilde h* sqrt(tilde s* q))",
                   approx_eq(rep.Bbold, (1.0 / (ht * sq_stq)) * (Ats - (tts0 - ht - ht * st * q) * I), tol)});
    out.push_back({"B-dagger = (A* - (theta*0 - h* - h* s* q)) / (h* sqrt(s* q))",
                   approx_eq(rep.Bdag, (1.0 / (hs * sq_ssq)) * (As - (ths0 - hs - hs * p.sstar * q) * I), tol)});
    const CScalar k0 = rep.k[0], k1 = rep.k[1];
    out.push_back({"(T0 - 1/k0)/(k0 - 1/k0) = tilde p",
                   approx_eq((1.0 / (k0 - 1.0 / k0)) * (rep.T[0] - (1.0 / k0) * I), mod.M(OperatorId::Ptilde, BasisId::C),
                             tol)});
    out.push_back({"(T1 - 1/k1)/(k1 - 1/k1) = p",
                   approx_eq((1.0 / (k1 - 1.0 / k1)) * (rep.T[1] - (1.0 / k1) * I), mod.M(OperatorId::P, BasisId::C),
                             tol)});
    return out;
}

CommutantResult commutant(const std::vector<CMatrix> &family, double threshold) {
    if (family.empty()) throw DimensionError("commutant: empty family");
    const Eigen::Index n = static_cast<Eigen::Index>(family.front().rows());
    const Eigen::Index n2 = n * n;
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(n2 * static_cast<Eigen::Index>(family.size()), n2);
    for (std::size_t k = 0; k < family.size(); ++k) {
        const CMatrix &m = family[k];
        if (static_cast<Eigen::Index>(m.rows()) != n || !m.square()) throw DimensionError("commutant: shape mismatch");
        const double s = norm_inf(m) > 0.0 ? 1.0 / norm_inf(m) : 1.0;
        // Row (i, j) of MX - XM, unknown X(a, b) at column a * n + b.
        const Eigen::Index base = static_cast<Eigen::Index>(k) * n2;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) {
                const Eigen::Index row = base + i * n + j;
                for (Eigen::Index a = 0; a < n; ++a) {
                    S(row, a * n + j) += s * m(i, a);  // (M X)_{ij} = sum_a M_ia X_aj
                    S(row, i * n + a) -= s * m(a, j);  // (X M)_{ij} = sum_a X_ia M_aj
                }
            }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(S);
    const auto &sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    CommutantResult r;
    if (smax == 0.0) {
        r.dimension = static_cast<int>(n2);
        return r;
    }
    r.sigma_kept = 1.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        const double rel = sv(k) / smax;
        if (rel > threshold * 10.0) {
            r.sigma_kept = rel;
            continue;
        }
        if (rel >= threshold / 10.0)
            throw AmbiguousRankError("commutant: singular value ratio " + std::to_string(rel) +
                                         " too close to the threshold",
                                     rel);
        if (r.sigma_null == 0.0) r.sigma_null = rel;
    }
    r.dimension = static_cast<int>(std::count_if(sv.data(), sv.data() + sv.size(),
                                                 [&](double x) { return x / smax < threshold; }));
    return r;
}

int commutant_dimension(const std::vector<CMatrix> &family, double threshold) {
    return commutant(family, threshold).dimension;
}

}  // namespace ldaha
