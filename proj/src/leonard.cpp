#include "ldaha/leonard.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_complex.hpp>

namespace ldaha {

QRacahData primary_qracah_data(const QRacahParams &p, CScalar h, CScalar hstar) {
    return {p.d, p.q, h, hstar, p.s, p.sstar, p.r1, p.r2, p.theta0, p.theta0star};
}

ParameterArray qracah_parameter_array(const QRacahData &t) {
    ParameterArray pa;
    pa.diam = t.diam;
    const int D = t.diam;
    const CScalar q = t.q;
    for (int i = 0; i <= D; ++i) {
        const CScalar qi = ipow(q, i);
        pa.theta.push_back(t.theta0 + t.h * (1.0 - qi) * (1.0 - t.s * qi * q) / qi);
        pa.theta_star.push_back(t.theta0star + t.hstar * (1.0 - qi) * (1.0 - t.sstar * qi * q) / qi);
    }
    for (int i = 1; i <= D; ++i) {
        const CScalar qi = ipow(q, i);
        const CScalar common = t.h * t.hstar * ipow(q, 1 - 2 * i) * (1.0 - qi) * (1.0 - ipow(q, i - D - 1));
        pa.varphi.push_back(common * (1.0 - t.r1 * qi) * (1.0 - t.r2 * qi));
        pa.phi.push_back(common * (t.r1 - t.sstar * qi) * (t.r2 - t.sstar * qi) / t.sstar);
    }
    return pa;
}

ParameterArray primary_parameter_array(const QRacahParams &p, CScalar h, CScalar hstar) {
    return qracah_parameter_array(primary_qracah_data(p, h, hstar));
}

double PAReport::max_identity_residual() const {
    double m = 0.0;
    for (const auto &c : conditions)
        if (c.name == "PA3" || c.name == "PA4" || c.name == "PA5")
            m = std::max(m, c.residual);
    return m;
}

namespace {

double max_abs(const std::vector<CScalar> &v) {
    double m = 0.0;
    for (auto x : v)
        m = std::max(m, std::abs(x));
    return m;
}

// Smallest pairwise separation relative to the sequence scale.
double min_relative_separation(const std::vector<CScalar> &v) {
    const double scale = std::max(max_abs(v), 1e-300);
    double m = INFINITY;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            m = std::min(m, std::abs(v[i] - v[j]) / scale);
    return m;
}

double relative_gap(CScalar lhs, CScalar rhs, std::initializer_list<CScalar> terms) {
    double scale = std::abs(lhs);
    for (auto t : terms)
        scale = std::max(scale, std::abs(t));
    if (scale == 0.0)
        return 0.0;
    return std::abs(lhs - rhs) / scale;
}

}  // namespace

PAReport check_PA(const ParameterArray &pa, Tolerance tol) {
    PAReport rep;
    const int d = pa.diam;
    const auto &th = pa.theta;
    const auto &ts = pa.theta_star;
    auto varphi = [&](int i) { return pa.varphi[i - 1]; };
    auto phi = [&](int i) { return pa.phi[i - 1]; };

    const double sep = std::min(min_relative_separation(th), min_relative_separation(ts));
    rep.conditions.push_back({"PA1", sep > tol.rel, sep});

    const double scale_split = std::max({max_abs(pa.varphi), max_abs(pa.phi), 1e-300});
    double smallest = INFINITY;
    for (int i = 1; i <= d; ++i)
        smallest = std::min({smallest, std::abs(varphi(i)) / scale_split, std::abs(phi(i)) / scale_split});
    rep.conditions.push_back({"PA2", smallest > tol.rel, smallest});

    double r3 = 0.0, r4 = 0.0;
    CScalar partial = 0.0;
    for (int i = 1; i <= d; ++i) {
        partial += (th[i - 1] - th[d - i + 1]) / (th[0] - th[d]);
        const CScalar t3a = phi(1) * partial;
        const CScalar t3b = (ts[i] - ts[0]) * (th[i - 1] - th[d]);
        r3 = std::max(r3, relative_gap(varphi(i), t3a + t3b, {t3a, t3b}));
        const CScalar t4a = varphi(1) * partial;
        const CScalar t4b = (ts[i] - ts[0]) * (th[d - i + 1] - th[0]);
        r4 = std::max(r4, relative_gap(phi(i), t4a + t4b, {t4a, t4b}));
    }
    rep.conditions.push_back({"PA3", r3 <= tol.rel, r3});
    rep.conditions.push_back({"PA4", r4 <= tol.rel, r4});

    std::vector<CScalar> ratios;
    for (int i = 2; i <= d - 1; ++i) {
        ratios.push_back((th[i - 2] - th[i + 1]) / (th[i - 1] - th[i]));
        ratios.push_back((ts[i - 2] - ts[i + 1]) / (ts[i - 1] - ts[i]));
    }
    double r5 = 0.0;
    for (std::size_t k = 1; k < ratios.size(); ++k)
        r5 = std::max(r5, relative_gap(ratios[k], ratios[0], {ratios[0]}));
    rep.conditions.push_back({"PA5", r5 <= tol.rel, r5});

    rep.passed = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                             [](const PACondition &c) { return c.ok; });
    return rep;
}

namespace {

// b_i and c_i of a Leonard system from its parameter array; `x` plays the role
// of theta* (for the primary numbers) or theta (for the duals).
TridiagonalCoeffs intersection_from(const std::vector<CScalar> &x, const std::vector<CScalar> &y,
                                    const std::vector<CScalar> &varphi,
                                    const std::vector<CScalar> &c_split) {
    const int d = int(x.size()) - 1;
    TridiagonalCoeffs r;
    r.a.assign(d + 1, 0.0);
    r.b.assign(d + 1, 0.0);
    r.c.assign(d + 1, 0.0);
    for (int i = 0; i <= d - 1; ++i) {
        CScalar num = 1.0, den = 1.0;
        for (int k = 0; k <= i - 1; ++k)
            num *= x[i] - x[k];
        for (int k = 0; k <= i; ++k)
            den *= x[i + 1] - x[k];
        r.b[i] = varphi[i] * safe_div(num, den, "b_i");
    }
    for (int i = 1; i <= d; ++i) {
        CScalar num = 1.0, den = 1.0;
        for (int k = d; k >= i + 1; --k)
            num *= x[i] - x[k];
        for (int k = d; k >= i; --k)
            den *= x[i - 1] - x[k];
        r.c[i] = c_split[i - 1] * safe_div(num, den, "c_i");
    }
    // Three-case formula for a_i.
    r.a[0] = y[0] + safe_div(varphi[0], x[0] - x[1], "a_0");
    for (int i = 1; i <= d - 1; ++i)
        r.a[i] = y[i] + safe_div(varphi[i - 1], x[i] - x[i - 1], "a_i") +
                 safe_div(varphi[i], x[i] - x[i + 1], "a_i");
    r.a[d] = y[d] + safe_div(varphi[d - 1], x[d] - x[d - 1], "a_d");
    return r;
}

}  // namespace

TridiagonalCoeffs intersection_numbers(const ParameterArray &pa) {
    return intersection_from(pa.theta_star, pa.theta, pa.varphi, pa.phi);
}

TridiagonalCoeffs dual_intersection_numbers(const ParameterArray &pa) {
    // c*_i carries phi_{d-i+1}.
    std::vector<CScalar> reversed(pa.phi.rbegin(), pa.phi.rend());
    return intersection_from(pa.theta, pa.theta_star, pa.varphi, reversed);
}

namespace {

TridiagonalCoeffs closed_form_b_c(int D, CScalar q, CScalar h, CScalar ss, CScalar r1, CScalar r2,
                                  CScalar row_sum) {
    TridiagonalCoeffs t;
    t.a.assign(D + 1, 0.0);
    t.b.assign(D + 1, 0.0);
    t.c.assign(D + 1, 0.0);
    t.b[0] = safe_div(h * (1.0 - ipow(q, -D)) * (1.0 - r1 * q) * (1.0 - r2 * q), 1.0 - ss * q * q, "b_0");
    for (int i = 1; i <= D - 1; ++i) {
        const CScalar qi = ipow(q, i);
        t.b[i] = safe_div(h * (1.0 - ipow(q, i - D)) * (1.0 - ss * qi * q) * (1.0 - r1 * qi * q) *
                              (1.0 - r2 * qi * q),
                          (1.0 - ss * ipow(q, 2 * i + 1)) * (1.0 - ss * ipow(q, 2 * i + 2)), "b_i");
        t.c[i] = safe_div(h * (1.0 - qi) * (1.0 - ss * ipow(q, i + D + 1)) * (r1 - ss * qi) * (r2 - ss * qi),
                          ss * ipow(q, D) * (1.0 - ss * ipow(q, 2 * i)) * (1.0 - ss * ipow(q, 2 * i + 1)),
                          "c_i");
    }
    const CScalar qD = ipow(q, D);
    t.c[D] = safe_div(h * (1.0 - qD) * (r1 - ss * qD) * (r2 - ss * qD), ss * qD * (1.0 - ss * ipow(q, 2 * D)),
                      "c_d");
    for (int i = 0; i <= D; ++i)
        t.a[i] = row_sum - t.b[i] - t.c[i];
    return t;
}

}  // namespace

TridiagonalCoeffs qracah_b_c(const QRacahData &t) {
    return closed_form_b_c(t.diam, t.q, t.h, t.sstar, t.r1, t.r2, t.theta0);
}

TridiagonalCoeffs qracah_dual_b_c(const QRacahData &t) {
    return closed_form_b_c(t.diam, t.q, t.hstar, t.s, t.r1, t.r2, t.theta0star);
}

std::pair<CMatrix, CMatrix> split_form(const ParameterArray &pa) {
    const std::size_t n = pa.diam + 1;
    CMatrix a(n, n), as(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = pa.theta[i];
        as(i, i) = pa.theta_star[i];
        if (i + 1 < n) {
            a(i + 1, i) = 1.0;
            as(i, i + 1) = pa.varphi[i];
        }
    }
    return {a, as};
}

namespace {

using Wide = boost::multiprecision::cpp_complex_100;

Wide widen(CScalar z) { return Wide(z.real(), z.imag()); }

CScalar narrow(const Wide &z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

template <class T>
T wide_pow(const T &x, int n) {
    T r = 1;
    const T base = n < 0 ? T(1) / x : x;
    for (int k = 0; k < std::abs(n); ++k)
        r *= base;
    return r;
}

// Defining sum of u_i with the nested products built incrementally.
template <class T>
T u_sum(const std::vector<T> &theta, const std::vector<T> &theta_star, const std::vector<T> &varphi, int i,
        const T &x) {
    T sum = 1, term = 1;
    for (int n = 1; n <= i; ++n) {
        term *= (theta_star[i] - theta_star[n - 1]) * (x - theta[n - 1]) / varphi[n - 1];
        sum += term;
    }
    return sum;
}

template <class T>
T wide_qpoch(const T &a, const T &q, int n) {
    T r = 1, f = a;
    for (int k = 0; k < n; ++k) {
        r *= T(1) - f;
        f *= q;
    }
    return r;
}

struct WideArray {
    std::vector<Wide> theta, theta_star, varphi;
};

WideArray wide_qracah_array(const QRacahData &t) {
    const Wide q = widen(t.q), h = widen(t.h), hs = widen(t.hstar), s = widen(t.s), ss = widen(t.sstar);
    const Wide r1 = widen(t.r1), r2 = widen(t.r2);
    const Wide one = 1;
    WideArray w;
    for (int i = 0; i <= t.diam; ++i) {
        const Wide qi = wide_pow(q, i);
        w.theta.push_back(widen(t.theta0) + h * (one - qi) * (one - s * qi * q) / qi);
        w.theta_star.push_back(widen(t.theta0star) + hs * (one - qi) * (one - ss * qi * q) / qi);
    }
    for (int i = 1; i <= t.diam; ++i) {
        const Wide qi = wide_pow(q, i);
        w.varphi.push_back(h * hs * wide_pow(q, 1 - 2 * i) * (one - qi) * (one - wide_pow(q, i - t.diam - 1)) *
                           (one - r1 * qi) * (one - r2 * qi));
    }
    return w;
}

}  // namespace

CScalar u_poly_eval(const ParameterArray &pa, int i, CScalar x) {
    return u_sum(pa.theta, pa.theta_star, pa.varphi, i, x);
}

std::vector<std::vector<CScalar>> u_table(const QRacahData &t) {
    const WideArray w = wide_qracah_array(t);
    std::vector<std::vector<CScalar>> u(t.diam + 1, std::vector<CScalar>(t.diam + 1));
    for (int i = 0; i <= t.diam; ++i)
        for (int j = 0; j <= t.diam; ++j)
            u[i][j] = narrow(u_sum(w.theta, w.theta_star, w.varphi, i, w.theta[j]));
    return u;
}

CScalar u_qracah(const QRacahData &t, int i, int j) {
    const Wide q = widen(t.q), ss = widen(t.sstar), s = widen(t.s), r1 = widen(t.r1), r2 = widen(t.r2);
    const Wide qmi = wide_pow(q, -i), qmj = wide_pow(q, -j), qmd = wide_pow(q, -t.diam);
    const Wide a2 = ss * wide_pow(q, i + 1), a4 = s * wide_pow(q, j + 1);
    Wide sum = 0;
    for (int n = 0; n <= i; ++n) {
        const Wide num = wide_qpoch(qmi, q, n) * wide_qpoch(a2, q, n) * wide_qpoch(qmj, q, n) *
                         wide_qpoch(a4, q, n) * wide_pow(q, n);
        const Wide den = wide_qpoch(Wide(r1 * q), q, n) * wide_qpoch(Wide(r2 * q), q, n) * wide_qpoch(qmd, q, n) *
                         wide_qpoch(q, q, n);
        sum += num / den;
    }
    return narrow(sum);
}

CScalar u_at_theta_d(const ParameterArray &pa, int i) {
    CScalar r = 1.0;
    for (int k = 0; k < i; ++k)
        r *= pa.phi[k] / pa.varphi[k];
    return r;
}

namespace {

double recurrence_residual(const ParameterArray &pa, const TridiagonalCoeffs &abc,
                           const std::vector<std::vector<CScalar>> &u) {
    const int d = pa.diam;
    double worst = 0.0;
    for (int j = 0; j <= d; ++j) {
        const CScalar x = pa.theta[j];
        for (int i = 0; i <= d; ++i) {
            const CScalar lhs = x * u[i][j];
            const CScalar tc = i > 0 ? abc.c[i] * u[i - 1][j] : CScalar(0.0);
            const CScalar ta = abc.a[i] * u[i][j];
            const CScalar tb = i < d ? abc.b[i] * u[i + 1][j] : CScalar(0.0);
            worst = std::max(worst, relative_gap(lhs, tc + ta + tb, {tc, ta, tb}));
        }
    }
    return worst;
}

}  // namespace

double u_recurrence_residual(const ParameterArray &pa, const TridiagonalCoeffs &abc) {
    const int d = pa.diam;
    std::vector<std::vector<CScalar>> u(d + 1, std::vector<CScalar>(d + 1));
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j)
            u[i][j] = u_poly_eval(pa, i, pa.theta[j]);
    return recurrence_residual(pa, abc, u);
}

double u_recurrence_residual(const ParameterArray &pa) {
    return u_recurrence_residual(pa, intersection_numbers(pa));
}

double u_recurrence_residual(const QRacahData &t) {
    const ParameterArray pa = qracah_parameter_array(t);
    return recurrence_residual(pa, intersection_numbers(pa), u_table(t));
}

}  // namespace ldaha
