#include "ldaha/qracah_params.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ldaha {

std::string ValidationReport::first_failure() const {
    for (const auto &c : checks)
        if (!c.ok)
            return c.name;
    return {};
}

CScalar principal_sqrt(CScalar x) {
    if (x.imag() == 0.0)
        x = CScalar(x.real(), 0.0);  // drop a -0.0 so negative reals map to +i
    return std::sqrt(x);
}

QRacahParams fix_square_roots(int d, CScalar q, CScalar s, CScalar sstar, CScalar r1) {
    if (q == 0.0 || s == 0.0 || sstar == 0.0 || r1 == 0.0)
        throw std::invalid_argument("fix_square_roots: q, s, sstar, r1 must be nonzero");
    QRacahParams p;
    p.d = d;
    p.q = q;
    p.s = s;
    p.sstar = sstar;
    p.r1 = r1;
    p.q_half = principal_sqrt(q);
    p.s_half = principal_sqrt(s);
    p.sstar_half = principal_sqrt(sstar);
    p.r1_half = principal_sqrt(r1);
    p.r2_half = p.s_half * p.sstar_half * ipow(p.q_half, d + 1) / p.r1_half;
    p.r2 = p.r2_half * p.r2_half;
    return p;
}

QRacahParams make_params(int d, CScalar q, CScalar s, CScalar sstar, CScalar r1, CScalar theta0,
                         CScalar theta0star) {
    QRacahParams p = fix_square_roots(d, q, s, sstar, r1);
    p.theta0 = theta0;
    p.theta0star = theta0star;
    return p;
}

QRacahParams desk_point() { return make_params(4, 0.5, 5.0, 3.0, 2.0 / 3.0); }

namespace {

void away_from_one(ValidationReport &rep, const std::string &name, CScalar v, double margin) {
    const double dist = std::abs(v - 1.0);
    rep.checks.push_back({name, v, dist, dist > margin});
}

void equality(ValidationReport &rep, const std::string &name, CScalar lhs, CScalar rhs, Tolerance tol) {
    const Comparison c = approx_eq(lhs, rhs, tol);
    rep.checks.push_back({name, lhs - rhs, c.residual, c.ok});
}

std::string indexed(const char *fmt_prefix, int i, const char *suffix = "") {
    std::ostringstream os;
    os << fmt_prefix << i << suffix;
    return os.str();
}

}  // namespace

ValidationReport validate(const QRacahParams &p, double margin, Tolerance tol) {
    ValidationReport rep;
    const double m = margin > 0.0 ? margin : 1e-12;
    const int d = p.d;

    rep.checks.push_back({"d >= 3", CScalar(d), 0.0, d >= 3});
    for (auto [name, v] : {std::pair<const char *, CScalar>{"q != 0", p.q}, {"s != 0", p.s},
                           {"sstar != 0", p.sstar}, {"r1 != 0", p.r1}, {"r2 != 0", p.r2}}) {
        const double a = std::abs(v);
        rep.checks.push_back({name, v, a, a > m * 1e-3 && std::isfinite(a)});
    }
    if (d < 3 || p.q == 0.0 || p.r1 == 0.0 || p.r2 == 0.0) {
        rep.passed = false;
        return rep;
    }
    away_from_one(rep, "q^2 != 1", p.q * p.q, m);

    equality(rep, "r1*r2 = s*sstar*q^(d+1)", p.r1 * p.r2, p.s * p.sstar * ipow(p.q, d + 1), tol);
    equality(rep, "q_half^2 = q", p.q_half * p.q_half, p.q, tol);
    equality(rep, "s_half^2 = s", p.s_half * p.s_half, p.s, tol);
    equality(rep, "sstar_half^2 = sstar", p.sstar_half * p.sstar_half, p.sstar, tol);
    equality(rep, "r1_half^2 = r1", p.r1_half * p.r1_half, p.r1, tol);
    equality(rep, "r2_half^2 = r2", p.r2_half * p.r2_half, p.r2, tol);
    equality(rep, "r1_half*r2_half = s_half*sstar_half*q_half^(d+1)", p.r1_half * p.r2_half,
             p.s_half * p.sstar_half * ipow(p.q_half, d + 1), tol);

    for (int i = 1; i <= d; ++i) {
        const CScalar qi = ipow(p.q, i);
        away_from_one(rep, indexed("q^", i), qi, m);
        away_from_one(rep, indexed("r1*q^", i), p.r1 * qi, m);
        away_from_one(rep, indexed("r2*q^", i), p.r2 * qi, m);
        away_from_one(rep, indexed("sstar*q^", i, "/r1"), p.sstar * qi / p.r1, m);
        away_from_one(rep, indexed("sstar*q^", i, "/r2"), p.sstar * qi / p.r2, m);
    }
    for (int i = 2; i <= 2 * d; ++i) {
        const CScalar qi = ipow(p.q, i);
        away_from_one(rep, indexed("s*q^", i), p.s * qi, m);
        away_from_one(rep, indexed("sstar*q^", i), p.sstar * qi, m);
    }
    for (const auto &c : rep.checks)
        rep.passed = rep.passed && c.ok;
    return rep;
}

CScalar derive_h(const QRacahParams &p) {
    const CScalar q = p.q, ss = p.sstar;
    const int d = p.d;
    const CScalar num = ss * ipow(q, d) * (1.0 - ss * q * q) * (1.0 - ss * ipow(q, 3));
    const CScalar den = (1.0 - q) * (1.0 - ss * ipow(q, d + 2)) * (p.r1 - ss * q) * (p.r2 - ss * q);
    const CScalar h = safe_div(num, den, "h");
    if (h == 0.0)
        throw DegenerateError("h vanishes");
    return h;
}

CScalar derive_hstar(const QRacahParams &p) {
    const CScalar q = p.q, ss = p.sstar, rr = p.r1 * p.r2;
    const int d = p.d;
    const CScalar num = ipow(q, 2 * d - 1) * (ss - rr * ipow(q, 1 - d)) * (ss - rr * ipow(q, 2 - d));
    const CScalar den = (1.0 - q) * (ss - rr * q) * (p.r1 - ss * ipow(q, d)) * (p.r2 - ss * ipow(q, d));
    const CScalar hs = safe_div(num, den, "h*");
    if (hs == 0.0)
        throw DegenerateError("h* vanishes");
    return hs;
}

QRacahParams sample(std::uint64_t seed, int d, double margin, const SampleRanges &ranges) {
    if (d < 3)
        throw std::invalid_argument("sample: d must be at least 3");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uq(ranges.q_lo, ranges.q_hi);
    std::uniform_real_distribution<double> us(ranges.s_lo, ranges.s_hi);
    std::uniform_real_distribution<double> uss(ranges.sstar_lo, ranges.sstar_hi);
    std::uniform_real_distribution<double> ur(ranges.r1_lo, ranges.r1_hi);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double q = uq(rng), s = us(rng), ss = uss(rng), r1 = ur(rng);
        QRacahParams p = make_params(d, q, s, ss, r1);
        if (validate(p, margin).passed)
            return p;
    }
    throw std::runtime_error("sample: retry budget exhausted");
}

}  // namespace ldaha
