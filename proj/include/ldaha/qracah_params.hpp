#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ldaha/numerics.hpp"

namespace ldaha {

// Seed scalars of a q-Racah parameter array together with the square-root
// branches used by every DAHA formula. r2 is never independent: it is fixed
// by r1*r2 = s*sstar*q^{d+1}, and r2_half by the matching root identity.
struct QRacahParams {
    int d = 0;
    CScalar q, s, sstar, r1, r2;
    CScalar theta0, theta0star;
    CScalar q_half, s_half, sstar_half, r1_half, r2_half;
};

struct ConstraintCheck {
    std::string name;
    CScalar value;    // the expression being kept away from 1 (or from 0 for structural rows)
    double distance;  // |value - 1|, or the residual for structural equalities
    bool ok;
};

struct ValidationReport {
    bool passed = true;
    std::vector<ConstraintCheck> checks;
    // First failing check, empty when passed.
    std::string first_failure() const;
};

// Branch with nonnegative real part; +i*sqrt(|x|) on the negative real axis.
CScalar principal_sqrt(CScalar x);

// Picks principal roots of q, s, sstar, r1, then defines r2_half and r2 so that
// r1_half*r2_half == s_half*sstar_half*q_half^{d+1} holds by construction.
QRacahParams fix_square_roots(int d, CScalar q, CScalar s, CScalar sstar, CScalar r1);

QRacahParams make_params(int d, CScalar q, CScalar s, CScalar sstar, CScalar r1,
                         CScalar theta0 = 0.0, CScalar theta0star = 0.0);

// d=4, q=1/2, s=5, s*=3, r1=2/3 (so r2=45/64), theta0=theta0*=0.
QRacahParams desk_point();

// margin = 0 is treated as "distinct to rounding" (1e-12).
ValidationReport validate(const QRacahParams &p, double margin = 0.0, Tolerance tol = {});

CScalar derive_h(const QRacahParams &p);
CScalar derive_hstar(const QRacahParams &p);

// Ranges drawn by sample(): q in (0.3, 0.8); s, sstar in (1.5, 6); r1 in (0.2, 2).
struct SampleRanges {
    double q_lo = 0.3, q_hi = 0.8;
    double s_lo = 1.5, s_hi = 6.0;
    double sstar_lo = 1.5, sstar_hi = 6.0;
    double r1_lo = 0.2, r1_hi = 2.0;
};

// Deterministic rejection sampler; throws std::runtime_error after 1000 rejected draws.
QRacahParams sample(std::uint64_t seed, int d, double margin = 1e-3, const SampleRanges &ranges = {});

}  // namespace ldaha
