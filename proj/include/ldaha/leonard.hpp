#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

// Sequences are 0-based: varphi[k] holds varphi_{k+1} and phi[k] holds phi_{k+1}.
struct ParameterArray {
    int diam = 0;
    std::vector<CScalar> theta;       // diam + 1
    std::vector<CScalar> theta_star;  // diam + 1
    std::vector<CScalar> varphi;      // diam
    std::vector<CScalar> phi;         // diam
};

// Scalars feeding the q-Racah closed forms for theta, theta*, varphi, phi.
// The primary array uses the seed parameters directly; the three derived
// arrays substitute shifted values (see clique.hpp).
struct QRacahData {
    int diam = 0;
    CScalar q, h, hstar, s, sstar, r1, r2, theta0, theta0star;
};

QRacahData primary_qracah_data(const QRacahParams &p, CScalar h, CScalar hstar);

ParameterArray qracah_parameter_array(const QRacahData &t);
ParameterArray primary_parameter_array(const QRacahParams &p, CScalar h, CScalar hstar);

struct PACondition {
    std::string name;
    bool ok = false;
    double residual = 0.0;  // relative; for PA1/PA2 the smallest relative separation
};

struct PAReport {
    bool passed = false;
    std::vector<PACondition> conditions;  // PA1..PA5 in order
    // Largest relative residual among the identity conditions PA3, PA4, PA5.
    double max_identity_residual() const;
};

PAReport check_PA(const ParameterArray &pa, Tolerance tol = {});

// a, b, c each have length diam + 1, with b[diam] = 0 and c[0] = 0.
struct TridiagonalCoeffs {
    std::vector<CScalar> a, b, c;
};

TridiagonalCoeffs intersection_numbers(const ParameterArray &pa);
TridiagonalCoeffs dual_intersection_numbers(const ParameterArray &pa);

// q-closed forms for b_i, c_i (a_i from the row sum theta0).
TridiagonalCoeffs qracah_b_c(const QRacahData &t);
// Same closed forms with (h, s*) replaced by (h*, s); row sum theta0*.
TridiagonalCoeffs qracah_dual_b_c(const QRacahData &t);

// Lower-bidiagonal A (theta on the diagonal, 1 below) and upper-bidiagonal
// A* (theta* on the diagonal, varphi above).
std::pair<CMatrix, CMatrix> split_form(const ParameterArray &pa);

// u_i(x) from its defining sum, in double precision.
CScalar u_poly_eval(const ParameterArray &pa, int i, CScalar x);

// u[i][j] = u_i(theta_j), 0 <= i, j <= diam, from the defining sum evaluated in
// 100-digit arithmetic on the closed forms of the array. The sum cancels
// heavily once the diameter grows (terms exceed the result by 1e30 and more
// at diameter 8), so the double evaluation above loses every digit there.
std::vector<std::vector<CScalar>> u_table(const QRacahData &t);

// u_i(theta_j) as the terminating 4phi3 sum built from q-Pochhammer symbols,
// summed in the same extended precision.
CScalar u_qracah(const QRacahData &t, int i, int j);
// phi_1...phi_i / (varphi_1...varphi_i).
CScalar u_at_theta_d(const ParameterArray &pa, int i);

// Largest relative residual of theta_j u_i(theta_j) = c_i u_{i-1} + a_i u_i + b_i u_{i+1}
// over 0 <= i, j <= diam, each residual scaled by the largest term in its row.
double u_recurrence_residual(const ParameterArray &pa, const TridiagonalCoeffs &abc);
double u_recurrence_residual(const ParameterArray &pa);
// Same residual with u values from u_table and a, b, c from the parameter array.
double u_recurrence_residual(const QRacahData &t);

}  // namespace ldaha
