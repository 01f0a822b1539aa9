#pragma once

#include <vector>

#include "ldaha/leonard.hpp"
#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

// Scalars attached to a Delsarte clique C and the partition {C_i^-, C_i^+}.
//
// The clique formulas are written for a graph, where theta_0 equals the
// valency k = b_0. Here theta_0 is a free parameter, so every graph-level
// quantity is evaluated with k := b_0 and the eigenvalue theta_d replaced by
// theta_d - theta_0 + b_0. The diagonal numbers tilde_a carry the shift back:
// tilde_a_i + tilde_b_i + tilde_c_i = theta_0, so the adjacency action on W is
// theta_0 * I plus a theta_0-free part.
struct CliqueScalars {
    int d = 0;
    CScalar h;
    CScalar k;              // b_0
    CScalar theta_d_graph;  // theta_d - theta_0 + b_0
    std::vector<CScalar> N;                 // N_0..N_{d-1}
    CScalar Csize;                          // |C|
    std::vector<CScalar> tilde_a, tilde_b, tilde_c;  // length d; tilde_c[0] = 0, tilde_b[d-1] = 0
    std::vector<CScalar> tilde_theta_star;  // length d
    CScalar tilde_h_star;
    std::vector<CScalar> eps;   // eps[i-1] = epsilon_i, 1 <= i <= d-1
    std::vector<CScalar> xi;    // xi[i-1] = xi_i, 1 <= i <= d-1
    std::vector<CScalar> tau;   // tau_0..tau_{d-1}
    std::vector<CScalar> zeta;  // zeta_0..zeta_{d-1}
    // 1 - epsilon_i and 1 - tau_i from their factored closed forms; tau_i sits
    // near 1 when s q^{d+1} is near 1, and subtracting there loses digits.
    std::vector<CScalar> one_minus_eps;  // indexed like eps
    std::vector<CScalar> one_minus_tau;  // indexed like tau
    std::vector<CScalar> card_minus, card_plus;  // |C_i^-|, |C_i^+|

    CScalar epsilon(int i) const { return eps.at(i - 1); }
    CScalar xi_at(int i) const { return xi.at(i - 1); }
    CScalar one_minus_epsilon(int i) const { return one_minus_eps.at(i - 1); }
};

CScalar tilde_h_star(const QRacahParams &p, CScalar hstar);
CScalar tilde_theta_star_0(const QRacahParams &p, CScalar hstar);

CliqueScalars compute_clique_scalars(const QRacahParams &p, CScalar h, CScalar hstar, const ParameterArray &pa);

struct DerivedArrays {
    QRacahData tilde, perp, tilde_perp;        // substitution data
    ParameterArray Phi_tilde, Phi_perp, Phi_tilde_perp;
};

// The three q-Racah arrays of diameters d-1, d-2, d-1 obtained by substitution.
DerivedArrays derived_parameter_arrays(const QRacahParams &p, CScalar h, CScalar hstar,
                                       CScalar theta0_tilde_star);

// Identity checks tied to the clique scalars, each reported separately.
// abc = intersection numbers of the primary array.
std::vector<Check> clique_consistency_checks(const QRacahParams &p, const ParameterArray &pa,
                                             const TridiagonalCoeffs &abc, const CliqueScalars &cs,
                                             Tolerance tol = {});
std::vector<Check> counting_identity_checks(const TridiagonalCoeffs &abc, const CliqueScalars &cs,
                                            Tolerance tol = {});
// Six relations pairing Phi-perp intersection numbers with xi, epsilon.
std::vector<Check> xi_eps_relation_checks(const TridiagonalCoeffs &abc, const TridiagonalCoeffs &perp,
                                          const CliqueScalars &cs, Tolerance tol = {});
// Six relations pairing tilde-Phi-perp intersection numbers with zeta, tau.
std::vector<Check> zeta_tau_relation_checks(const TridiagonalCoeffs &abc, const TridiagonalCoeffs &tilde_perp,
                                            const CliqueScalars &cs, Tolerance tol = {});

}  // namespace ldaha
