#pragma once

#include <string>
#include <vector>

#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

// One measured identity. Groups, in the order run_suite reports them:
//   params        constraint validation of the seed parameters
//   pa            PA1-PA5 for the primary array and the three derived arrays
//   intersection  intersection numbers from the arrays against their q-closed forms, c_1 = 1
//   u             u_i recurrence, u_i(theta_d) product, 4phi3 sum against the defining sum
//   clique        clique scalar consistency
//   counting      edge counts and the xi/epsilon, zeta/tau relations
//   transition    transition matrices against their reverses
//   conjugation   operator representations across every basis pair
//   projection    projection algebra and commutations
//   structure     Gram symmetry, band patterns, printed closed forms
//   spectral      eigenvalue multiplicities of [A]_C, [A*]_C, [tilde A*]_C
//   daha          generator relations
//   blocks        t_n(i) determinants, traces, blockwise products
//   action        coefficient tables of the derived DAHA elements
//   main          the five correspondences between DAHA and T-elements on W
//   commutant     commutant dimension of the operator and generator families
struct SuiteCheck {
    std::string group;
    std::string name;
    bool ok = false;
    // Relative residual. Distinctness conditions (PA1, PA2, parameter
    // constraints) pass or fail outright and report 0; spectral checks report
    // the number of unmatched eigenvalues; commutant checks report the largest
    // discarded singular value over the largest one.
    double residual = 0.0;
};

struct SuiteOptions {
    Tolerance tol{};
    // Tolerance for the u_i recurrence, whose residual is scaled per row rather
    // than per matrix.
    double recurrence_tol = 1e-8;
    bool commutant = true;
};

// Runs every check on one parameter set. If validation fails only the params
// group is returned. Never throws for a valid parameter set; an exception from
// a construction is reported as a failing check in the group that raised it.
std::vector<SuiteCheck> run_suite(const QRacahParams &p, const SuiteOptions &opt = {});

bool all_ok(const std::vector<SuiteCheck> &checks);

}  // namespace ldaha
