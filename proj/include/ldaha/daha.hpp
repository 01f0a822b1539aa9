#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "ldaha/module_w.hpp"
#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

// Matrices of the universal DAHA generators t_0..t_3 and the derived elements
// relative to the basis C of W. Every square root is assembled from the fixed
// branches in QRacahParams, e.g. sqrt(s* r1 r2) = sstar_half * r1_half * r2_half.
struct DahaRep {
    std::array<CScalar, 4> k;
    std::array<CMatrix, 4> T, Tinv;  // Tinv assembled from block_inverse
    CMatrix X, Xinv, Y, Yinv;
    CMatrix Abold, Bbold, Bdag;
};

// k0 = sqrt(r1 r2 / s*), k1 = q^{-d/2}, k2 = sqrt(s* q^{d+1}), k3 = sqrt(r2 / r1).
std::array<CScalar, 4> k_constants(const QRacahParams &p);

// t_n(i): 2x2 for n in {0,3}, 0 <= i <= d-1 and for n in {1,2}, 1 <= i <= d-1;
// 1x1 for n in {1,2}, i in {0,d}. Throws std::out_of_range otherwise.
CMatrix t_block(const QRacahParams &p, int n, int i);

// 1/x for a 1x1 block; the adjugate for a 2x2 block, which is its inverse
// because every t_n(i) has determinant 1. T * T^{-1} = I then tests exactly
// that, without a rounded determinant amplifying the entries' error.
CMatrix block_inverse(const CMatrix &b);

// T_0, T_3 carry their blocks on (C_i-, C_i+); T_1, T_2 on C_0-, then
// (C_{i-1}+, C_i-) for 1 <= i <= d-1, then C_{d-1}+.
DahaRep assemble(const QRacahParams &p);

// Blockwise and dense inverses agree, t_n + t_n^{-1} = (k_n + 1/k_n) I, t_0 t_1 t_2 t_3 = q^{-1/2} I,
// centrality of every t_n + t_n^{-1}, and the commutations A t_0, B t_0,
// A t_1, B-dagger t_1, B B-dagger.
std::vector<Check> verify_daha_relations(const DahaRep &rep, const QRacahParams &p, Tolerance tol = {});

// det = 1 and trace = k_n + 1/k_n for every 2x2 block, t + 1/t = k_n + 1/k_n for
// the 1x1 blocks, and the blockwise products t_3(i) t_0(i), t_1(i) t_2(i).
std::vector<Check> verify_blocks(const QRacahParams &p, Tolerance tol = {});

// Each coefficient table for Y, Y^{-1}, A-bold, the eigenvalues of B and
// B-dagger, the diagonal forms of X and T_1 T_2, and the two normalized
// generators, rebuilt from the closed forms and compared entrywise.
std::vector<Check> verify_action_tables(const DahaRep &rep, const QRacahParams &p, Tolerance tol = {});

// The five correspondences between DAHA elements and T-elements on W.
std::vector<Check> verify_main_theorem(const DahaRep &rep, const ModuleInputs &in, const ModuleRep &mod,
                                       Tolerance tol = {});

// Matrices built from the coefficient tables alone (basis C).
CMatrix y_matrix_from_table(const QRacahParams &p);
CMatrix y_inverse_from_table(const QRacahParams &p);
CMatrix a_bold_from_table(const QRacahParams &p);
CMatrix t0_normalized_from_table(const QRacahParams &p);
CMatrix t1_normalized_from_table(const QRacahParams &p);

class AmbiguousRankError : public std::runtime_error {
  public:
    AmbiguousRankError(const std::string &msg, double ratio) : std::runtime_error(msg), sigma_ratio(ratio) {}
    double sigma_ratio;  // the singular value (over the largest) that fell in the gray zone
};

struct CommutantResult {
    int dimension = 0;
    double sigma_kept = 0.0;    // smallest singular value above the threshold, over the largest
    double sigma_null = 0.0;    // largest singular value below the threshold, over the largest
};

// Dimension of {X : MX = XM for all M in the family}: the nullity of the
// stacked Sylvester operators, each M scaled to unit max entry first. Singular
// values below threshold * sigma_max count as zero; one landing within a factor
// of 10 of the threshold on either side makes the decision ambiguous.
CommutantResult commutant(const std::vector<CMatrix> &family, double threshold = 1e-7);
int commutant_dimension(const std::vector<CMatrix> &family, double threshold = 1e-7);

}  // namespace ldaha
