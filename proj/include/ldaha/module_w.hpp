#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ldaha/clique.hpp"
#include "ldaha/leonard.hpp"
#include "ldaha/numerics.hpp"
#include "ldaha/qracah_params.hpp"

namespace ldaha {

// Vector orders (0-based positions, D = d):
//   C          : C0-, C0+, C1-, C1+, ..., C(d-1)-, C(d-1)+      (Ci- at 2i, Ci+ at 2i+1)
//   B          : v0..vd, vperp0..vperp(d-2)
//   Balt       : v0, v1, vperp0, v2, vperp1, ..., v(d-1), vperp(d-2), vd
//   Btilde     : vt0..vt(d-1), vtperp0..vtperp(d-1)
//   BtildeAlt  : vt0, vtperp0, vt1, vtperp1, ...
enum class BasisId { C, B, Balt, Btilde, BtildeAlt };
enum class OperatorId { A, Astar, AstarTilde, P, Ptilde };

inline constexpr std::array<BasisId, 5> kAllBases{BasisId::C, BasisId::B, BasisId::Balt, BasisId::Btilde,
                                                 BasisId::BtildeAlt};
inline constexpr std::array<OperatorId, 5> kAllOperators{OperatorId::A, OperatorId::Astar, OperatorId::AstarTilde,
                                                        OperatorId::P, OperatorId::Ptilde};

std::string to_string(BasisId b);
std::string to_string(OperatorId op);
std::optional<BasisId> parse_basis(const std::string &s);
std::optional<OperatorId> parse_operator(const std::string &s);

// Everything the 2d-dimensional constructions read, derived once from the seed parameters.
struct ModuleInputs {
    QRacahParams p;
    CScalar h, hstar;
    ParameterArray pa;
    TridiagonalCoeffs abc;         // intersection numbers of the primary array
    TridiagonalCoeffs perp;        // of Phi-perp (diameter d-2)
    TridiagonalCoeffs tilde_perp;  // of tilde-Phi-perp (diameter d-1)
    CliqueScalars cs;
    DerivedArrays derived;
};

ModuleInputs derive_inputs(const QRacahParams &p);

// Column convention: the transition matrix from X to Y has as column j the
// coordinates of the j-th vector of Y in the basis X. Then for any map T,
// [T]_Y = P^{-1} [T]_X P with P the transition matrix from X to Y.
// Adjacent pairs (B-Balt, Balt-C, C-BtildeAlt, BtildeAlt-Btilde) are built
// from their own closed forms in both directions; other pairs are products
// along the path B - Balt - C - BtildeAlt - Btilde.
CMatrix transition_matrix(const ModuleInputs &in, BasisId from, BasisId to);
bool adjacent(BasisId x, BasisId y);

// Built from the displayed formula for the pair; never by conjugation.
CMatrix operator_matrix(const ModuleInputs &in, OperatorId op, BasisId basis);

// [A]_C from the q-explicit coefficient table of A on Ci-, Ci+.
CMatrix a_matrix_C_qexplicit(const ModuleInputs &in);

// Squared norms of the C vectors in C order, Ci- then Ci+:
// |Ci-|^2 = tb_0..tb_{i-1} / (c_1..c_i), |Ci+|^2 = (|C|-1) b_1..b_i / (tc_1..tc_i).
std::vector<CScalar> gram_diagonal(const TridiagonalCoeffs &abc, const CliqueScalars &cs);

struct ModuleRep {
    int dim = 0;
    std::map<std::pair<BasisId, BasisId>, CMatrix> trans;  // all 20 ordered pairs
    std::map<std::pair<OperatorId, BasisId>, CMatrix> rep;  // all 25 combinations
    std::vector<CScalar> gram_C;

    const CMatrix &T(BasisId from, BasisId to) const { return trans.at({from, to}); }
    const CMatrix &M(OperatorId op, BasisId b) const { return rep.at({op, b}); }
};

ModuleRep build_module(const ModuleInputs &in);

// Named identity checks grouped by theme.
std::vector<Check> transition_checks(const ModuleRep &rep, Tolerance tol = {});
// [op]_y = P^{-1} [op]_x P with P = trans(x -> y), checked inverse-free as
// [op]_x P = P [op]_y. Near s q^{d+1} = 1 the projections become very oblique
// and the triple product cancels from terms ~1e9 times larger than its result,
// which double rounding cannot resolve to 1e-9; the two-sided form stays at the
// scale of its own products.
std::vector<Check> conjugation_checks(const ModuleRep &rep, Tolerance tol = {});
std::vector<Check> projection_checks(const ModuleInputs &in, const ModuleRep &rep, Tolerance tol = {});
// Gram symmetry, exact band pattern of [A]_C, the q-explicit A table, and the
// closed forms printed beside the inverse transition blocks and the
// non-diagonal A*, tilde-A* representations.
std::vector<Check> structure_checks(const ModuleInputs &in, const ModuleRep &rep, Tolerance tol = {});

struct SpectralReport {
    std::string name;
    std::vector<int> multiplicity;  // per target eigenvalue
    std::vector<int> expected;
    int unmatched = 0;              // eigenvalues within no cluster
    bool ok = false;
};

// Thrown when two target eigenvalues lie within twice the clustering radius.
class AmbiguousClusterError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Multiplicities of [A]_C, [A*]_C, [tilde A*]_C against theta_i, theta*_i,
// tilde theta*_i; clustering radius 1e-6 times the largest |target|, which for
// the diagonal [A*]_C and [tilde A*]_C is 1e-6 * norm_inf of the matrix.
// [A]_C is far from normal wherever the Gram form on W is indefinite, and its
// eigenvalues then move by up to 1e10 times any rounding of its entries: the
// exact spectrum of the double-rounded matrix misses theta_i by more than
// 1e-6 * norm_inf at some sampled points. Its eigenvalues are therefore taken
// from a_C_eigenvalues_extended; the double [A]_C is tied to the same table by
// structure_checks. Its norm can also exceed the theta spread by 1e6 (h near
// 0), so the radius follows the spectrum rather than the matrix.
std::vector<SpectralReport> spectral_dims(const ModuleInputs &in, const ModuleRep &rep);

// Eigenvalues of the q-explicit [A]_C table evaluated from the seed parameters
// in 50-digit arithmetic, rounded to double at the end.
std::vector<CScalar> a_C_eigenvalues_extended(const QRacahParams &p);
// Counts `eigenvalues` within `radius` of each target. Throws
// AmbiguousClusterError when two targets lie within twice the radius.
SpectralReport count_eigenvalues(const std::string &name, const std::vector<CScalar> &eigenvalues, double radius,
                                 const std::vector<CScalar> &targets, std::vector<int> expected);
// Eigenvalue multiplicities of `m` against `targets`.
SpectralReport count_multiplicities(const std::string &name, const CMatrix &m, const std::vector<CScalar> &targets,
                                    std::vector<int> expected);

}  // namespace ldaha
