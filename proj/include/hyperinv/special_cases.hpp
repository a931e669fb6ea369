#pragma once

#include <utility>

#include "hyperinv/tensor.hpp"

namespace hyperinv {

/// Explicit 8-term determinant of a rank-4, d=2 hypermatrix.
double det_rank4_d2(const HyperMatrix& A);

/// G1111 G2222 - 4 G1112 G1222 + 3 G1122^2 for symmetric G (d=2).
double c2_sym_rank4_d2(const HyperMatrix& G);

/// (C1, C2) of a rank-3, d=2 hypermatrix, evaluated in the symmetrized
/// written form: C2 = a000 a111 - (a001 a110 + a010 a101 + a100 a011)/3.
std::pair<double, double> thirdrank_discriminants_d2(const HyperMatrix& a);

struct PseudoInverseResult {
  HyperMatrix inverse;
  double defect;  // max |a^{ik1k2} a_{jk1k2} - delta^i_j|; generically nonzero
};

/// a^{ijk} = (1/C2) dC2/da_{ijk} for symmetric a, d=2.  Contracts to 1 on
/// the diagonal but fails off it: C2 lacks the defining inverse property.
PseudoInverseResult thirdrank_pseudo_inverse(const HyperMatrix& a);

/// Quartic determinant of a symmetric rank-3, d=2 hypermatrix:
/// (1/18)[a000^2 a111^2 - 6 a000 a001 a011 a111 + 4 a000 a011^3
///        + 4 a111 a001^3 - 3 a001^2 a011^2].
double thirdrank_det_d2(const HyperMatrix& a);

/// True inverse for symmetric rank-3 d=2: a^{ijk} = (1/(2a)) da/da_{ijk},
/// the formal gradient over the full array (replicated symmetric storage
/// supplies the 1/3 slot multiplicities).  The 1/2 factor is forced by
/// Euler's identity on the degree-4 determinant.
HyperMatrix thirdrank_inverse_d2(const HyperMatrix& a);

/// Odd-rank epsilon contraction with d copies of A (no prefactor).
/// Identically zero; exists as a verification probe.
double odd_rank_epsilon_det(const HyperMatrix& a);

/// Even-rank epsilon-route determinant: (1/d!) epsilon^r contraction with
/// d copies of A.
double epsilon_det(const HyperMatrix& A);

/// Cayley's 2x2x2 hyperdeterminant (12-term quartic), general a.
double cayley_hyperdet(const HyperMatrix& a);

struct GMatrixResult {
  HyperMatrix g;  // rank-2, covariant
  double det_g;   // = -cayley_hyperdet(a)
};

/// g_{ij} = a_{i k1 k2} a_{j l1 l2} eps^{k1 l1} eps^{k2 l2}.
GMatrixResult g_matrix(const HyperMatrix& a);

/// Sixth-rank embedding of a rank-3, d=2 tensor: the symmetrized pairwise
/// product over the four slot pairings (none, k-swap, j-swap, i-swap)/4.
HyperMatrix sixth_rank_embed(const HyperMatrix& a);

/// (1/2) epsilon^6 contraction of two copies of a rank-6, d=2 tensor.
double sixth_rank_det_d2(const HyperMatrix& A6);

}  // namespace hyperinv
