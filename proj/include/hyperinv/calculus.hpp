#pragma once

#include <span>
#include <vector>

#include "hyperinv/invariant.hpp"
#include "hyperinv/tensor.hpp"

namespace hyperinv {

/// P(lambda) = sum_k (-1)^k c_k lambda^(d-k), c_0 = 1.
struct CharacteristicPolynomial {
  int degree = 0;
  std::vector<double> coefficients;  // c_0..c_d

  double evaluate(double lambda) const;
};

/// Newton-trace values t_1..t_s (rank 2) or T_1..T_s (rank 4); the defining
/// polynomials in the discriminants are identical for both ranks.
struct NewtonTraces {
  std::vector<double> values;
  double at(int s) const { return values.at(static_cast<std::size_t>(s) - 1); }
};

/// Formal-entry gradient d c_s / d A over the full d^r array, computed as
/// the leave-one-factor-out signed tuple sum (contributions of every factor
/// position, prefix/suffix products).  Contravariant output.
HyperMatrix grad_A(const HyperMatrix& A, int s);

/// Formal-entry gradient d c_s / d Delta at the diagonal unit background;
/// covariant output.  Non-unit Delta is rejected (the construction fixes
/// the diagonal unit).
HyperMatrix grad_Delta(const HyperMatrix& A, const HyperMatrix& Delta, int s);
HyperMatrix grad_Delta(const HyperMatrix& A, int s);

/// Coefficients c_0..c_d of a rank-2 matrix via the trace route.
CharacteristicPolynomial char_poly(const HyperMatrix& a);

/// sum_k (-1)^k c_k a^(d-k); identically zero by Cayley-Hamilton.
HyperMatrix ch_residual_rank2(const HyperMatrix& a);

/// (1/c_d) grad_A(a, d); throws SingularError when |c_d| is below
/// 1e-12 * max|entry|^d.
HyperMatrix inverse_rank2(const HyperMatrix& a);

/// Even-rank adjugate: (1/(d-1)!) epsilon^r contraction with d-1 copies of
/// A, free indices in the leading epsilon slots.  Contravariant output.
/// Equals grad_A(A, d) identically.
HyperMatrix adjugate_epsilon(const HyperMatrix& A);

/// adjugate / determinant; satisfies A^{i k...} A_{j k...} = delta^i_j.
HyperMatrix inverse_even_rank(const HyperMatrix& A);

/// t_s as polynomials in c_1..c_4: t1 = c1, t2 = c1^2/2 - c2,
/// t3 = c1^3/3 - c1 c2 + c3, t4 = c1^4/4 - c1^2 c2 + c1 c3 + c2^2/2 - c4.
/// `discriminants` supplies c_1.. (at least s entries); rank is 2 or 4.
NewtonTraces newton_traces(std::span<const double> discriminants, int rank, int s);

/// Rank-4 power tensor (A^s) = d T_s / d Delta, assembled from grad_Delta
/// of C_1..C_s by the chain rule.  Covariant output.  s <= 4.
HyperMatrix power_tensor(const HyperMatrix& A, const HyperMatrix& Delta, int s);
HyperMatrix power_tensor(const HyperMatrix& A, int s);

/// [A^s] = Delta . (A^s)  (full contraction; equals s * T_s).
double bracket_trace(const HyperMatrix& A, const HyperMatrix& Delta, int s);
double bracket_trace(const HyperMatrix& A, int s);

/// sum_k (-1)^k C_k (A^(d-k)) with (A^0) = the covariant diagonal unit.
HyperMatrix ch_residual_rank4(const HyperMatrix& A);

/// Rank-2 matrix product helper (components through the contravariant unit).
HyperMatrix matrix_multiply(const HyperMatrix& a, const HyperMatrix& b);

}  // namespace hyperinv
