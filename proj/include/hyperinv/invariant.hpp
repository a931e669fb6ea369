#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyperinv/combinatorics.hpp"
#include "hyperinv/tensor.hpp"

namespace hyperinv {

/// Contraction pattern of a tuple as a semi-magic square:
/// s_{IJ} = #{k in 1..r : sigma_k(I) = J}, sigma_1 = id.
/// Row/column sums equal the rank automatically.
SemiMagicSquare tuple_to_square(const PermutationTuple& tuple, int rank);

struct ExpansionTerm {
  SemiMagicSquare square;        // canonical form
  std::int64_t coefficient = 0;  // exact signed tuple count for the class
  std::int64_t class_size = 0;   // orbit size under row x column permutations
  PermutationTuple representative;
};

/// Signed expansion of the order-n discriminant over square classes, with
/// overall prefactor 1/n!.  Terms are sorted by canonical square; classes
/// whose signs cancel to zero are omitted.
struct InvariantExpansion {
  int rank = 0;
  int order = 0;
  std::int64_t prefactor_denominator = 1;  // n!
  std::vector<ExpansionTerm> terms;

  std::int64_t coefficient_sum() const;
  const ExpansionTerm* find(const SemiMagicSquare& canonical) const;
};

/// Enumerate all (n!)^(rank-1) tuples (odometer over lexicographic
/// permutation indices, last permutation fastest), canonicalize each
/// tuple's square, and sum signs per class.  Budget-guarded.
InvariantExpansion build_expansion(int rank, int order);

/// Memoized build_expansion; the returned reference stays valid for the
/// process lifetime.  Thread-safe.
const InvariantExpansion& cached_expansion(int rank, int order);

/// (1/s!) sum over all tuples of sign * contract_tuple.  No class grouping,
/// so the value is exact for arbitrary (non-symmetric) A.
double discriminant_oracle(const HyperMatrix& A, const HyperMatrix& Delta, int s);

/// Unsigned contraction of the class representative.  Only well defined for
/// symmetric A (different tuples of one class wire different slots); input
/// symmetry is checked at 1e-12 relative.
double evaluate_class(const HyperMatrix& A, const HyperMatrix& Delta,
                      const SquareClass& cls);

double evaluate_class(const HyperMatrix& A, const HyperMatrix& Delta,
                      const ExpansionTerm& term);

/// Order-s discriminant against the diagonal unit.  Symmetric input takes
/// the class-grouped fast path; anything else falls back to the oracle.
double discriminant(const HyperMatrix& A, int s);

/// trace(a^s) for rank-2 a; s = 0 gives d.
double trace_power(const HyperMatrix& a, int s);

/// Rank-2 discriminant evaluated through the partition sum over trace
/// powers.  1 <= s <= 8.
double discriminant_from_traces(const HyperMatrix& a, int s);

/// One monomial of the expanded k-th power of the signed permutation
/// census: an unordered multiset of k cycle-class labels with an exact
/// integer coefficient.
struct PowerProductTerm {
  std::vector<std::vector<int>> labels;  // sorted multiset of class labels
  std::int64_t coefficient = 0;
  std::string label_string() const;  // e.g. "0 * 1 * 1^2"
};

/// Multinomial expansion of (sum_c sign_c count_c label_c)^k over unordered
/// label multisets.  n <= 6, k <= 5.  Terms sorted by label multiset.
std::vector<PowerProductTerm> power_product(int n, int k);

}  // namespace hyperinv
