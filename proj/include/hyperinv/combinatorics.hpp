#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperinv/permutation.hpp"

namespace hyperinv {

/// Multiplicity-vector form of an integer partition: sum_j j*m_j = n.
struct Partition {
  int n = 0;
  std::vector<int> multiplicities;  // m_1..m_n

  /// Parts in ascending order, e.g. n=4, m=(0,2,0,0) -> {2,2}.
  std::vector<int> parts() const;
  bool operator==(const Partition&) const = default;
};

/// All partitions of n, ordered lexicographically by ascending part list:
/// (1,1,...,1) first, (n) last.
std::vector<Partition> partitions(int n);

/// p(0..N), coefficients of prod (1-x^m)^-1.  Exact.
std::vector<std::int64_t> partition_count_series(int N);

/// Coefficients of prod (1-x^m)^-(m!).  Exact; throws on int64 overflow.
std::vector<std::int64_t> rank4_class_count_series(int N);

/// n x n nonnegative integer array with every row and column summing to r.
struct SemiMagicSquare {
  int n = 0;
  int r = 0;
  std::vector<int> entries;  // n*n row-major

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const SemiMagicSquare&) const = default;
  auto operator<=>(const SemiMagicSquare&) const = default;
  bool valid() const;
  std::string to_string() const;  // e.g. "[2,0;0,2]"
};

/// Closed-form count of semi-magic squares, n <= 4 only.
std::int64_t hn_formula(int n, int r);

/// All squares in lexicographic row-major order (backtracking with
/// row/column remainder pruning).  Guarded by the tuple cap: the predicted
/// count (hn_formula when n <= 4, a compositions upper bound otherwise)
/// must not exceed it.
std::vector<SemiMagicSquare> enumerate_semimagic(int n, int r);

/// Lexicographically smallest row-major array over all row x column
/// permutations.  No transposition: rows and columns play different roles.
/// n <= 5 (exhaustive (n!)^2 search).
SemiMagicSquare canonicalize(const SemiMagicSquare& sq);

/// Orbit of a square under row x column permutations.
struct SquareClass {
  SemiMagicSquare canonical;
  std::int64_t size = 0;
  std::optional<PermutationTuple> representative;
};

/// Group enumerate_semimagic(n, r) by canonical form; class sizes sum to
/// the total count.  Ordered by canonical square ascending.
std::vector<SquareClass> enumerate_classes(int n, int r);

/// One conjugacy class of S_n: cycle type, element count, common sign.
struct CycleClass {
  Partition partition;
  std::int64_t count = 0;  // n! / prod_j (j^m_j m_j!)
  int sign = 1;            // (-1)^(n - #cycles)

  /// Reduced cycle lengths (j-1 for every cycle of length j >= 2), sorted.
  /// The identity class has an empty label.
  std::vector<int> label() const;
  /// "0" for the identity, otherwise descending symbols like "2 1" / "1^2".
  std::string label_string() const;
};

/// One entry per partition of n, in partitions(n) order.
std::vector<CycleClass> cycle_census(int n);

}  // namespace hyperinv
