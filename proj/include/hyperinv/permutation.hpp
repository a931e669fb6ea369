#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hyperinv {

/// All permutations of {0..n-1} in lexicographic one-line order.
/// This order is load-bearing: tuple enumeration indexes into it and the
/// resulting term order is part of the library's determinism contract.
const std::vector<std::vector<int>>& lex_permutations(int n);

/// +1 for even, -1 for odd (cycle decomposition).
int permutation_parity(std::span<const int> perm);

std::vector<int> invert_permutation(std::span<const int> perm);

bool is_permutation(std::span<const int> perm);

/// Advance a mixed-radix counter with all digits in [0, base); returns
/// false once the counter wraps back to all zeros.
inline bool odometer_step(std::vector<int>& digits, int base) {
  for (std::size_t pos = digits.size(); pos > 0; --pos) {
    if (++digits[pos - 1] < base) return true;
    digits[pos - 1] = 0;
  }
  return false;
}

/// One signed contraction pattern between n tensor factors and n unit
/// factors: rank-1 many permutations of {0..n-1} with the first factor's
/// wiring held fixed at the identity.  sign = product of the parities.
struct PermutationTuple {
  int order = 0;
  std::vector<std::vector<int>> perms;  // the r-1 free permutations
  int sign = 1;

  static PermutationTuple make(int order, std::vector<std::vector<int>> perms);
  int rank() const { return static_cast<int>(perms.size()) + 1; }
};

}  // namespace hyperinv
