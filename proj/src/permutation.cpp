#include "hyperinv/permutation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hyperinv {

const std::vector<std::vector<int>>& lex_permutations(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("lex_permutations: n out of range");
  static std::mutex mu;
  static std::map<int, std::vector<std::vector<int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return cache.emplace(n, std::move(all)).first->second;
}

int permutation_parity(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> invert_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

bool is_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

PermutationTuple PermutationTuple::make(int order, std::vector<std::vector<int>> perms) {
  PermutationTuple t;
  t.order = order;
  int sign = 1;
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != order || !is_permutation(p))
      throw std::invalid_argument("PermutationTuple: entry is not a permutation of the order");
    sign *= permutation_parity(p);
  }
  t.perms = std::move(perms);
  t.sign = sign;
  return t;
}

}  // namespace hyperinv
