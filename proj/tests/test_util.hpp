#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "hyperinv/rng.hpp"
#include "hyperinv/tensor.hpp"

namespace hyperinv::testutil {

inline HyperMatrix random_tensor(SeededRng& rng, int rank, int dim,
                                 Variance var = Variance::covariant) {
  HyperMatrix out(rank, dim, var);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rng.uniform(-1.0, 1.0);
  return out;
}

inline HyperMatrix random_symmetric_tensor(SeededRng& rng, int rank, int dim) {
  HyperMatrix out(rank, dim, Variance::covariant);
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  std::map<std::vector<int>, double> values;
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    std::size_t rest = flat;
    for (int k = rank - 1; k >= 0; --k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    std::vector<int> key = idx;
    std::sort(key.begin(), key.end());
    auto it = values.find(key);
    if (it == values.end()) it = values.emplace(std::move(key), rng.uniform(-1.0, 1.0)).first;
    out[flat] = it->second;
  }
  return out;
}

}  // namespace hyperinv::testutil
