#include "hyperinv/config.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>
#include <string>

#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::int64_t initial_cap() {
  if (const char* env = std::getenv("HYPERINV_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 10'000'000;
}

std::atomic<std::int64_t>& cap_storage() {
  static std::atomic<std::int64_t> cap{initial_cap()};
  return cap;
}

}  // namespace

std::int64_t tuple_cap() { return cap_storage().load(); }

void set_tuple_cap(std::int64_t cap) { cap_storage().store(cap); }

std::int64_t expansion_budget(int rank, int order) {
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t fact = 1;
  for (int i = 2; i <= order; ++i) {
    if (fact > kMax / i) return kMax;
    fact *= i;
  }
  std::int64_t budget = order;
  for (int i = 1; i < rank; ++i) {
    if (fact != 0 && budget > kMax / fact) return kMax;
    budget *= fact;
  }
  return budget;
}

void check_expansion_budget(int rank, int order) {
  const std::int64_t budget = expansion_budget(rank, order);
  if (budget > tuple_cap())
    throw CapExceededError("expansion budget " + std::to_string(budget) +
                           " exceeds cap " + std::to_string(tuple_cap()) +
                           " (rank " + std::to_string(rank) + ", order " +
                           std::to_string(order) + ")");
}

}  // namespace hyperinv
