#pragma once

#include <cstdint>

namespace hyperinv {

/// Work budget shared by the tuple-enumeration engines.
///
/// The budget unit is "tuple count times order": an expansion of order n at
/// rank r enumerates (n!)^(r-1) permutation tuples and spends Theta(n) per
/// tuple, so its cost is (n!)^(r-1) * n units.  The default (10^7) admits the
/// rank-4 order-5 build (8.64e6) and refuses rank-6 order-4 (3.19e7).
///
/// The initial value is read once from the HYPERINV_CAP environment variable
/// when present.
std::int64_t tuple_cap();
void set_tuple_cap(std::int64_t cap);

/// (n!)^(rank-1) * n, saturating at INT64_MAX on overflow.
std::int64_t expansion_budget(int rank, int order);

/// Throws CapExceededError when expansion_budget(rank, order) > tuple_cap().
void check_expansion_budget(int rank, int order);

}  // namespace hyperinv
