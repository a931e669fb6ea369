#include "hyperinv/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hyperinv/config.hpp"
#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact series arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in exact series arithmetic");
  return out;
}

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, i);
  return f;
}

std::int64_t binom64(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = checked_mul(out, n - k + i) / i;
  return out;
}

}  // namespace

std::vector<int> Partition::parts() const {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    for (int c = 0; c < multiplicities[static_cast<std::size_t>(j - 1)]; ++c) out.push_back(j);
  return out;
}

std::vector<Partition> partitions(int n) {
  if (n < 1) throw std::invalid_argument("partitions: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> parts;
  // ascending part lists in lexicographic order: (1,1,...,1) first, (n) last
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    if (remaining == 0) {
      Partition p;
      p.n = n;
      p.multiplicities.assign(static_cast<std::size_t>(n), 0);
      for (int x : parts) ++p.multiplicities[static_cast<std::size_t>(x - 1)];
      out.push_back(std::move(p));
      return;
    }
    for (int part = min_part; part <= remaining; ++part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

std::vector<std::int64_t> partition_count_series(int N) {
  if (N < 0) throw std::invalid_argument("partition_count_series: N must be >= 0");
  std::vector<std::int64_t> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= N; ++m)
    for (int j = m; j <= N; ++j)
      p[static_cast<std::size_t>(j)] =
          checked_add(p[static_cast<std::size_t>(j)], p[static_cast<std::size_t>(j - m)]);
  return p;
}

std::vector<std::int64_t> rank4_class_count_series(int N) {
  if (N < 0) throw std::invalid_argument("rank4_class_count_series: N must be >= 0");
  std::vector<std::int64_t> b(static_cast<std::size_t>(N) + 1, 0);
  b[0] = 1;
  for (int m = 1; m <= N; ++m) {
    const std::int64_t c = factorial64(m);  // exponent of (1-x^m)^-c
    std::vector<std::int64_t> nb(static_cast<std::size_t>(N) + 1, 0);
    for (int j = 0; j <= N; ++j) {
      for (int k = 0; m * k <= j; ++k) {
        nb[static_cast<std::size_t>(j)] = checked_add(
            nb[static_cast<std::size_t>(j)],
            checked_mul(b[static_cast<std::size_t>(j - m * k)], binom64(c + k - 1, k)));
      }
    }
    b = std::move(nb);
  }
  return b;
}

bool SemiMagicSquare::valid() const {
  if (n < 1 || static_cast<int>(entries.size()) != n * n) return false;
  for (int i = 0; i < n; ++i) {
    int rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      if (at(i, j) < 0) return false;
      rs += at(i, j);
      cs += at(j, i);
    }
    if (rs != r || cs != r) return false;
  }
  return true;
}

std::string SemiMagicSquare::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n; ++j) {
      if (j) os << ',';
      os << at(i, j);
    }
  }
  os << ']';
  return os.str();
}

std::int64_t hn_formula(int n, int r) {
  if (r < 0) throw std::invalid_argument("hn_formula: r must be >= 0");
  if (r == 0) return 1;
  switch (n) {
    case 1:
      return 1;
    case 2:
      return r + 1;
    case 3: {
      const std::int64_t rr = r;
      return (rr * rr * rr * rr + 6 * rr * rr * rr + 15 * rr * rr + 18 * rr + 8) / 8;
    }
    case 4: {
      static constexpr std::int64_t c[10] = {24,    258,   1468, 4945, 10532,
                                             14620, 13232, 7544, 2464, 352};
      std::int64_t total = 0;
      for (int k = 0; k < 10; ++k) total = checked_add(total, checked_mul(c[k], binom64(r - 1, k)));
      return total;
    }
    default:
      throw std::invalid_argument("hn_formula: only n <= 4 supported");
  }
}

std::vector<SemiMagicSquare> enumerate_semimagic(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("enumerate_semimagic: need n >= 1, r >= 0");
  // predicted-count guard
  std::int64_t predicted;
  if (n <= 4) {
    predicted = hn_formula(n, r);
  } else {
    // number of n-compositions of r, to the n-th power (loose upper bound)
    const std::int64_t comp = binom64(r + n - 1, n - 1);
    predicted = 1;
    for (int i = 0; i < n; ++i) {
      if (predicted > tuple_cap()) break;
      predicted = checked_mul(predicted, comp);
    }
  }
  if (predicted > tuple_cap())
    throw CapExceededError("enumerate_semimagic: predicted count " + std::to_string(predicted) +
                           " exceeds cap " + std::to_string(tuple_cap()));

  std::vector<SemiMagicSquare> out;
  SemiMagicSquare sq;
  sq.n = n;
  sq.r = r;
  sq.entries.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> colrem(static_cast<std::size_t>(n), r);

  auto rec = [&](auto&& self, int pos, int rowrem) -> void {
    if (pos == n * n) {
      out.push_back(sq);
      return;
    }
    const int i = pos / n, j = pos % n;
    const int next_rowrem = (j == n - 1) ? r : 0;  // reset at row start below
    if (j == n - 1) {
      const int v = rowrem;
      if (v >= 0 && v <= colrem[static_cast<std::size_t>(j)] &&
          (i < n - 1 || v == colrem[static_cast<std::size_t>(j)])) {
        sq.entries[static_cast<std::size_t>(pos)] = v;
        colrem[static_cast<std::size_t>(j)] -= v;
        self(self, pos + 1, next_rowrem);
        colrem[static_cast<std::size_t>(j)] += v;
        sq.entries[static_cast<std::size_t>(pos)] = 0;
      }
      return;
    }
    const int hi = std::min(rowrem, colrem[static_cast<std::size_t>(j)]);
    for (int v = 0; v <= hi; ++v) {
      if (i == n - 1 && v != colrem[static_cast<std::size_t>(j)]) continue;
      sq.entries[static_cast<std::size_t>(pos)] = v;
      colrem[static_cast<std::size_t>(j)] -= v;
      self(self, pos + 1, rowrem - v);
      colrem[static_cast<std::size_t>(j)] += v;
      sq.entries[static_cast<std::size_t>(pos)] = 0;
    }
  };
  rec(rec, 0, r);
  return out;
}

SemiMagicSquare canonicalize(const SemiMagicSquare& sq) {
  if (!sq.valid()) throw std::invalid_argument("canonicalize: invalid semi-magic square");
  if (sq.n > 5) throw CapExceededError("canonicalize: n > 5 refused (n! row-order search)");
  const int n = sq.n;
  const auto& perms = lex_permutations(n);
  // For a fixed row order the row-major-minimal column arrangement is the
  // lexicographic sort of the column vectors (an adjacent-exchange argument:
  // swapping two sorted-order-violating columns can only increase the
  // flattened sequence).  So the exhaustive (n!)^2 search reduces to n!
  // row orders with one column sort each.
  std::vector<int> best = sq.entries;
  std::vector<std::vector<int>> cols(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> cand(static_cast<std::size_t>(n) * n);
  for (const auto& rp : perms) {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            sq.at(rp[static_cast<std::size_t>(i)], j);
    std::sort(cols.begin(), cols.end());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cand[static_cast<std::size_t>(i) * n + j] =
            cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    if (cand < best) best = cand;
  }
  SemiMagicSquare out;
  out.n = n;
  out.r = sq.r;
  out.entries = std::move(best);
  return out;
}

std::vector<SquareClass> enumerate_classes(int n, int r) {
  std::map<std::vector<int>, std::int64_t> sizes;
  for (const auto& sq : enumerate_semimagic(n, r)) ++sizes[canonicalize(sq).entries];
  std::vector<SquareClass> out;
  out.reserve(sizes.size());
  for (auto& [entries, size] : sizes) {
    SquareClass cls;
    cls.canonical.n = n;
    cls.canonical.r = r;
    cls.canonical.entries = entries;
    cls.size = size;
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<int> CycleClass::label() const {
  std::vector<int> out;
  for (int j = 2; j <= partition.n; ++j)
    for (int c = 0; c < partition.multiplicities[static_cast<std::size_t>(j - 1)]; ++c)
      out.push_back(j - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::string CycleClass::label_string() const {
  const auto lab = label();
  if (lab.empty()) return "0";
  std::ostringstream os;
  int i = static_cast<int>(lab.size()) - 1;
  bool first = true;
  while (i >= 0) {
    int j = i;
    while (j >= 0 && lab[static_cast<std::size_t>(j)] == lab[static_cast<std::size_t>(i)]) --j;
    const int count = i - j;
    if (!first) os << ' ';
    os << lab[static_cast<std::size_t>(i)];
    if (count > 1) os << '^' << count;
    first = false;
    i = j;
  }
  return os.str();
}

std::vector<CycleClass> cycle_census(int n) {
  std::vector<CycleClass> out;
  for (auto& p : partitions(n)) {
    CycleClass cc;
    std::int64_t denom = 1;
    int cycles = 0;
    for (int j = 1; j <= n; ++j) {
      const int m = p.multiplicities[static_cast<std::size_t>(j - 1)];
      cycles += m;
      for (int c = 0; c < m; ++c) denom = checked_mul(denom, j);
      denom = checked_mul(denom, factorial64(m));
    }
    cc.count = factorial64(n) / denom;
    cc.sign = ((n - cycles) % 2 == 0) ? 1 : -1;
    cc.partition = std::move(p);
    out.push_back(std::move(cc));
  }
  return out;
}

}  // namespace hyperinv
