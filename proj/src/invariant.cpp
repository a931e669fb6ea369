#include "hyperinv/invariant.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hyperinv/config.hpp"
#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

SemiMagicSquare tuple_to_square(const PermutationTuple& tuple, int rank) {
  if (tuple.rank() != rank)
    throw std::invalid_argument("tuple_to_square: tuple arity != rank-1");
  const int n = tuple.order;
  SemiMagicSquare sq;
  sq.n = n;
  sq.r = rank;
  sq.entries.assign(static_cast<std::size_t>(n) * n, 0);
  for (int I = 0; I < n; ++I) ++sq.entries[static_cast<std::size_t>(I) * n + I];  // sigma_1 = id
  for (const auto& p : tuple.perms)
    for (int I = 0; I < n; ++I)
      ++sq.entries[static_cast<std::size_t>(I) * n + p[static_cast<std::size_t>(I)]];
  return sq;
}

std::int64_t InvariantExpansion::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& t : terms) s += t.coefficient;
  return s;
}

const ExpansionTerm* InvariantExpansion::find(const SemiMagicSquare& canonical) const {
  for (const auto& t : terms)
    if (t.square.entries == canonical.entries) return &t;
  return nullptr;
}

/// Visit all (n!)^(rank-1) tuples in odometer order (last permutation index
/// fastest) and hand each to `visit` together with its sign.
template <typename F>
static void for_each_tuple(int rank, int order, F&& visit) {
  const auto& perms = lex_permutations(order);
  const int nperm = static_cast<int>(perms.size());
  const int free_count = rank - 1;
  std::vector<int> digits(static_cast<std::size_t>(free_count), 0);
  std::vector<int> signs(perms.size());
  for (int i = 0; i < nperm; ++i) signs[static_cast<std::size_t>(i)] = permutation_parity(perms[static_cast<std::size_t>(i)]);
  do {
    int sign = 1;
    for (int k = 0; k < free_count; ++k) sign *= signs[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
    visit(digits, sign);
  } while (odometer_step(digits, nperm));
}

InvariantExpansion build_expansion(int rank, int order) {
  if (rank != 2 && rank != 3 && rank != 4 && rank != 6)
    throw std::invalid_argument("build_expansion: rank must be one of {2,3,4,6}");
  if (order < 1) throw std::invalid_argument("build_expansion: order must be >= 1");
  check_expansion_budget(rank, order);

  const auto& perms = lex_permutations(order);
  const int n = order;

  struct ClassData {
    std::int64_t coefficient = 0;
    std::vector<int> first_tuple;  // permutation indices of the first tuple seen
  };
  std::unordered_map<std::vector<int>, std::vector<int>, VecHash> canon_memo;  // raw -> canonical
  std::map<std::vector<int>, ClassData> classes;                               // canonical -> data

  SemiMagicSquare raw;
  raw.n = n;
  raw.r = rank;
  for_each_tuple(rank, order, [&](const std::vector<int>& digits, int sign) {
    raw.entries.assign(static_cast<std::size_t>(n) * n, 0);
    for (int I = 0; I < n; ++I) ++raw.entries[static_cast<std::size_t>(I) * n + I];
    for (int k : digits) {
      const auto& p = perms[static_cast<std::size_t>(k)];
      for (int I = 0; I < n; ++I)
        ++raw.entries[static_cast<std::size_t>(I) * n + p[static_cast<std::size_t>(I)]];
    }
    auto it = canon_memo.find(raw.entries);
    if (it == canon_memo.end())
      it = canon_memo.emplace(raw.entries, canonicalize(raw).entries).first;
    ClassData& cd = classes[it->second];
    cd.coefficient += sign;
    if (cd.first_tuple.empty()) cd.first_tuple = digits;
  });

  InvariantExpansion out;
  out.rank = rank;
  out.order = order;
  out.prefactor_denominator = factorial64(order);
  for (auto& [canonical, cd] : classes) {
    if (cd.coefficient == 0) continue;
    ExpansionTerm term;
    term.square.n = n;
    term.square.r = rank;
    term.square.entries = canonical;
    term.coefficient = cd.coefficient;
    std::vector<std::vector<int>> tp;
    tp.reserve(cd.first_tuple.size());
    for (int k : cd.first_tuple) tp.push_back(perms[static_cast<std::size_t>(k)]);
    term.representative = PermutationTuple::make(order, std::move(tp));
    // orbit size: count distinct row/column images
    {
      std::vector<std::vector<int>> images;
      std::vector<int> cand(static_cast<std::size_t>(n) * n);
      for (const auto& rp : perms)
        for (const auto& cp : perms) {
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              cand[static_cast<std::size_t>(i) * n + j] =
                  canonical[static_cast<std::size_t>(rp[static_cast<std::size_t>(i)]) * n +
                            cp[static_cast<std::size_t>(j)]];
          images.push_back(cand);
        }
      std::sort(images.begin(), images.end());
      term.class_size = static_cast<std::int64_t>(
          std::unique(images.begin(), images.end()) - images.begin());
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

const InvariantExpansion& cached_expansion(int rank, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, InvariantExpansion> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(rank, order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_expansion(rank, order)).first;
  return it->second;
}

double discriminant_oracle(const HyperMatrix& A, const HyperMatrix& Delta, int s) {
  if (s < 1) throw std::invalid_argument("discriminant_oracle: s must be >= 1");
  if (A.rank() != Delta.rank() || A.dim() != Delta.dim())
    throw std::invalid_argument("discriminant_oracle: rank/dim mismatch");
  check_expansion_budget(A.rank(), s);
  const auto& perms = lex_permutations(s);
  double total = 0.0, comp = 0.0;  // Kahan-compensated tuple sum
  for_each_tuple(A.rank(), s, [&](const std::vector<int>& digits, int sign) {
    std::vector<std::vector<int>> tp;
    tp.reserve(digits.size());
    for (int k : digits) tp.push_back(perms[static_cast<std::size_t>(k)]);
    const PermutationTuple tuple = PermutationTuple::make(s, std::move(tp));
    const double y = static_cast<double>(sign) * contract_tuple(A, Delta, tuple) - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  });
  return total / static_cast<double>(factorial64(s));
}

double evaluate_class(const HyperMatrix& A, const HyperMatrix& Delta, const SquareClass& cls) {
  if (!cls.representative)
    throw std::invalid_argument("evaluate_class: class has no representative tuple");
  if (!is_symmetric(A))
    throw std::invalid_argument("evaluate_class: per-class values need symmetric input");
  return contract_tuple(A, Delta, *cls.representative);
}

double evaluate_class(const HyperMatrix& A, const HyperMatrix& Delta, const ExpansionTerm& term) {
  if (!is_symmetric(A))
    throw std::invalid_argument("evaluate_class: per-class values need symmetric input");
  return contract_tuple(A, Delta, term.representative);
}

double discriminant(const HyperMatrix& A, int s) {
  if (s < 1) throw std::invalid_argument("discriminant: s must be >= 1");
  const HyperMatrix delta = make_unit_delta(A.rank(), A.dim());
  const HyperMatrix& Acov = A;  // discriminants read A covariantly
  if (!is_symmetric(A)) return discriminant_oracle(Acov, delta, s);
  const InvariantExpansion& exp = cached_expansion(A.rank(), s);
  double total = 0.0;
  for (const auto& term : exp.terms)
    total += static_cast<double>(term.coefficient) * contract_tuple(Acov, delta, term.representative);
  return total / static_cast<double>(exp.prefactor_denominator);
}

double trace_power(const HyperMatrix& a, int s) {
  if (a.rank() != 2) throw std::invalid_argument("trace_power: rank-2 input required");
  if (s < 0) throw std::invalid_argument("trace_power: s must be >= 0");
  const int d = a.dim();
  if (s == 0) return static_cast<double>(d);
  // power by repeated multiplication; sizes here are tiny
  std::vector<double> cur(a.data().begin(), a.data().end());
  std::vector<double> next(static_cast<std::size_t>(d) * d);
  for (int k = 1; k < s; ++k) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int l = 0; l < d; ++l)
          acc += cur[static_cast<std::size_t>(i) * d + l] * a[static_cast<std::size_t>(l) * d + j];
        next[static_cast<std::size_t>(i) * d + j] = acc;
      }
    std::swap(cur, next);
  }
  double tr = 0.0;
  for (int i = 0; i < d; ++i) tr += cur[static_cast<std::size_t>(i) * d + i];
  return tr;
}

double discriminant_from_traces(const HyperMatrix& a, int s) {
  if (a.rank() != 2) throw std::invalid_argument("discriminant_from_traces: rank-2 input required");
  if (s < 1 || s > 8) throw std::invalid_argument("discriminant_from_traces: 1 <= s <= 8");
  std::vector<double> tr(static_cast<std::size_t>(s) + 1, 0.0);
  for (int j = 1; j <= s; ++j) tr[static_cast<std::size_t>(j)] = trace_power(a, j);
  double total = 0.0;
  for (const auto& p : partitions(s)) {
    double term = 1.0;
    for (int j = 1; j <= s; ++j) {
      const int m = p.multiplicities[static_cast<std::size_t>(j - 1)];
      if (m == 0) continue;
      double denom = 1.0;
      for (int c = 0; c < m; ++c) denom *= j;
      for (int c = 2; c <= m; ++c) denom *= c;
      double power = 1.0;
      for (int c = 0; c < m; ++c) power *= tr[static_cast<std::size_t>(j)];
      const double sgn = (((j - 1) * m) % 2 == 0) ? 1.0 : -1.0;
      term *= sgn * power / denom;
    }
    total += term;
  }
  return total;
}

std::string PowerProductTerm::label_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& lab : labels) {
    if (!first) os << " * ";
    first = false;
    if (lab.empty()) {
      os << '0';
      continue;
    }
    // descending symbols with exponents, e.g. {1,1} -> "1^2"
    int i = static_cast<int>(lab.size()) - 1;
    bool inner_first = true;
    while (i >= 0) {
      int j = i;
      while (j >= 0 && lab[static_cast<std::size_t>(j)] == lab[static_cast<std::size_t>(i)]) --j;
      if (!inner_first) os << ' ';
      os << lab[static_cast<std::size_t>(i)];
      if (i - j > 1) os << '^' << (i - j);
      inner_first = false;
      i = j;
    }
  }
  return os.str();
}

std::vector<PowerProductTerm> power_product(int n, int k) {
  if (n < 1 || n > 6 || k < 1 || k > 5)
    throw std::invalid_argument("power_product: need 1 <= n <= 6, 1 <= k <= 5");
  const auto census = cycle_census(n);
  const int nc = static_cast<int>(census.size());
  std::map<std::vector<std::vector<int>>, std::int64_t> acc;

  // multisets of k classes as nondecreasing index vectors
  std::vector<int> pick(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int min_idx) -> void {
    if (pos == k) {
      // multinomial coefficient k! / prod(multiplicities!)
      std::int64_t coeff = factorial64(k);
      int i = 0;
      while (i < k) {
        int j = i;
        while (j < k && pick[static_cast<std::size_t>(j)] == pick[static_cast<std::size_t>(i)]) ++j;
        coeff /= factorial64(j - i);
        i = j;
      }
      std::vector<std::vector<int>> labels;
      labels.reserve(static_cast<std::size_t>(k));
      for (int idx : pick) {
        const auto& cc = census[static_cast<std::size_t>(idx)];
        coeff *= cc.sign * cc.count;
        labels.push_back(cc.label());
      }
      std::sort(labels.begin(), labels.end());
      acc[labels] += coeff;
      return;
    }
    for (int idx = min_idx; idx < nc; ++idx) {
      pick[static_cast<std::size_t>(pos)] = idx;
      self(self, pos + 1, idx);
    }
  };
  rec(rec, 0, 0);

  std::vector<PowerProductTerm> out;
  out.reserve(acc.size());
  for (auto& [labels, coeff] : acc) {
    PowerProductTerm t;
    t.labels = labels;
    t.coefficient = coeff;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace hyperinv
