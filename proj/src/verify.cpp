#include "hyperinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "hyperinv/calculus.hpp"
#include "hyperinv/combinatorics.hpp"
#include "hyperinv/config.hpp"
#include "hyperinv/errors.hpp"
#include "hyperinv/invariant.hpp"
#include "hyperinv/reference_tables.hpp"
#include "hyperinv/rng.hpp"
#include "hyperinv/special_cases.hpp"
#include "hyperinv/tensor.hpp"

namespace hyperinv {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

HyperMatrix random_tensor(SeededRng& rng, int rank, int dim,
                          Variance var = Variance::covariant) {
  HyperMatrix out(rank, dim, var);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rng.uniform(-1.0, 1.0);
  return out;
}

HyperMatrix random_symmetric_tensor(SeededRng& rng, int rank, int dim) {
  // draw one value per sorted index multiset, in lexicographic multiset order
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

MatrixTransform random_well_conditioned_transform(SeededRng& rng, int dim) {
  // identity plus a small perturbation: condition ~2, which keeps the
  // transformed contraction magnitudes (and hence float roundoff) tame
  for (;;) {
    std::vector<double> e(static_cast<std::size_t>(dim) * dim);
    for (auto& x : e) x = rng.uniform(-0.25, 0.25);
    for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] += 1.0;
    try {
      MatrixTransform u(dim, e);
      double nf = 0.0, ni = 0.0;
      for (double x : u.entries()) nf += x * x;
      for (double x : u.inverse()) ni += x * x;
      if (std::sqrt(nf) * std::sqrt(ni) < 1e3) return u;
    } catch (const SingularError&) {
    }
  }
}

SemiMagicSquare square_from_flat(const std::vector<int>& flat, int n, int r) {
  SemiMagicSquare sq;
  sq.n = n;
  sq.r = r;
  sq.entries = flat;
  return sq;
}

struct Suite {
  std::vector<CheckResult>& out;
  void pass(const std::string& name, const std::string& detail) {
    out.push_back({name, CheckStatus::Pass, detail});
  }
  void fail(const std::string& name, const std::string& detail) {
    out.push_back({name, CheckStatus::Fail, detail});
  }
  void warn(const std::string& name, const std::string& detail) {
    out.push_back({name, CheckStatus::Warn, detail});
  }
  void info(const std::string& name, const std::string& detail) {
    out.push_back({name, CheckStatus::Info, detail});
  }
  void check(bool ok, const std::string& name, const std::string& detail) {
    out.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
};

double scale_pow(double base, int p) {
  double s = 1.0;
  for (int i = 0; i < p; ++i) s *= std::max(base, 1e-300);
  return s;
}

// ---------------------------------------------------------------------------
// criterion 1: semi-magic counts
// ---------------------------------------------------------------------------
void criterion_counts(Suite& s) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream why;
  const std::int64_t expect_r2[] = {1, 3, 21, 282};
  for (int n = 1; n <= 4; ++n) {
    const auto squares = enumerate_semimagic(n, 2);
    if (static_cast<std::int64_t>(squares.size()) != expect_r2[n - 1]) {
      ok = false;
      why << "count(" << n << ",2)=" << squares.size() << " expected " << expect_r2[n - 1] << "; ";
    }
  }
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= 4; ++r) {
      const auto squares = enumerate_semimagic(n, r);
      if (static_cast<std::int64_t>(squares.size()) != hn_formula(n, r)) {
        ok = false;
        why << "count(" << n << "," << r << ") != formula; ";
      }
    }
  const std::int64_t h44_enum = static_cast<std::int64_t>(enumerate_semimagic(4, 4).size());
  const std::int64_t h44_formula = hn_formula(4, 4);
  if (h44_enum != 10147 || h44_formula != 10147) {
    ok = false;
    why << "H_4(4) enum=" << h44_enum << " formula=" << h44_formula << " expected 10147; ";
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= 5.0) {
    ok = false;
    why << "runtime " << fmt(dt) << "s >= 5s; ";
  }
  s.check(ok, "crit-01-semimagic-counts",
          ok ? "enumeration equals closed form for all n<=4, r<=4; sizes 1,3,21,282 at r=2; "
               "H_4(4)=10147 by both routes"
             : why.str());
  s.warn("crit-01-erratum-H44",
         "published text value H_4(4)=" + std::to_string(reference::kReportedH44) +
             " disagrees with enumeration and the published closed form (both 10147); "
             "enumeration is authoritative");
}

// ---------------------------------------------------------------------------
// criterion 2: class tables
// ---------------------------------------------------------------------------
void criterion_classes(Suite& s) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream why;
  const int expect_r2[] = {1, 2, 3, 5};
  const int expect_r4[] = {1, 3, 9};
  for (int n = 1; n <= 4; ++n) {
    const auto classes = enumerate_classes(n, 2);
    const auto& ref = reference::class_table(2, n);
    if (static_cast<int>(classes.size()) != expect_r2[n - 1]) {
      ok = false;
      why << "classes(" << n << ",2)=" << classes.size() << "; ";
      continue;
    }
    std::set<std::vector<int>> have;
    for (const auto& c : classes) have.insert(c.canonical.entries);
    for (const auto& flat : ref.squares)
      if (!have.count(canonicalize(square_from_flat(flat, n, 2)).entries)) {
        ok = false;
        why << "r=2 n=" << n << " reference square missing; ";
      }
  }
  for (int n = 1; n <= 3; ++n) {
    const auto classes = enumerate_classes(n, 4);
    const auto& ref = reference::class_table(4, n);
    if (static_cast<int>(classes.size()) != expect_r4[n - 1]) {
      ok = false;
      why << "classes(" << n << ",4)=" << classes.size() << "; ";
      continue;
    }
    std::set<std::vector<int>> have;
    for (const auto& c : classes) have.insert(c.canonical.entries);
    for (const auto& flat : ref.squares)
      if (!have.count(canonicalize(square_from_flat(flat, n, 4)).entries)) {
        ok = false;
        why << "r=4 n=" << n << " reference square missing; ";
      }
  }
  // (4,4): all 40 published representatives must appear among the
  // enumerated classes; enumeration finds 43 (3 classes the publication
  // merged away); orbit sizes must sum to the total count.
  {
    const auto classes = enumerate_classes(4, 4);
    const auto& ref = reference::class_table(4, 4);
    std::set<std::vector<int>> have;
    std::int64_t total = 0;
    for (const auto& c : classes) {
      have.insert(c.canonical.entries);
      total += c.size;
    }
    std::set<std::vector<int>> published;
    for (const auto& flat : ref.squares)
      published.insert(canonicalize(square_from_flat(flat, 4, 4)).entries);
    if (static_cast<int>(published.size()) != 40) {
      ok = false;
      why << "published (4,4) list does not canonicalize to 40 distinct classes; ";
    }
    for (const auto& p : published)
      if (!have.count(p)) {
        ok = false;
        why << "published (4,4) class missing from enumeration; ";
      }
    if (static_cast<int>(classes.size()) != 40 + ref.missing_class_count) {
      ok = false;
      why << "classes(4,4)=" << classes.size() << " expected "
          << 40 + ref.missing_class_count << "; ";
    }
    if (total != 10147) {
      ok = false;
      why << "orbit sizes sum to " << total << " != 10147; ";
    }
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= 10.0) {
    ok = false;
    why << "runtime " << fmt(dt) << "s >= 10s; ";
  }
  s.check(ok, "crit-02-class-tables",
          ok ? "representative sets reproduced (r=2: 1,2,3,5 classes; r=4: 1,3,9 classes; "
               "all 40 published (4,4) representatives found; orbit sizes sum to 10147)"
             : why.str());
  s.warn("crit-02-erratum-classes44",
         "published (4,4) class list stops at " + std::to_string(reference::kReportedClasses44) +
             " classes; exhaustive enumeration finds 43 (one transpose-pair and one "
             "self-transpose class are absent from the published list)");
}

// ---------------------------------------------------------------------------
// criterion 3: expansion coefficient tables
// ---------------------------------------------------------------------------
void criterion_expansions(Suite& s, bool extended) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream why;
  std::vector<std::string> warns;
  for (const auto& table : reference::expansion_tables()) {
    const InvariantExpansion exp = build_expansion(table.rank, table.order);
    if (exp.order >= 2 && exp.coefficient_sum() != 0) {
      ok = false;
      why << "rank " << table.rank << " order " << table.order << ": coefficient sum nonzero; ";
    }
    std::map<std::vector<int>, std::int64_t> engine;
    for (const auto& term : exp.terms) engine[term.square.entries] = term.coefficient;

    std::set<std::vector<int>> covered;
    for (const auto& printed : table.printed) {
      const auto canon =
          canonicalize(square_from_flat(printed.square, printed.n, table.rank)).entries;
      covered.insert(canon);
      std::int64_t expected = printed.coefficient;
      bool corrected = false;
      for (const auto& c : table.corrections)
        if (c.square == printed.square) {
          expected = c.corrected_value;
          corrected = true;
        }
      const auto it = engine.find(canon);
      const std::int64_t got = (it == engine.end()) ? 0 : it->second;
      if (got != expected) {
        ok = false;
        why << "rank " << table.rank << " order " << table.order << " class "
            << square_from_flat(printed.square, printed.n, table.rank).to_string() << ": engine "
            << got << " expected " << expected << "; ";
      } else if (corrected) {
        warns.push_back("rank " + std::to_string(table.rank) + " order " +
                        std::to_string(table.order) + " class " +
                        square_from_flat(printed.square, printed.n, table.rank).to_string() +
                        ": published coefficient " + std::to_string(printed.coefficient) +
                        ", recomputation gives " + std::to_string(expected) +
                        " (confirmed by direct contraction)");
      }
    }
    for (const auto& missing : table.missing) {
      const auto it = engine.find(missing.square);
      if (it == engine.end() || it->second != missing.coefficient) {
        ok = false;
        why << "rank " << table.rank << " order " << table.order
            << ": expected additional class absent or wrong; ";
      } else {
        covered.insert(missing.square);
        warns.push_back("rank " + std::to_string(table.rank) + " order " +
                        std::to_string(table.order) + " class " +
                        square_from_flat(missing.square, table.order, table.rank).to_string() +
                        " (coefficient " + std::to_string(missing.coefficient) +
                        ") is absent from the published table");
      }
    }
    for (const auto& [sq, coeff] : engine)
      if (!covered.count(sq)) {
        ok = false;
        why << "rank " << table.rank << " order " << table.order
            << ": engine produced unexpected class "
            << square_from_flat(sq, table.order, table.rank).to_string() << " coeff " << coeff
            << "; ";
      }
  }
  // published tuple-space sizes
  if (expansion_budget(4, 4) / 4 != 13824 || expansion_budget(6, 3) / 3 != 7776) {
    ok = false;
    why << "tuple-space sizes off; ";
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= 30.0) {
    ok = false;
    why << "runtime " << fmt(dt) << "s >= 30s; ";
  }
  std::string extended_note;
  if (extended) {
    // the largest admitted build: rank 4 at order 5 (1.73M tuples)
    const InvariantExpansion big = build_expansion(4, 5);
    SemiMagicSquare diag;
    diag.n = 5;
    diag.r = 4;
    diag.entries.assign(25, 0);
    for (int i = 0; i < 5; ++i) diag.entries[static_cast<std::size_t>(i) * 5 + i] = 4;
    const auto diag_canonical = canonicalize(diag).entries;
    std::int64_t diag_coeff = 0;
    for (const auto& term : big.terms) {
      if (!term.square.valid()) {
        ok = false;
        why << "rank-4 order-5 term invalid; ";
      }
      if (term.square.entries == diag_canonical) diag_coeff = term.coefficient;
    }
    // the identity-only tuple is the sole source of the diagonal class
    if (big.coefficient_sum() != 0 || big.prefactor_denominator != 120 || diag_coeff != 1) {
      ok = false;
      why << "rank-4 order-5 structural checks failed (sum " << big.coefficient_sum()
          << ", diag coeff " << diag_coeff << "); ";
    } else {
      extended_note =
          "; extended rank-4 order-5 build: " + std::to_string(big.terms.size()) +
          " classes, signs cancel exactly";
    }
  }
  s.check(ok, "crit-03-expansion-tables",
          ok ? "all published expansion tables reproduced exactly after canonicalization "
               "(rank 2: n=2,3,4; rank 3: n=2,3,4; rank 4: n=2,3,4 over 13824 tuples; "
               "rank 6: n=2,3 over 7776 tuples)" +
                   extended_note
             : why.str());
  for (std::size_t i = 0; i < warns.size(); ++i)
    s.warn("crit-03-erratum-" + std::to_string(i + 1), warns[i]);
}

// ---------------------------------------------------------------------------
// criterion 4: cycle census and power products
// ---------------------------------------------------------------------------
void criterion_census(Suite& s) {
  bool ok = true;
  std::ostringstream why;
  for (int n = 1; n <= 6; ++n) {
    const auto census = cycle_census(n);
    std::map<std::string, std::int64_t> got;
    std::int64_t total = 0, signed_total = 0;
    for (const auto& cc : census) {
      got[cc.label_string()] += cc.sign * cc.count;
      total += cc.count;
      signed_total += cc.sign * cc.count;
    }
    std::int64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (total != fact || (n >= 2 && signed_total != 0)) {
      ok = false;
      why << "census(" << n << ") count/sign sums wrong; ";
    }
    std::map<std::string, std::int64_t> expect;
    for (const auto& [lab, v] : reference::census_table(n)) expect[lab] = v;
    if (got != expect) {
      ok = false;
      why << "census(" << n << ") mismatch vs published table; ";
    }
  }
  std::vector<std::string> warns;
  for (const auto& table : reference::power_product_tables()) {
    const auto terms = power_product(table.n, table.k);
    std::map<std::string, std::int64_t> got;
    for (const auto& t : terms) got[t.label_string()] = t.coefficient;
    std::set<std::string> covered;
    for (const auto& [label, printed] : table.printed) {
      covered.insert(label);
      std::int64_t expected = printed;
      bool corrected = false;
      for (const auto& c : table.corrections)
        if (c.label == label) {
          expected = c.corrected_value;
          corrected = true;
        }
      const auto it = got.find(label);
      if (it == got.end() || it->second != expected) {
        ok = false;
        why << "P_" << table.n << "^" << table.k << " term " << label << ": engine "
            << (it == got.end() ? 0 : it->second) << " expected " << expected << "; ";
      } else if (corrected) {
        warns.push_back("P_" + std::to_string(table.n) + "^" + std::to_string(table.k) +
                        " term {" + label + "}: published " + std::to_string(printed) +
                        ", exact multinomial gives " + std::to_string(expected) +
                        " (confirmed by brute-force signed enumeration)");
      }
    }
    for (const auto& [label, v] : got)
      if (!covered.count(label)) {
        ok = false;
        why << "P_" << table.n << "^" << table.k << " unexpected term " << label << " = " << v
            << "; ";
      }
  }
  s.check(ok, "crit-04-census-power-products",
          ok ? "signed cycle census matches published values for n<=6; power products match "
               "for (n,k) in {(2,3),(3,2),(3,3),(4,2),(4,3),(2,5),(3,5)} exactly"
             : why.str());
  for (std::size_t i = 0; i < warns.size(); ++i)
    s.warn("crit-04-erratum-" + std::to_string(i + 1), warns[i]);
}

// ---------------------------------------------------------------------------
// criterion 5: expansion fast path vs oracle
// ---------------------------------------------------------------------------
void criterion_oracle_equivalence(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x05);
  double worst = 0.0;
  bool ok = true;
  std::ostringstream why;
  auto run_cell = [&](int r, int d, int smax) {
    const HyperMatrix delta = make_unit_delta(r, d);
    for (int rep = 0; rep < 50; ++rep) {
      const HyperMatrix A = random_symmetric_tensor(rng, r, d);
      for (int sv = 1; sv <= smax; ++sv) {
        const double fast = discriminant(A, sv);
        const double oracle = discriminant_oracle(A, delta, sv);
        const double err = std::fabs(fast - oracle) / std::max(1.0, std::fabs(oracle));
        worst = std::max(worst, err);
        if (err > 1e-10) ok = false;
      }
    }
  };
  for (int r : {2, 3, 4})
    for (int d : {2, 3}) run_cell(r, d, 3);
  run_cell(6, 2, 2);
  if (!ok) why << "max rel err " << fmt(worst);
  s.check(ok, "crit-05-oracle-equivalence",
          ok ? "class-grouped evaluation equals the direct signed-tuple oracle on 50 random "
               "symmetric tensors per cell (max rel err " +
                   fmt(worst) + ")"
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 6: rank-2 regression
// ---------------------------------------------------------------------------
void criterion_rank2(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x06);
  bool ok = true;
  std::ostringstream why;
  double worst_traces = 0.0, worst_vanish = 0.0, worst_poly = 0.0, worst_ch = 0.0,
         worst_inv = 0.0;
  for (int d = 2; d <= 5; ++d) {
    const HyperMatrix delta = make_unit_delta(2, d);
    for (int rep = 0; rep < 10; ++rep) {
      const HyperMatrix a = random_tensor(rng, 2, d);
      const HyperMatrix sym = symmetrize(a);
      for (int sv = 1; sv <= 5; ++sv) {
        const double via_traces = discriminant_from_traces(a, sv);
        const double via_oracle = discriminant_oracle(a, delta, sv);
        const double err =
            std::fabs(via_traces - via_oracle) / std::max(1.0, std::fabs(via_oracle));
        worst_traces = std::max(worst_traces, err);
        if (err > 1e-10) ok = false;
        // the class-grouped fast path against the trace route (symmetric)
        const double fast_err =
            std::fabs(discriminant(sym, sv) - discriminant_from_traces(sym, sv)) /
            std::max(1.0, std::fabs(discriminant_from_traces(sym, sv)));
        worst_traces = std::max(worst_traces, fast_err);
        if (fast_err > 1e-10) ok = false;
        if (sv > d) {
          const double bound = 1e-9 * scale_pow(a.max_abs(), sv);
          worst_vanish = std::max(worst_vanish, std::fabs(via_traces));
          if (std::fabs(via_traces) > bound) {
            ok = false;
            why << "c_" << sv << " not vanishing at d=" << d << "; ";
          }
        }
      }
      // characteristic polynomial pointwise: the monic convention carries
      // a (-1)^d relative to the shifted top discriminant
      const auto poly = char_poly(a);
      const double dsign = (d % 2 == 0) ? 1.0 : -1.0;
      for (int k = 0; k < 5; ++k) {
        const double lambda = rng.uniform(-2.0, 2.0);
        HyperMatrix shifted = a;
        for (int i = 0; i < d; ++i)
          shifted[static_cast<std::size_t>(i) * d + i] -= lambda;
        const double direct = dsign * discriminant_from_traces(shifted, d);
        const double via_poly = poly.evaluate(lambda);
        const double err = std::fabs(direct - via_poly) / std::max(1.0, std::fabs(direct));
        worst_poly = std::max(worst_poly, err);
        if (err > 1e-9) {
          ok = false;
          why << "char poly pointwise err " << fmt(err) << "; ";
        }
      }
      // Cayley-Hamilton residual
      const HyperMatrix res = ch_residual_rank2(a);
      const double bound = 1e-9 * scale_pow(a.max_abs(), d);
      worst_ch = std::max(worst_ch, res.max_abs());
      if (res.max_abs() > bound) {
        ok = false;
        why << "rank-2 CH residual " << fmt(res.max_abs()) << " at d=" << d << "; ";
      }
      // inverse contraction a^{ik} a_{jk} = delta
      try {
        const HyperMatrix inv = inverse_rank2(a);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            double acc = 0.0;
            for (int kk = 0; kk < d; ++kk)
              acc += inv[static_cast<std::size_t>(i) * d + kk] *
                     a[static_cast<std::size_t>(j) * d + kk];
            const double err = std::fabs(acc - (i == j ? 1.0 : 0.0));
            worst_inv = std::max(worst_inv, err);
            if (err > 1e-9) ok = false;
          }
      } catch (const SingularError&) {
        // singular draws simply skip the contraction check
      }
    }
  }
  s.check(ok, "crit-06-rank2-regression",
          ok ? "trace route equals oracle (max rel " + fmt(worst_traces) +
                   "); c_s vanishes for s>d (max " + fmt(worst_vanish) +
                   "); characteristic polynomial pointwise (max rel " + fmt(worst_poly) +
                   "); CH residual max " + fmt(worst_ch) + "; inverse contraction max dev " +
                   fmt(worst_inv)
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 7: rank-4 Cayley-Hamilton
// ---------------------------------------------------------------------------
void criterion_rank4_ch(Suite& s, std::uint64_t seed, bool extended) {
  SeededRng rng(seed ^ 0x07);
  bool ok = true;
  std::ostringstream why;
  double worst2 = 0.0, worst3 = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  for (int d : {2, 3}) {
    for (int rep = 0; rep < 20; ++rep) {
      const HyperMatrix A = random_symmetric_tensor(rng, 4, d);
      const double bound = 1e-8 * scale_pow(A.max_abs(), d);
      const double res = ch_residual_rank4(A).max_abs();
      (d == 2 ? worst2 : worst3) = std::max(d == 2 ? worst2 : worst3, res);
      if (res > bound) {
        ok = false;
        why << "CH residual " << fmt(res) << " at d=" << d << "; ";
      }
    }
  }
  // componentwise identities at d=2 through the explicit symmetric-case
  // formulas for the three bold-column patterns
  double worst_comp = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const HyperMatrix G = random_symmetric_tensor(rng, 4, 2);
    const double g0 = G[0b0000], g1 = G[0b0001], g3 = G[0b0011], g7 = G[0b0111],
                 g15 = G[0b1111];
    const double c2 = c2_sym_rank4_d2(G);
    const double p40[3] = {(g0 + g15) * g0, (g0 + g15) * g1, (g0 + g15) * g3};
    const double p31[3] = {g0 * g0 + g1 * g7,
                           0.25 * (4.0 * g0 * g1 + g1 * g15 + 3.0 * g3 * g7),
                           0.5 * ((g0 + g15) * g3 + g1 * g1 + g7 * g7)};
    const double p22[3] = {g0 * g0 + g3 * g3, g0 * g1 + g3 * g7,
                           (1.0 / 3.0) * ((g0 + g15) * g3 + 2.0 * g1 * g1 + 2.0 * g7 * g7)};
    const double unit[3] = {1.0, 0.0, 0.0};
    for (int e = 0; e < 3; ++e) {
      const double res = p40[e] - 4.0 * p31[e] + 3.0 * p22[e] - c2 * unit[e];
      worst_comp = std::max(worst_comp, std::fabs(res));
      if (std::fabs(res) > 1e-8 * scale_pow(G.max_abs(), 2)) {
        ok = false;
        why << "componentwise identity entry " << e << " residual " << fmt(res) << "; ";
      }
    }
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (dt >= 30.0) {
    ok = false;
    why << "runtime " << fmt(dt) << "s >= 30s; ";
  }
  std::string extended_note;
  if (extended) {
    const auto t1 = std::chrono::steady_clock::now();
    const HyperMatrix A = random_symmetric_tensor(rng, 4, 4);
    const double res = ch_residual_rank4(A).max_abs();
    const double bound = 1e-8 * scale_pow(A.max_abs(), 4);
    const double dt4 =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    if (res > bound || dt4 >= 600.0) {
      ok = false;
      why << "extended d=4 residual " << fmt(res) << " (bound " << fmt(bound) << "); ";
    } else {
      extended_note = "; extended d=4 residual " + fmt(res);
    }
  }
  s.check(ok, "crit-07-rank4-cayley-hamilton",
          ok ? "residual max " + fmt(worst2) + " (d=2) / " + fmt(worst3) +
                   " (d=3) over 20 random symmetric tensors each; componentwise identities at "
                   "d=2 max residual " +
                   fmt(worst_comp) + extended_note
             : why.str());
  {
    // observational: the non-symmetric d=2 case is not asserted
    const HyperMatrix A = random_tensor(rng, 4, 2);
    const double res = ch_residual_rank4(A).max_abs();
    s.info("crit-07-nonsymmetric-observation",
           "fourth-rank CH residual on a random NON-symmetric d=2 tensor: " + fmt(res) +
               " (reported, not asserted)");
  }
}

// ---------------------------------------------------------------------------
// criterion 8: inverses and adjugates
// ---------------------------------------------------------------------------
void criterion_inverses(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x08);
  bool ok = true;
  std::ostringstream why;
  double worst_r2 = 0.0, worst_r4 = 0.0, worst_route = 0.0;
  // rank 2
  for (int d = 2; d <= 5; ++d)
    for (int rep = 0; rep < 5; ++rep) {
      const HyperMatrix a = random_tensor(rng, 2, d);
      try {
        const HyperMatrix inv = inverse_rank2(a);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            double acc = 0.0;
            for (int kk = 0; kk < d; ++kk)
              acc += inv[static_cast<std::size_t>(i) * d + kk] *
                     a[static_cast<std::size_t>(j) * d + kk];
            worst_r2 = std::max(worst_r2, std::fabs(acc - (i == j ? 1.0 : 0.0)));
          }
      } catch (const SingularError&) {
      }
    }
  if (worst_r2 > 1e-9) {
    ok = false;
    why << "rank-2 contraction dev " << fmt(worst_r2) << "; ";
  }
  // rank 4, d = 2 and 3
  for (int d : {2, 3})
    for (int rep = 0; rep < 5; ++rep) {
      const HyperMatrix A = random_tensor(rng, 4, d);
      try {
        const HyperMatrix inv = inverse_even_rank(A);
        // contraction over the trailing three slots
        std::size_t block = static_cast<std::size_t>(d) * d * d;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < block; ++k)
              acc += inv[static_cast<std::size_t>(i) * block + k] *
                     A[static_cast<std::size_t>(j) * block + k];
            worst_r4 = std::max(worst_r4, std::fabs(acc - (i == j ? 1.0 : 0.0)));
          }
        // gradient route equals epsilon route
        const HyperMatrix grad = grad_A(A, d);
        const HyperMatrix adj = adjugate_epsilon(A);
        for (std::size_t k = 0; k < adj.size(); ++k) {
          const double err =
              std::fabs(grad[k] - adj[k]) / std::max(1.0, std::fabs(adj[k]));
          worst_route = std::max(worst_route, err);
        }
      } catch (const SingularError&) {
      }
    }
  if (worst_r4 > 1e-9) {
    ok = false;
    why << "rank-4 contraction dev " << fmt(worst_r4) << "; ";
  }
  if (worst_route > 1e-10) {
    ok = false;
    why << "gradient vs epsilon route rel dev " << fmt(worst_route) << "; ";
  }
  s.check(ok, "crit-08-inverses-adjugates",
          ok ? "inverse contractions to the identity within " + fmt(worst_r2) + " (rank 2) / " +
                   fmt(worst_r4) + " (rank 4, d=2,3); gradient route equals epsilon route (" +
                   fmt(worst_route) + " rel)"
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 9: gradients vs finite differences
// ---------------------------------------------------------------------------
void criterion_gradients(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x09);
  bool ok = true;
  std::ostringstream why;
  double worst_a = 0.0, worst_delta = 0.0;
  const double h = 1e-5;
  for (int r : {2, 4})
    for (int d : {2, 3}) {
      const HyperMatrix A = random_tensor(rng, r, d);
      const HyperMatrix delta = make_unit_delta(r, d);
      const int smax = 3;
      for (int sv = 1; sv <= smax; ++sv) {
        // grad_A against central differences of the oracle
        const HyperMatrix ga = grad_A(A, sv);
        const HyperMatrix fd = fd_gradient(
            [&](const HyperMatrix& X) { return discriminant_oracle(X, delta, sv); }, A, h);
        const double denom = std::max(1.0, ga.max_abs());
        for (std::size_t i = 0; i < ga.size(); ++i)
          worst_a = std::max(worst_a, std::fabs(ga[i] - fd[i]) / denom);

        // grad_Delta against central differences through the generic-unit
        // contraction; full scan at d=2, seeded entry sample at d=3
        const HyperMatrix gd = grad_Delta(A, sv);
        std::vector<std::size_t> probes;
        if (d == 2) {
          for (std::size_t i = 0; i < gd.size(); ++i) probes.push_back(i);
        } else {
          // the generic-unit contraction behind each probe is costly at
          // d=3; sample a seeded handful of entries instead of all 81
          const int count = (sv >= 3) ? 4 : 8;
          for (int t = 0; t < count; ++t)
            probes.push_back(static_cast<std::size_t>(rng.below(gd.size())));
        }
        const double gdenom = std::max(1.0, gd.max_abs());
        for (std::size_t e : probes) {
          HyperMatrix dp = delta, dm = delta;
          dp[e] += h;
          dm[e] -= h;
          double fp = 0.0, fm = 0.0;
          // signed tuple sums with the perturbed unit (generic path)
          const auto& perms = lex_permutations(sv);
          const int nperm = static_cast<int>(perms.size());
          std::vector<int> digits(static_cast<std::size_t>(r - 1), 0);
          std::int64_t fact = 1;
          for (int i = 2; i <= sv; ++i) fact *= i;
          for (;;) {
            std::vector<std::vector<int>> tp;
            for (int k : digits) tp.push_back(perms[static_cast<std::size_t>(k)]);
            const PermutationTuple tuple = PermutationTuple::make(sv, std::move(tp));
            fp += tuple.sign * contract_tuple(A, dp, tuple);
            fm += tuple.sign * contract_tuple(A, dm, tuple);
            if (!odometer_step(digits, nperm)) break;
          }
          const double fd_val = (fp - fm) / (2.0 * h * static_cast<double>(fact));
          worst_delta = std::max(worst_delta, std::fabs(gd[e] - fd_val) / gdenom);
        }
      }
    }
  if (worst_a > 1e-5 || worst_delta > 1e-5) {
    ok = false;
    why << "grad_A dev " << fmt(worst_a) << ", grad_Delta dev " << fmt(worst_delta);
  }
  s.check(ok, "crit-09-gradient-checks",
          ok ? "analytic gradients match central differences at h=1e-5: tensor gradient max "
               "rel " +
                   fmt(worst_a) + ", unit gradient max rel " + fmt(worst_delta) +
                   " (full scan at d=2, seeded entry samples at d=3)"
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 10: third-rank / Cayley chain
// ---------------------------------------------------------------------------
void criterion_thirdrank(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x0a);
  bool ok = true;
  std::ostringstream why;
  double worst_chain = 0.0, worst_inv = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const HyperMatrix a = random_symmetric_tensor(rng, 3, 2);
    const double det18 = 18.0 * thirdrank_det_d2(a);
    const double cayley = cayley_hyperdet(a);
    const double via_g = -g_matrix(a).det_g;
    const double via_six = (4.0 / 3.0) * sixth_rank_det_d2(sixth_rank_embed(a));
    const double scale = std::max(1.0, std::fabs(cayley));
    worst_chain = std::max({worst_chain, std::fabs(det18 - cayley) / scale,
                            std::fabs(via_g - cayley) / scale,
                            std::fabs(via_six - cayley) / scale});
    if (worst_chain > 1e-10) ok = false;
    // inverse defining equation (skip near-singular draws)
    const double amax = a.max_abs();
    if (std::fabs(thirdrank_det_d2(a)) > 1e-6 * scale_pow(amax, 4)) {
      const HyperMatrix inv = thirdrank_inverse_d2(a);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          double acc = 0.0;
          for (int k1 = 0; k1 < 2; ++k1)
            for (int k2 = 0; k2 < 2; ++k2)
              acc += inv[static_cast<std::size_t>(i * 4 + k1 * 2 + k2)] *
                     a[static_cast<std::size_t>(j * 4 + k1 * 2 + k2)];
          worst_inv = std::max(worst_inv, std::fabs(acc - (i == j ? 1.0 : 0.0)));
        }
      if (worst_inv > 1e-9) ok = false;
    }
  }
  // pseudo-inverse defect is generically nonzero
  int nonzero_defect = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const HyperMatrix a = random_symmetric_tensor(rng, 3, 2);
    try {
      if (thirdrank_pseudo_inverse(a).defect > 1e-6) ++nonzero_defect;
    } catch (const SingularError&) {
    }
  }
  if (nonzero_defect < 199) {
    ok = false;
    why << "pseudo-inverse defect nonzero on only " << nonzero_defect << "/200 draws; ";
  }
  // odd-rank epsilon contraction vanishes
  double worst_odd = 0.0;
  bool odd_ok = true;
  for (auto [r, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {5, 2}}) {
    for (int rep = 0; rep < 200; ++rep) {
      const HyperMatrix a = random_tensor(rng, r, d);
      const double v = std::fabs(odd_rank_epsilon_det(a));
      const double bound = 1e-12 * scale_pow(a.max_abs(), d);
      worst_odd = std::max(worst_odd, v);
      if (v > bound) odd_ok = false;
    }
  }
  if (!odd_ok) {
    ok = false;
    why << "odd-rank epsilon contraction not vanishing (max " << fmt(worst_odd) << "); ";
  }
  s.check(ok, "crit-10-thirdrank-cayley-chain",
          ok ? "chain 18*det = hyperdet = -det(g) = (4/3)*sixth-rank det holds on 100 random "
               "symmetric tensors (max rel " +
                   fmt(worst_chain) + "); inverse contraction max dev " + fmt(worst_inv) +
                   "; pseudo-inverse defect nonzero on " + std::to_string(nonzero_defect) +
                   "/200 draws; odd-rank epsilon contraction max " + fmt(worst_odd)
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 11: joint similarity invariance
// ---------------------------------------------------------------------------
void criterion_similarity(Suite& s, std::uint64_t seed) {
  SeededRng rng(seed ^ 0x0b);
  bool ok = true;
  std::ostringstream why;
  double worst = 0.0;
  for (int r : {2, 3, 4})
    for (int d : {2, 3}) {
      const HyperMatrix delta = make_unit_delta(r, d);
      for (int rep = 0; rep < 20; ++rep) {
        const HyperMatrix A = random_tensor(rng, r, d);
        const MatrixTransform U = random_well_conditioned_transform(rng, d);
        const HyperMatrix At = transform_covariant(A, U);
        const HyperMatrix Dt = transform_contravariant(delta, U);
        for (int sv = 1; sv <= 3; ++sv) {
          const double base = discriminant_oracle(A, delta, sv);
          const double transformed = discriminant_oracle(At, Dt, sv);
          if (sv > d) {
            // both sides vanish identically above the dimension
            const double bound = 1e-9 * scale_pow(std::max(A.max_abs(), At.max_abs()), sv);
            if (std::fabs(base) > bound || std::fabs(transformed) > bound) {
              ok = false;
              why << "r=" << r << " d=" << d << " s=" << sv << " not vanishing; ";
            }
            continue;
          }
          const double err = std::fabs(transformed - base) /
                             std::max(std::fabs(base), 1e-6);
          worst = std::max(worst, err);
          if (err > 1e-8) {
            ok = false;
            why << "r=" << r << " d=" << d << " s=" << sv << " rel dev " << fmt(err) << "; ";
          }
        }
      }
    }
  s.check(ok, "crit-11-similarity-invariance",
          ok ? "discriminants invariant under joint covariant/contravariant transforms "
               "(r in {2,3,4}, d in {2,3}, 20 well-conditioned transforms each; max rel dev " +
                   fmt(worst) + ")"
             : why.str());
}

// ---------------------------------------------------------------------------
// criterion 12: series
// ---------------------------------------------------------------------------
void criterion_series(Suite& s) {
  bool ok = true;
  std::ostringstream why;
  const auto p = partition_count_series(9);
  const auto& pref = reference::partition_count_reference();
  for (int i = 0; i <= 9; ++i)
    if (p[static_cast<std::size_t>(i)] != pref[static_cast<std::size_t>(i)]) {
      ok = false;
      why << "p(" << i << ")=" << p[static_cast<std::size_t>(i)] << " expected "
          << pref[static_cast<std::size_t>(i)] << "; ";
    }
  const auto b = rank4_class_count_series(8);
  const auto& bref = reference::rank4_series_reference();
  for (int i = 0; i <= 8; ++i)
    if (b[static_cast<std::size_t>(i)] != bref[static_cast<std::size_t>(i)]) {
      ok = false;
      why << "series(" << i << ")=" << b[static_cast<std::size_t>(i)] << " expected "
          << bref[static_cast<std::size_t>(i)] << "; ";
    }
  // partitions(n) count equals p(n)
  for (int n = 1; n <= 12; ++n) {
    const auto parts = partitions(n);
    const auto series = partition_count_series(n);
    if (static_cast<std::int64_t>(parts.size()) != series[static_cast<std::size_t>(n)]) {
      ok = false;
      why << "partitions(" << n << ") count != series; ";
    }
  }
  s.check(ok, "crit-12-series",
          ok ? "partition counts 1,1,2,3,5,7,11,15,22,30 and class-count series 1,1,3,9,36 "
               "(continuing 168, 961, 6403, 49302) reproduced exactly"
             : why.str());
  s.warn("crit-12-series-vs-classes",
         "the generating-function series gives 36 at order 4 while enumeration finds 43 "
         "row/column classes (the publication exhibits 40); the series is reported as a "
         "lower bound whose exact combinatorial meaning is left open");
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Warn:
      return "WARN";
    case CheckStatus::Info:
      return "INFO";
  }
  return "????";
}

bool VerifyReport::all_passed() const {
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) return false;
  return true;
}

int VerifyReport::count(CheckStatus s) const {
  int c = 0;
  for (const auto& r : results)
    if (r.status == s) ++c;
  return c;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  Suite s{report.results};
  criterion_counts(s);
  criterion_classes(s);
  criterion_expansions(s, options.extended);
  criterion_census(s);
  criterion_oracle_equivalence(s, options.seed);
  criterion_rank2(s, options.seed);
  criterion_rank4_ch(s, options.seed, options.extended);
  criterion_inverses(s, options.seed);
  criterion_gradients(s, options.seed);
  criterion_thirdrank(s, options.seed);
  criterion_similarity(s, options.seed);
  criterion_series(s);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& r : report.results) {
    os << to_string(r.status) << "  ";
    os << r.name;
    for (std::size_t i = r.name.size(); i < 36; ++i) os << ' ';
    os << ' ' << r.detail << '\n';
  }
  os << "SUMMARY " << report.count(CheckStatus::Pass) << " passed, "
     << report.count(CheckStatus::Fail) << " failed, " << report.count(CheckStatus::Warn)
     << " warnings, " << report.count(CheckStatus::Info) << " informational\n";
  return os.str();
}

}  // namespace hyperinv
