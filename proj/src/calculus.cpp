#include "hyperinv/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperinv/config.hpp"
#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

template <typename F>
void for_each_signed_tuple(int rank, int order, F&& visit) {
  const auto& perms = lex_permutations(order);
  const int nperm = static_cast<int>(perms.size());
  const int free_count = rank - 1;
  std::vector<int> digits(static_cast<std::size_t>(free_count), 0);
  std::vector<int> signs(perms.size());
  for (int i = 0; i < nperm; ++i)
    signs[static_cast<std::size_t>(i)] = permutation_parity(perms[static_cast<std::size_t>(i)]);
  do {
    int sign = 1;
    for (int k = 0; k < free_count; ++k)
      sign *= signs[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
    visit(digits, sign);
  } while (odometer_step(digits, nperm));
}

}  // namespace

double CharacteristicPolynomial::evaluate(double lambda) const {
  double acc = 0.0;
  for (int k = 0; k <= degree; ++k) {
    double pw = 1.0;
    for (int i = 0; i < degree - k; ++i) pw *= lambda;
    acc += ((k % 2 == 0) ? 1.0 : -1.0) * coefficients[static_cast<std::size_t>(k)] * pw;
  }
  return acc;
}

HyperMatrix grad_A(const HyperMatrix& A, int s) {
  if (s < 1) throw std::invalid_argument("grad_A: s must be >= 1");
  check_expansion_budget(A.rank(), s);
  const int n = s, r = A.rank(), d = A.dim();
  const auto& perms = lex_permutations(n);
  HyperMatrix out(r, d, Variance::contravariant);

  std::vector<std::size_t> weight(static_cast<std::size_t>(r));
  {
    std::size_t w = 1;
    for (int k = r - 1; k >= 0; --k) {
      weight[static_cast<std::size_t>(k)] = w;
      w *= static_cast<std::size_t>(d);
    }
  }

  std::vector<std::size_t> idxs(static_cast<std::size_t>(n));
  std::vector<double> vals(static_cast<std::size_t>(n));
  std::vector<double> prefix(static_cast<std::size_t>(n) + 1);
  std::vector<double> suffix(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> taus(static_cast<std::size_t>(r));

  for_each_signed_tuple(r, n, [&](const std::vector<int>& digits, int sign) {
    taus[0].assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) taus[0][static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < r - 1; ++k)
      taus[static_cast<std::size_t>(k) + 1] =
          invert_permutation(perms[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])]);

    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (;;) {
      for (int I = 0; I < n; ++I) {
        std::size_t flat = 0;
        for (int k = 0; k < r; ++k)
          flat += static_cast<std::size_t>(
                      v[static_cast<std::size_t>(taus[static_cast<std::size_t>(k)][static_cast<std::size_t>(I)])]) *
                  weight[static_cast<std::size_t>(k)];
        idxs[static_cast<std::size_t>(I)] = flat;
        vals[static_cast<std::size_t>(I)] = A[flat];
      }
      prefix[0] = 1.0;
      for (int I = 0; I < n; ++I) prefix[static_cast<std::size_t>(I) + 1] = prefix[static_cast<std::size_t>(I)] * vals[static_cast<std::size_t>(I)];
      suffix[static_cast<std::size_t>(n)] = 1.0;
      for (int I = n - 1; I >= 0; --I) suffix[static_cast<std::size_t>(I)] = suffix[static_cast<std::size_t>(I) + 1] * vals[static_cast<std::size_t>(I)];
      for (int I = 0; I < n; ++I)
        out[idxs[static_cast<std::size_t>(I)]] +=
            sign * prefix[static_cast<std::size_t>(I)] * suffix[static_cast<std::size_t>(I) + 1];
      if (!odometer_step(v, d)) break;
    }
  });
  const double inv_fact = 1.0 / static_cast<double>(factorial64(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= inv_fact;
  return out;
}

HyperMatrix grad_Delta(const HyperMatrix& A, const HyperMatrix& Delta, int s) {
  if (!is_unit_delta(Delta))
    throw std::invalid_argument("grad_Delta: only the diagonal unit background is supported");
  return grad_Delta(A, s);
}

HyperMatrix grad_Delta(const HyperMatrix& A, int s) {
  if (s < 1) throw std::invalid_argument("grad_Delta: s must be >= 1");
  check_expansion_budget(A.rank(), s);
  const int n = s, r = A.rank(), d = A.dim();
  const auto& perms = lex_permutations(n);
  HyperMatrix out(r, d, Variance::covariant);
  const std::size_t er = out.size();  // d^r

  // inv[m][I] = the unit factor feeding slot m of tensor factor I
  std::vector<std::vector<int>> inv(static_cast<std::size_t>(r));

  std::vector<int> others;
  std::vector<int> v(static_cast<std::size_t>(n), 0);

  for_each_signed_tuple(r, n, [&](const std::vector<int>& digits, int sign) {
    inv[0].assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) inv[0][static_cast<std::size_t>(i)] = i;
    for (int k = 0; k < r - 1; ++k)
      inv[static_cast<std::size_t>(k) + 1] =
          invert_permutation(perms[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])]);

    for (int J = 0; J < n; ++J) {
      // tensor factors untouched by the left-out unit factor J
      std::vector<char> touched(static_cast<std::size_t>(n), 0);
      for (int m = 0; m < r; ++m) {
        // factor I touched iff inv[m][I] == J, i.e. I = sigma_m(J)
        for (int I = 0; I < n; ++I)
          if (inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(I)] == J)
            touched[static_cast<std::size_t>(I)] = 1;
      }
      others.clear();
      for (int J2 = 0; J2 < n; ++J2)
        if (J2 != J) others.push_back(J2);

      std::vector<int> vo(static_cast<std::size_t>(n) - 1, 0);
      for (;;) {
        for (std::size_t t = 0; t < others.size(); ++t)
          v[static_cast<std::size_t>(others[t])] = vo[t];
        double base = 1.0;
        for (int I = 0; I < n; ++I) {
          if (touched[static_cast<std::size_t>(I)]) continue;
          std::size_t flat = 0;
          for (int m = 0; m < r; ++m)
            flat = flat * static_cast<std::size_t>(d) +
                   static_cast<std::size_t>(v[static_cast<std::size_t>(
                       inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(I)])]);
          base *= A[flat];
        }
        if (base != 0.0) {
          // loop over the left-out factor's free indices e (flattened)
          std::vector<int> e(static_cast<std::size_t>(r), 0);
          for (std::size_t eflat = 0; eflat < er; ++eflat) {
            double prod = base;
            for (int I = 0; I < n && prod != 0.0; ++I) {
              if (!touched[static_cast<std::size_t>(I)]) continue;
              std::size_t flat = 0;
              for (int m = 0; m < r; ++m) {
                const int src = inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(I)];
                flat = flat * static_cast<std::size_t>(d) +
                       static_cast<std::size_t>(src == J ? e[static_cast<std::size_t>(m)]
                                                         : v[static_cast<std::size_t>(src)]);
              }
              prod *= A[flat];
            }
            out[eflat] += sign * prod;
            odometer_step(e, d);
          }
        }
        std::size_t pos = others.size();
        while (pos > 0 && ++vo[pos - 1] == d) vo[--pos] = 0;
        if (pos == 0) break;
      }
    }
  });
  const double inv_fact = 1.0 / static_cast<double>(factorial64(n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= inv_fact;
  return out;
}

CharacteristicPolynomial char_poly(const HyperMatrix& a) {
  if (a.rank() != 2) throw std::invalid_argument("char_poly: rank-2 input required");
  const int d = a.dim();
  CharacteristicPolynomial p;
  p.degree = d;
  p.coefficients.resize(static_cast<std::size_t>(d) + 1);
  p.coefficients[0] = 1.0;
  for (int k = 1; k <= d; ++k)
    p.coefficients[static_cast<std::size_t>(k)] = discriminant_from_traces(a, k);
  return p;
}

HyperMatrix matrix_multiply(const HyperMatrix& a, const HyperMatrix& b) {
  if (a.rank() != 2 || b.rank() != 2 || a.dim() != b.dim())
    throw std::invalid_argument("matrix_multiply: rank-2 inputs of equal dim required");
  const int d = a.dim();
  HyperMatrix out(2, d, a.variance());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k)
        acc += a[static_cast<std::size_t>(i) * d + k] * b[static_cast<std::size_t>(k) * d + j];
      out[static_cast<std::size_t>(i) * d + j] = acc;
    }
  return out;
}

HyperMatrix ch_residual_rank2(const HyperMatrix& a) {
  if (a.rank() != 2) throw std::invalid_argument("ch_residual_rank2: rank-2 input required");
  const int d = a.dim();
  const auto poly = char_poly(a);
  HyperMatrix power(2, d, a.variance());  // a^0 = I
  for (int i = 0; i < d; ++i) power[static_cast<std::size_t>(i) * d + i] = 1.0;
  // accumulate from k = d (power a^0) down to k = 0 (power a^d)
  HyperMatrix acc(2, d, a.variance());
  for (int exp = 0; exp <= d; ++exp) {
    const int k = d - exp;
    const double c = ((k % 2 == 0) ? 1.0 : -1.0) * poly.coefficients[static_cast<std::size_t>(k)];
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * power[i];
    if (exp < d) power = matrix_multiply(power, a);
  }
  return acc;
}

HyperMatrix inverse_rank2(const HyperMatrix& a) {
  if (a.rank() != 2) throw std::invalid_argument("inverse_rank2: rank-2 input required");
  const int d = a.dim();
  const double cd = discriminant_from_traces(a, d);
  double scale_d = 1.0;
  for (int i = 0; i < d; ++i) scale_d *= std::max(a.max_abs(), 1e-300);
  if (!(std::fabs(cd) > 1e-12 * scale_d))
    throw SingularError("inverse_rank2: |c_d| = " + std::to_string(cd) + " below threshold");
  HyperMatrix g = grad_A(a, d);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] /= cd;
  return g;  // contravariant; satisfies a^{ik} a_{jk} = delta^i_j
}

HyperMatrix adjugate_epsilon(const HyperMatrix& A) {
  const int r = A.rank(), d = A.dim();
  if (r % 2 != 0)
    throw std::invalid_argument("adjugate_epsilon: odd rank (identically-zero epsilon route)");
  if (d < 2) throw std::invalid_argument("adjugate_epsilon: d >= 2 required");
  const auto& perms = lex_permutations(d);
  HyperMatrix out(r, d, Variance::contravariant);

  // per-slot candidates: permutations of [0,d) with a fixed leading value
  std::vector<std::vector<int>> by_first(static_cast<std::size_t>(d));
  for (int pi = 0; pi < static_cast<int>(perms.size()); ++pi)
    by_first[static_cast<std::size_t>(perms[static_cast<std::size_t>(pi)][0])].push_back(pi);

  std::vector<int> e(static_cast<std::size_t>(r), 0);
  for (std::size_t eflat = 0; eflat < out.size(); ++eflat) {
    // choose one permutation per epsilon factor, leading entry pinned to e_m
    std::vector<int> choice(static_cast<std::size_t>(r), 0);
    double total = 0.0;
    for (;;) {
      double prod = 1.0;
      int sign = 1;
      for (int m = 0; m < r; ++m) {
        const auto& p = perms[static_cast<std::size_t>(
            by_first[static_cast<std::size_t>(e[static_cast<std::size_t>(m)])]
                    [static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])])];
        sign *= permutation_parity(p);
      }
      for (int t = 1; t < d && prod != 0.0; ++t) {
        std::size_t flat = 0;
        for (int m = 0; m < r; ++m) {
          const auto& p = perms[static_cast<std::size_t>(
              by_first[static_cast<std::size_t>(e[static_cast<std::size_t>(m)])]
                      [static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])])];
          flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(p[static_cast<std::size_t>(t)]);
        }
        prod *= A[flat];
      }
      total += sign * prod;
      if (!odometer_step(choice, static_cast<int>(by_first[0].size()))) break;
    }
    out[eflat] = total / static_cast<double>(factorial64(d - 1));
    odometer_step(e, d);
  }
  return out;
}

HyperMatrix inverse_even_rank(const HyperMatrix& A) {
  const int d = A.dim();
  HyperMatrix adj = adjugate_epsilon(A);
  // det = (1/d) * full contraction of the adjugate with A
  double det = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) det += adj[i] * A[i];
  det /= static_cast<double>(d);
  double scale_d = 1.0;
  for (int i = 0; i < d; ++i) scale_d *= std::max(A.max_abs(), 1e-300);
  if (!(std::fabs(det) > 1e-12 * scale_d))
    throw SingularError("inverse_even_rank: determinant below threshold");
  for (std::size_t i = 0; i < adj.size(); ++i) adj[i] /= det;
  return adj;
}

NewtonTraces newton_traces(std::span<const double> discriminants, int rank, int s) {
  if (rank != 2 && rank != 4)
    throw std::invalid_argument("newton_traces: rank must be 2 or 4");
  if (s < 1 || s > 4) throw std::invalid_argument("newton_traces: 1 <= s <= 4");
  if (static_cast<int>(discriminants.size()) < s)
    throw std::invalid_argument("newton_traces: need discriminants c_1..c_s");
  const double c1 = discriminants[0];
  const double c2 = s >= 2 ? discriminants[1] : 0.0;
  const double c3 = s >= 3 ? discriminants[2] : 0.0;
  const double c4 = s >= 4 ? discriminants[3] : 0.0;
  NewtonTraces t;
  t.values.push_back(c1);
  if (s >= 2) t.values.push_back(0.5 * c1 * c1 - c2);
  if (s >= 3) t.values.push_back(c1 * c1 * c1 / 3.0 - c1 * c2 + c3);
  if (s >= 4)
    t.values.push_back(0.25 * c1 * c1 * c1 * c1 - c1 * c1 * c2 + c1 * c3 + 0.5 * c2 * c2 - c4);
  return t;
}

HyperMatrix power_tensor(const HyperMatrix& A, const HyperMatrix& Delta, int s) {
  if (!is_unit_delta(Delta))
    throw std::invalid_argument("power_tensor: only the diagonal unit background is supported");
  return power_tensor(A, s);
}

HyperMatrix power_tensor(const HyperMatrix& A, int s) {
  if (A.rank() != 4) throw std::invalid_argument("power_tensor: rank-4 input required");
  if (s < 1 || s > 4) throw std::invalid_argument("power_tensor: 1 <= s <= 4");
  // (A^s) = dT_s/dDelta expanded by the chain rule over C_k and their gradients
  const double C1 = s >= 2 ? discriminant(A, 1) : 0.0;
  const double C2 = s >= 3 ? discriminant(A, 2) : 0.0;
  const double C3 = s >= 4 ? discriminant(A, 3) : 0.0;
  HyperMatrix G1 = grad_Delta(A, 1);
  if (s == 1) return G1;
  HyperMatrix G2 = grad_Delta(A, 2);
  HyperMatrix out(4, A.dim(), Variance::covariant);
  if (s == 2) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = C1 * G1[i] - G2[i];
    return out;
  }
  HyperMatrix G3 = grad_Delta(A, 3);
  if (s == 3) {
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = (C1 * C1 - C2) * G1[i] - C1 * G2[i] + G3[i];
    return out;
  }
  HyperMatrix G4 = grad_Delta(A, 4);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (C1 * C1 * C1 - 2.0 * C1 * C2 + C3) * G1[i] + (C2 - C1 * C1) * G2[i] +
             C1 * G3[i] - G4[i];
  return out;
}

double bracket_trace(const HyperMatrix& A, const HyperMatrix& Delta, int s) {
  if (!is_unit_delta(Delta))
    throw std::invalid_argument("bracket_trace: only the diagonal unit background is supported");
  return bracket_trace(A, s);
}

double bracket_trace(const HyperMatrix& A, int s) {
  const HyperMatrix P = power_tensor(A, s);
  const int d = A.dim();
  std::size_t step = 0;
  for (int k = 0; k < 4; ++k) step = step * static_cast<std::size_t>(d) + 1;
  double tr = 0.0;
  for (int i = 0; i < d; ++i) tr += P[static_cast<std::size_t>(i) * step];
  return tr;
}

HyperMatrix ch_residual_rank4(const HyperMatrix& A) {
  if (A.rank() != 4) throw std::invalid_argument("ch_residual_rank4: rank-4 input required");
  const int d = A.dim();
  if (d > 4) throw std::invalid_argument("ch_residual_rank4: d <= 4 (power chain limit)");
  HyperMatrix acc = make_unit_delta_covariant(4, d);  // (A^0) term, k = d
  {
    const double cd = discriminant(A, d);
    const double sgn = (d % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] *= sgn * cd;
  }
  for (int k = 0; k < d; ++k) {
    const double ck = (k == 0) ? 1.0 : discriminant(A, k);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    const HyperMatrix P = power_tensor(A, d - k);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += sgn * ck * P[i];
  }
  return acc;
}

}  // namespace hyperinv
