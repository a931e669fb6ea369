#include "hyperinv/special_cases.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "hyperinv/errors.hpp"
#include "hyperinv/permutation.hpp"

namespace hyperinv {

namespace {

std::int64_t factorial64(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_shape(const HyperMatrix& A, int rank, int dim, const char* who) {
  if (A.rank() != rank || A.dim() != dim)
    throw std::invalid_argument(std::string(who) + ": expected rank " + std::to_string(rank) +
                                ", dim " + std::to_string(dim));
}

// flat accessor for rank-3 d=2 (binary digits)
inline double a3(const HyperMatrix& a, int i, int j, int k) {
  return a[static_cast<std::size_t>(i * 4 + j * 2 + k)];
}

}  // namespace

double det_rank4_d2(const HyperMatrix& A) {
  require_shape(A, 4, 2, "det_rank4_d2");
  auto e = [&](int i, int j, int k, int l) {
    return A[static_cast<std::size_t>(i * 8 + j * 4 + k * 2 + l)];
  };
  return e(0, 0, 0, 0) * e(1, 1, 1, 1) -
         (e(0, 0, 0, 1) * e(1, 1, 1, 0) + e(0, 0, 1, 0) * e(1, 1, 0, 1) +
          e(0, 1, 0, 0) * e(1, 0, 1, 1) + e(1, 0, 0, 0) * e(0, 1, 1, 1)) +
         (e(0, 0, 1, 1) * e(1, 1, 0, 0) + e(0, 1, 0, 1) * e(1, 0, 1, 0) +
          e(1, 0, 0, 1) * e(0, 1, 1, 0));
}

double c2_sym_rank4_d2(const HyperMatrix& G) {
  require_shape(G, 4, 2, "c2_sym_rank4_d2");
  if (!is_symmetric(G)) throw std::invalid_argument("c2_sym_rank4_d2: symmetric input required");
  const double g0000 = G[0b0000], g1111 = G[0b1111];
  const double g0001 = G[0b0001], g0111 = G[0b0111], g0011 = G[0b0011];
  return g0000 * g1111 - 4.0 * g0001 * g0111 + 3.0 * g0011 * g0011;
}

std::pair<double, double> thirdrank_discriminants_d2(const HyperMatrix& a) {
  require_shape(a, 3, 2, "thirdrank_discriminants_d2");
  const double c1 = a3(a, 0, 0, 0) + a3(a, 1, 1, 1);
  const double c2 = a3(a, 0, 0, 0) * a3(a, 1, 1, 1) -
                    (a3(a, 0, 0, 1) * a3(a, 1, 1, 0) + a3(a, 0, 1, 0) * a3(a, 1, 0, 1) +
                     a3(a, 1, 0, 0) * a3(a, 0, 1, 1)) /
                        3.0;
  return {c1, c2};
}

PseudoInverseResult thirdrank_pseudo_inverse(const HyperMatrix& a) {
  require_shape(a, 3, 2, "thirdrank_pseudo_inverse");
  if (!is_symmetric(a))
    throw std::invalid_argument("thirdrank_pseudo_inverse: symmetric input required");
  const double c2 = thirdrank_discriminants_d2(a).second;
  if (!(std::fabs(c2) > 1e-12 * std::max(1e-300, a.max_abs() * a.max_abs())))
    throw SingularError("thirdrank_pseudo_inverse: C2 ~ 0");
  HyperMatrix inv(3, 2, Variance::contravariant);
  // formal gradient of the written form of C2
  inv[0b000] = a[0b111];
  inv[0b001] = -a[0b110] / 3.0;
  inv[0b010] = -a[0b101] / 3.0;
  inv[0b100] = -a[0b011] / 3.0;
  inv[0b110] = -a[0b001] / 3.0;
  inv[0b101] = -a[0b010] / 3.0;
  inv[0b011] = -a[0b100] / 3.0;
  inv[0b111] = a[0b000];
  for (std::size_t i = 0; i < inv.size(); ++i) inv[i] /= c2;
  double defect = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0.0;
      for (int k1 = 0; k1 < 2; ++k1)
        for (int k2 = 0; k2 < 2; ++k2)
          s += inv[static_cast<std::size_t>(i * 4 + k1 * 2 + k2)] *
               a[static_cast<std::size_t>(j * 4 + k1 * 2 + k2)];
      defect = std::max(defect, std::fabs(s - (i == j ? 1.0 : 0.0)));
    }
  return {std::move(inv), defect};
}

namespace {

// determinant of a symmetric rank-3 d=2 tensor as a function of the full
// array; off-diagonal representatives enter through their slot averages so
// that formal gradients carry the 1/3 multiplicities.
double third_det_full(const HyperMatrix& a) {
  const double a0 = a[0b000], a3v = a[0b111];
  const double s1 = (a[0b001] + a[0b010] + a[0b100]) / 3.0;
  const double s2 = (a[0b011] + a[0b101] + a[0b110]) / 3.0;
  return (a0 * a0 * a3v * a3v - 6.0 * a0 * s1 * s2 * a3v + 4.0 * a0 * s2 * s2 * s2 +
          4.0 * a3v * s1 * s1 * s1 - 3.0 * s1 * s1 * s2 * s2) /
         18.0;
}

}  // namespace

double thirdrank_det_d2(const HyperMatrix& a) {
  require_shape(a, 3, 2, "thirdrank_det_d2");
  if (!is_symmetric(a)) throw std::invalid_argument("thirdrank_det_d2: symmetric input required");
  return third_det_full(a);
}

HyperMatrix thirdrank_inverse_d2(const HyperMatrix& a) {
  require_shape(a, 3, 2, "thirdrank_inverse_d2");
  if (!is_symmetric(a))
    throw std::invalid_argument("thirdrank_inverse_d2: symmetric input required");
  const double det = third_det_full(a);
  const double amax = std::max(a.max_abs(), 1e-300);
  if (!(std::fabs(det) > 1e-12 * amax * amax * amax * amax))
    throw SingularError("thirdrank_inverse_d2: determinant ~ 0");

  // analytic formal gradient of third_det_full
  const double a0 = a[0b000], a7 = a[0b111];
  const double s1 = (a[0b001] + a[0b010] + a[0b100]) / 3.0;
  const double s2 = (a[0b011] + a[0b101] + a[0b110]) / 3.0;
  const double d_a0 = (2.0 * a0 * a7 * a7 - 6.0 * s1 * s2 * a7 + 4.0 * s2 * s2 * s2) / 18.0;
  const double d_a7 = (2.0 * a0 * a0 * a7 - 6.0 * a0 * s1 * s2 + 4.0 * s1 * s1 * s1) / 18.0;
  const double d_s1 = (-6.0 * a0 * s2 * a7 + 12.0 * a7 * s1 * s1 - 6.0 * s1 * s2 * s2) / 18.0;
  const double d_s2 = (-6.0 * a0 * s1 * a7 + 12.0 * a0 * s2 * s2 - 6.0 * s1 * s1 * s2) / 18.0;

  HyperMatrix grad(3, 2, Variance::contravariant);
  grad[0b000] = d_a0;
  grad[0b111] = d_a7;
  grad[0b001] = grad[0b010] = grad[0b100] = d_s1 / 3.0;
  grad[0b011] = grad[0b101] = grad[0b110] = d_s2 / 3.0;
  for (std::size_t i = 0; i < grad.size(); ++i) grad[i] /= 2.0 * det;
  return grad;
}

double odd_rank_epsilon_det(const HyperMatrix& a) {
  const int r = a.rank(), d = a.dim();
  if (r % 2 == 0) throw std::invalid_argument("odd_rank_epsilon_det: odd rank required");
  const auto& perms = lex_permutations(d);
  const int nperm = static_cast<int>(perms.size());
  std::vector<int> parity(perms.size());
  for (int i = 0; i < nperm; ++i)
    parity[static_cast<std::size_t>(i)] = permutation_parity(perms[static_cast<std::size_t>(i)]);
  std::vector<int> choice(static_cast<std::size_t>(r), 0);
  double total = 0.0;
  for (;;) {
    int sign = 1;
    for (int m = 0; m < r; ++m) sign *= parity[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])];
    double prod = 1.0;
    for (int t = 0; t < d && prod != 0.0; ++t) {
      std::size_t flat = 0;
      for (int m = 0; m < r; ++m)
        flat = flat * static_cast<std::size_t>(d) +
               static_cast<std::size_t>(
                   perms[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])][static_cast<std::size_t>(t)]);
      prod *= a[flat];
    }
    total += sign * prod;
    if (!odometer_step(choice, nperm)) break;
  }
  return total;
}

double epsilon_det(const HyperMatrix& A) {
  const int r = A.rank(), d = A.dim();
  if (r % 2 != 0) throw std::invalid_argument("epsilon_det: even rank required");
  const auto& perms = lex_permutations(d);
  const int nperm = static_cast<int>(perms.size());
  std::vector<int> parity(perms.size());
  for (int i = 0; i < nperm; ++i)
    parity[static_cast<std::size_t>(i)] = permutation_parity(perms[static_cast<std::size_t>(i)]);
  std::vector<int> choice(static_cast<std::size_t>(r), 0);
  double total = 0.0;
  for (;;) {
    int sign = 1;
    for (int m = 0; m < r; ++m) sign *= parity[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])];
    double prod = 1.0;
    for (int t = 0; t < d && prod != 0.0; ++t) {
      std::size_t flat = 0;
      for (int m = 0; m < r; ++m)
        flat = flat * static_cast<std::size_t>(d) +
               static_cast<std::size_t>(
                   perms[static_cast<std::size_t>(choice[static_cast<std::size_t>(m)])][static_cast<std::size_t>(t)]);
      prod *= A[flat];
    }
    total += sign * prod;
    if (!odometer_step(choice, nperm)) break;
  }
  return total / static_cast<double>(factorial64(d));
}

double cayley_hyperdet(const HyperMatrix& a) {
  require_shape(a, 3, 2, "cayley_hyperdet");
  const double a000 = a3(a, 0, 0, 0), a001 = a3(a, 0, 0, 1), a010 = a3(a, 0, 1, 0),
               a011 = a3(a, 0, 1, 1), a100 = a3(a, 1, 0, 0), a101 = a3(a, 1, 0, 1),
               a110 = a3(a, 1, 1, 0), a111 = a3(a, 1, 1, 1);
  const double squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
                         a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
  const double cross =
      a000 * a111 * (a001 * a110 + a010 * a101 + a100 * a011) +
      a001 * a010 * a101 * a110 + a001 * a011 * a110 * a100 + a010 * a011 * a101 * a100;
  const double quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
  return squares - 2.0 * cross + 4.0 * quads;
}

GMatrixResult g_matrix(const HyperMatrix& a) {
  require_shape(a, 3, 2, "g_matrix");
  auto eps = [](int x, int y) { return x == y ? 0.0 : (x < y ? 1.0 : -1.0); };
  HyperMatrix g(2, 2, Variance::covariant);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      double s = 0.0;
      for (int k1 = 0; k1 < 2; ++k1)
        for (int k2 = 0; k2 < 2; ++k2)
          for (int l1 = 0; l1 < 2; ++l1)
            for (int l2 = 0; l2 < 2; ++l2)
              s += a3(a, i, k1, k2) * a3(a, j, l1, l2) * eps(k1, l1) * eps(k2, l2);
      g[static_cast<std::size_t>(i * 2 + j)] = s;
    }
  const double det_g = g[0] * g[3] - g[1] * g[2];
  return {std::move(g), det_g};
}

HyperMatrix sixth_rank_embed(const HyperMatrix& a) {
  require_shape(a, 3, 2, "sixth_rank_embed");
  HyperMatrix out(6, 2, Variance::covariant);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int k1 = 0; k1 < 2; ++k1)
        for (int i2 = 0; i2 < 2; ++i2)
          for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
              const double v = 0.25 * (a3(a, i1, j1, k1) * a3(a, i2, j2, k2) +
                                       a3(a, i1, j1, k2) * a3(a, i2, j2, k1) +
                                       a3(a, i1, j2, k1) * a3(a, i2, j1, k2) +
                                       a3(a, i2, j1, k1) * a3(a, i1, j2, k2));
              out[static_cast<std::size_t>(
                  ((((i1 * 2 + j1) * 2 + k1) * 2 + i2) * 2 + j2) * 2 + k2)] = v;
            }
  return out;
}

double sixth_rank_det_d2(const HyperMatrix& A6) {
  require_shape(A6, 6, 2, "sixth_rank_det_d2");
  // (1/2) sum_x (-1)^|x| A_x A_xbar over the 64 binary index words
  double total = 0.0;
  for (std::size_t x = 0; x < 64; ++x) {
    const int bits = __builtin_popcount(static_cast<unsigned>(x));
    const std::size_t xbar = (~x) & 0x3f;
    total += ((bits % 2 == 0) ? 1.0 : -1.0) * A6[x] * A6[xbar];
  }
  return total / 2.0;
}

}  // namespace hyperinv
