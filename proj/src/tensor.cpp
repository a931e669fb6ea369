#include "hyperinv/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperinv/config.hpp"
#include "hyperinv/errors.hpp"

namespace hyperinv {

namespace {

std::size_t pow_sz(int base, int exp) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) v *= static_cast<std::size_t>(base);
  return v;
}

}  // namespace

const char* to_string(Variance v) {
  return v == Variance::covariant ? "covariant" : "contravariant";
}

HyperMatrix::HyperMatrix(int rank, int dim, Variance variance)
    : rank_(rank), dim_(dim), variance_(variance) {
  if (rank < 1 || dim < 1) throw std::invalid_argument("HyperMatrix: rank and dim must be positive");
  data_.assign(pow_sz(dim, rank), 0.0);
}

HyperMatrix::HyperMatrix(int rank, int dim, Variance variance, std::vector<double> data)
    : rank_(rank), dim_(dim), variance_(variance), data_(std::move(data)) {
  if (rank < 1 || dim < 1) throw std::invalid_argument("HyperMatrix: rank and dim must be positive");
  if (data_.size() != pow_sz(dim, rank))
    throw std::invalid_argument("HyperMatrix: data length " + std::to_string(data_.size()) +
                                " != dim^rank");
  for (double x : data_)
    if (!std::isfinite(x)) throw std::invalid_argument("HyperMatrix: non-finite entry");
}

std::size_t HyperMatrix::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank_)
    throw std::invalid_argument("HyperMatrix: index tuple length != rank");
  std::size_t flat = 0;
  for (int i : idx) {
    if (i < 0 || i >= dim_) throw std::out_of_range("HyperMatrix: index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

double HyperMatrix::max_abs() const {
  double m = 0.0;
  for (double x : data_) m = std::max(m, std::fabs(x));
  return m;
}

HyperMatrix HyperMatrix::with_variance(Variance v) const {
  return HyperMatrix(rank_, dim_, v, data_);
}

MatrixTransform::MatrixTransform(int dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1) throw std::invalid_argument("MatrixTransform: dim must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim))
    throw std::invalid_argument("MatrixTransform: entries length != dim^2");

  // Gauss-Jordan with partial pivoting on [M | I]
  const int d = dim_;
  std::vector<double> m = entries_;
  std::vector<double> inv(static_cast<std::size_t>(d) * d, 0.0);
  for (int i = 0; i < d; ++i) inv[static_cast<std::size_t>(i) * d + i] = 1.0;
  det_ = 1.0;
  for (int col = 0; col < d; ++col) {
    int pivot = col;
    for (int row = col + 1; row < d; ++row)
      if (std::fabs(m[static_cast<std::size_t>(row) * d + col]) >
          std::fabs(m[static_cast<std::size_t>(pivot) * d + col]))
        pivot = row;
    if (pivot != col) {
      for (int j = 0; j < d; ++j) {
        std::swap(m[static_cast<std::size_t>(col) * d + j], m[static_cast<std::size_t>(pivot) * d + j]);
        std::swap(inv[static_cast<std::size_t>(col) * d + j], inv[static_cast<std::size_t>(pivot) * d + j]);
      }
      det_ = -det_;
    }
    const double p = m[static_cast<std::size_t>(col) * d + col];
    det_ *= p;
    if (p == 0.0) break;
    const double ip = 1.0 / p;
    for (int j = 0; j < d; ++j) {
      m[static_cast<std::size_t>(col) * d + j] *= ip;
      inv[static_cast<std::size_t>(col) * d + j] *= ip;
    }
    for (int row = 0; row < d; ++row) {
      if (row == col) continue;
      const double f = m[static_cast<std::size_t>(row) * d + col];
      if (f == 0.0) continue;
      for (int j = 0; j < d; ++j) {
        m[static_cast<std::size_t>(row) * d + j] -= f * m[static_cast<std::size_t>(col) * d + j];
        inv[static_cast<std::size_t>(row) * d + j] -= f * inv[static_cast<std::size_t>(col) * d + j];
      }
    }
  }
  double scale = 0.0;
  for (double x : entries_) scale = std::max(scale, std::fabs(x));
  double scale_d = 1.0;
  for (int i = 0; i < d; ++i) scale_d *= std::max(scale, 1e-300);
  if (!(std::fabs(det_) > 1e-12 * scale_d))
    throw SingularError("MatrixTransform: near-singular (|det| = " + std::to_string(det_) + ")");
  inverse_ = std::move(inv);
}

MatrixTransform MatrixTransform::identity(int dim) {
  std::vector<double> e(static_cast<std::size_t>(dim) * dim, 0.0);
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return MatrixTransform(dim, std::move(e));
}

HyperMatrix make_unit_delta(int rank, int dim) {
  HyperMatrix out(rank, dim, Variance::contravariant);
  std::size_t step = 0;
  for (int k = 0; k < rank; ++k) step = step * static_cast<std::size_t>(dim) + 1;
  for (int i = 0; i < dim; ++i) out[static_cast<std::size_t>(i) * step] = 1.0;
  return out;
}

HyperMatrix make_unit_delta_covariant(int rank, int dim) {
  return make_unit_delta(rank, dim).with_variance(Variance::covariant);
}

HyperMatrix make_epsilon(int dim) {
  HyperMatrix out(dim, dim, Variance::contravariant);
  for (const auto& p : lex_permutations(dim)) {
    std::size_t flat = 0;
    for (int x : p) flat = flat * static_cast<std::size_t>(dim) + static_cast<std::size_t>(x);
    out[flat] = static_cast<double>(permutation_parity(p));
  }
  return out;
}

namespace {

void unflatten(std::size_t flat, int rank, int dim, std::vector<int>& idx) {
  for (int k = rank - 1; k >= 0; --k) {
    idx[static_cast<std::size_t>(k)] = static_cast<int>(flat % static_cast<std::size_t>(dim));
    flat /= static_cast<std::size_t>(dim);
  }
}

}  // namespace

HyperMatrix symmetrize(const HyperMatrix& A) {
  const int r = A.rank(), d = A.dim();
  HyperMatrix out(r, d, A.variance());
  const auto& perms = lex_permutations(r);
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::vector<int> pidx(static_cast<std::size_t>(r));
  std::vector<char> done(A.size(), 0);
  std::vector<std::size_t> orbit;
  for (std::size_t flat = 0; flat < A.size(); ++flat) {
    if (done[flat]) continue;
    unflatten(flat, r, d, idx);
    orbit.clear();
    double sum = 0.0;
    bool constant = true;
    const double first = A[flat];
    for (const auto& p : perms) {
      for (int k = 0; k < r; ++k) pidx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(p[static_cast<std::size_t>(k)])];
      const std::size_t f = A.flat_index(pidx);
      orbit.push_back(f);
      sum += A[f];
      if (A[f] != first) constant = false;
    }
    // constant orbits pass through unchanged, making the projection exact
    const double v = constant ? first : sum / static_cast<double>(perms.size());
    for (std::size_t f : orbit) {
      out[f] = v;
      done[f] = 1;
    }
  }
  return out;
}

bool is_symmetric(const HyperMatrix& A, double rel_tol) {
  const int r = A.rank(), d = A.dim();
  const double tol = rel_tol * std::max(A.max_abs(), 1e-300);
  std::vector<int> idx(static_cast<std::size_t>(r)), sorted(static_cast<std::size_t>(r));
  for (std::size_t flat = 0; flat < A.size(); ++flat) {
    unflatten(flat, r, d, idx);
    sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::fabs(A[flat] - A.at(std::span<const int>(sorted))) > tol) return false;
  }
  return true;
}

bool is_unit_delta(const HyperMatrix& A) {
  const int r = A.rank(), d = A.dim();
  std::size_t step = 0;
  for (int k = 0; k < r; ++k) step = step * static_cast<std::size_t>(d) + 1;
  for (std::size_t flat = 0; flat < A.size(); ++flat) {
    const bool diag = (flat % step == 0) && (flat / step < static_cast<std::size_t>(d));
    if (A[flat] != (diag ? 1.0 : 0.0)) return false;
  }
  return true;
}

namespace {

/// Contract slot `slot` of A with u[j][i] (sum over j, free index i).
HyperMatrix mode_contract(const HyperMatrix& A, const std::vector<double>& u, int slot) {
  const int r = A.rank(), d = A.dim();
  HyperMatrix out(r, d, A.variance());
  std::size_t stride = 1;
  for (int k = r - 1; k > slot; --k) stride *= static_cast<std::size_t>(d);
  const std::size_t block = stride * static_cast<std::size_t>(d);
  for (std::size_t base = 0; base < A.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      for (int i = 0; i < d; ++i) {
        double s = 0.0;
        for (int j = 0; j < d; ++j)
          s += u[static_cast<std::size_t>(j) * d + static_cast<std::size_t>(i)] *
               A[base + static_cast<std::size_t>(j) * stride + off];
        out[base + static_cast<std::size_t>(i) * stride + off] = s;
      }
    }
  }
  return out;
}

}  // namespace

HyperMatrix transform_covariant(const HyperMatrix& A, const MatrixTransform& U) {
  if (A.dim() != U.dim()) throw std::invalid_argument("transform_covariant: dimension mismatch");
  if (A.variance() != Variance::covariant)
    throw std::invalid_argument("transform_covariant: input must be covariant");
  HyperMatrix out = A;
  for (int slot = 0; slot < A.rank(); ++slot) out = mode_contract(out, U.entries(), slot);
  return out;
}

HyperMatrix transform_contravariant(const HyperMatrix& B, const MatrixTransform& U) {
  if (B.dim() != U.dim()) throw std::invalid_argument("transform_contravariant: dimension mismatch");
  if (B.variance() != Variance::contravariant)
    throw std::invalid_argument("transform_contravariant: input must be contravariant");
  // (B')^i = (U^-1)^i_j B^j per slot: sum over j with u[i][j] layout,
  // i.e. contract with the transpose of inverse() in mode_contract's wiring.
  const int d = B.dim();
  std::vector<double> ut(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      ut[static_cast<std::size_t>(j) * d + i] = U.inverse_at(i, j);
  HyperMatrix out = B;
  for (int slot = 0; slot < B.rank(); ++slot) out = mode_contract(out, ut, slot);
  return out;
}

namespace {

double contract_tuple_diagonal(const HyperMatrix& A, const PermutationTuple& tuple) {
  const int n = tuple.order, r = A.rank(), d = A.dim();
  // tau_1 = id, tau_k = sigma_k^-1; factor I reads A[v_tau1(I), ..., v_taur(I)]
  std::vector<std::vector<int>> taus;
  taus.reserve(static_cast<std::size_t>(r));
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  taus.push_back(id);
  for (const auto& p : tuple.perms) taus.push_back(invert_permutation(p));

  // per-factor index weights: factor I's flat index = sum_k v[taus[k][I]] * d^(r-1-k)
  std::vector<std::size_t> weight(static_cast<std::size_t>(r));
  {
    std::size_t w = 1;
    for (int k = r - 1; k >= 0; --k) {
      weight[static_cast<std::size_t>(k)] = w;
      w *= static_cast<std::size_t>(d);
    }
  }

  std::vector<int> v(static_cast<std::size_t>(n), 0);
  double total = 0.0, comp = 0.0;  // Kahan-compensated accumulation
  do {
    double prod = 1.0;
    for (int I = 0; I < n && prod != 0.0; ++I) {
      std::size_t flat = 0;
      for (int k = 0; k < r; ++k)
        flat += static_cast<std::size_t>(v[static_cast<std::size_t>(taus[static_cast<std::size_t>(k)][static_cast<std::size_t>(I)])]) *
                weight[static_cast<std::size_t>(k)];
      prod *= A[flat];
    }
    const double y = prod - comp;
    const double t = total + y;
    comp = (t - total) - y;
    total = t;
  } while (odometer_step(v, d));
  return total;
}

double contract_tuple_generic(const HyperMatrix& A, const HyperMatrix& Delta,
                              const PermutationTuple& tuple) {
  const int n = tuple.order, r = A.rank(), d = A.dim();
  // free variables: unit-factor indices y[J][m]; A-factor I slot m reads
  // y[inv_m(I)][m] where inv_m = sigma_m^-1 (slot m of A-factor I is tied to
  // unit factor sigma_m^-1(I)).
  std::vector<std::vector<int>> inv;
  inv.reserve(static_cast<std::size_t>(r));
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i;
  inv.push_back(id);
  for (const auto& p : tuple.perms) inv.push_back(invert_permutation(p));

  double work = std::pow(static_cast<double>(d), static_cast<double>(n) * r);
  if (work > static_cast<double>(tuple_cap()))
    throw CapExceededError("contract_tuple: generic-unit contraction too large");

  std::vector<std::size_t> weight(static_cast<std::size_t>(r));
  {
    std::size_t w = 1;
    for (int m = r - 1; m >= 0; --m) {
      weight[static_cast<std::size_t>(m)] = w;
      w *= static_cast<std::size_t>(d);
    }
  }
  // slots of factor I fed by unit factor 0 (summed in the inner block)
  std::vector<std::vector<int>> inner_slots(static_cast<std::size_t>(n));
  for (int m = 0; m < r; ++m)
    for (int I = 0; I < n; ++I)
      if (inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(I)] == 0)
        inner_slots[static_cast<std::size_t>(I)].push_back(m);
  std::vector<int> touched;
  std::vector<int> untouched;
  for (int I = 0; I < n; ++I)
    (inner_slots[static_cast<std::size_t>(I)].empty() ? untouched : touched).push_back(I);

  const std::size_t outer_vars = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(r);
  std::vector<int> y(outer_vars, 0);  // indices of unit factors 1..n-1
  auto outer_digit = [&](int J, int m) {
    return y[static_cast<std::size_t>(J - 1) * r + static_cast<std::size_t>(m)];
  };
  const std::size_t inner_total = weight[0] * static_cast<std::size_t>(d);  // d^r
  std::vector<int> y0(static_cast<std::size_t>(r), 0);
  std::vector<std::size_t> base(static_cast<std::size_t>(n), 0);
  double total = 0.0, comp = 0.0;  // Kahan-compensated accumulation
  for (;;) {
    // unit factors 1..n-1 and the outer part of every A-factor index
    double outer_prod = 1.0;
    for (int J = 1; J < n && outer_prod != 0.0; ++J) {
      std::size_t flat = 0;
      for (int m = 0; m < r; ++m)
        flat = flat * static_cast<std::size_t>(d) + static_cast<std::size_t>(outer_digit(J, m));
      outer_prod *= Delta[flat];
    }
    if (outer_prod != 0.0) {
      for (int I = 0; I < n; ++I) {
        std::size_t b = 0;
        for (int m = 0; m < r; ++m) {
          const int src = inv[static_cast<std::size_t>(m)][static_cast<std::size_t>(I)];
          if (src != 0)
            b += static_cast<std::size_t>(outer_digit(src, m)) * weight[static_cast<std::size_t>(m)];
        }
        base[static_cast<std::size_t>(I)] = b;
      }
      for (int I : untouched) outer_prod *= A[base[static_cast<std::size_t>(I)]];
    }
    if (outer_prod != 0.0) {
      std::fill(y0.begin(), y0.end(), 0);
      for (std::size_t y0flat = 0; y0flat < inner_total; ++y0flat) {
        const double dval = Delta[y0flat];
        if (dval != 0.0) {
          double prod = outer_prod * dval;
          for (int I : touched) {
            std::size_t flat = base[static_cast<std::size_t>(I)];
            for (int m : inner_slots[static_cast<std::size_t>(I)])
              flat += static_cast<std::size_t>(y0[static_cast<std::size_t>(m)]) *
                      weight[static_cast<std::size_t>(m)];
            prod *= A[flat];
          }
          const double y1 = prod - comp;
          const double t1 = total + y1;
          comp = (t1 - total) - y1;
          total = t1;
        }
        int pos = r - 1;
        while (pos >= 0 && ++y0[static_cast<std::size_t>(pos)] == d) {
          y0[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
      }
    }
    if (outer_vars == 0) break;
    std::size_t pos = outer_vars;
    while (pos > 0 && ++y[pos - 1] == d) y[--pos] = 0;
    if (pos == 0) break;
  }
  return total;
}

}  // namespace

double contract_tuple(const HyperMatrix& A, const HyperMatrix& Delta,
                      const PermutationTuple& tuple) {
  if (A.rank() != Delta.rank() || A.dim() != Delta.dim())
    throw std::invalid_argument("contract_tuple: rank/dim mismatch between A and Delta");
  if (A.variance() != Variance::covariant || Delta.variance() != Variance::contravariant)
    throw std::invalid_argument("contract_tuple: need covariant A and contravariant Delta");
  if (tuple.rank() != A.rank())
    throw std::invalid_argument("contract_tuple: tuple arity != rank-1");
  if (is_unit_delta(Delta)) return contract_tuple_diagonal(A, tuple);
  return contract_tuple_generic(A, Delta, tuple);
}

HyperMatrix fd_gradient(const std::function<double(const HyperMatrix&)>& f,
                        const HyperMatrix& A, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: h must be positive");
  HyperMatrix out(A.rank(), A.dim(), A.variance());
  HyperMatrix work = A;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const double orig = work[i];
    work[i] = orig + h;
    const double fp = f(work);
    work[i] = orig - h;
    const double fm = f(work);
    work[i] = orig;
    out[i] = (fp - fm) / (2.0 * h);
  }
  return out;
}

}  // namespace hyperinv
