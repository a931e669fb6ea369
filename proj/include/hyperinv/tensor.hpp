#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hyperinv/permutation.hpp"

namespace hyperinv {

enum class Variance { covariant, contravariant };

const char* to_string(Variance v);

/// Dense rank-r, dimension-d component array, row-major (last index fastest).
/// Variance is a label checked at operation boundaries, not a storage mode.
class HyperMatrix {
public:
  HyperMatrix(int rank, int dim, Variance variance);
  HyperMatrix(int rank, int dim, Variance variance, std::vector<double> data);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  Variance variance() const { return variance_; }
  std::size_t size() const { return data_.size(); }

  double operator[](std::size_t flat) const { return data_[flat]; }
  double& operator[](std::size_t flat) { return data_[flat]; }

  std::size_t flat_index(std::span<const int> idx) const;
  double at(std::span<const int> idx) const { return data_[flat_index(idx)]; }
  double& at(std::span<const int> idx) { return data_[flat_index(idx)]; }
  double at(std::initializer_list<int> idx) const {
    return data_[flat_index({idx.begin(), idx.size()})];
  }
  double& at(std::initializer_list<int> idx) {
    return data_[flat_index({idx.begin(), idx.size()})];
  }

  std::span<const double> data() const { return data_; }
  std::vector<double>& mutable_data() { return data_; }

  double max_abs() const;
  HyperMatrix with_variance(Variance v) const;

private:
  int rank_;
  int dim_;
  Variance variance_;
  std::vector<double> data_;
};

/// Invertible d x d similarity transform; inverse and determinant are
/// computed eagerly, near-singular input is rejected.
class MatrixTransform {
public:
  MatrixTransform(int dim, std::vector<double> entries);
  static MatrixTransform identity(int dim);

  int dim() const { return dim_; }
  double at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
  double inverse_at(int i, int j) const {
    return inverse_[static_cast<std::size_t>(i) * dim_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }
  const std::vector<double>& inverse() const { return inverse_; }
  double det() const { return det_; }

private:
  int dim_;
  std::vector<double> entries_;
  std::vector<double> inverse_;
  double det_ = 0.0;
};

/// Contravariant unit: 1 where all rank indices coincide, else 0.
HyperMatrix make_unit_delta(int rank, int dim);

/// Covariant copy of the unit (the unit's inverse has identical components).
HyperMatrix make_unit_delta_covariant(int rank, int dim);

/// Totally antisymmetric rank-d symbol with entry +1 at (0,1,...,d-1).
HyperMatrix make_epsilon(int dim);

/// Average over all rank! slot permutations.  Entries that are already
/// constant on their orbit are passed through bit-exactly, which makes the
/// operation an exact projection.
HyperMatrix symmetrize(const HyperMatrix& A);

bool is_symmetric(const HyperMatrix& A, double rel_tol = 1e-12);

/// Exact structural test for the diagonal unit (entries 1.0 / 0.0).
bool is_unit_delta(const HyperMatrix& A);

/// A'_{i1..ir} = A_{j1..jr} U^{j1}_{i1} ... U^{jr}_{ir}
HyperMatrix transform_covariant(const HyperMatrix& A, const MatrixTransform& U);

/// B'^{i1..ir} = B^{j1..jr} (U^-1)^{i1}_{j1} ... (U^-1)^{ir}_{jr}
HyperMatrix transform_contravariant(const HyperMatrix& B, const MatrixTransform& U);

/// One unsigned term of the alternating-product expansion.
///
/// The wiring convention: unit factor I keeps its slot-1 index tied to
/// tensor factor I and its slot-k index tied to tensor factor sigma_k(I),
/// where sigma_k is the tuple's (k-1)-th permutation.  For the diagonal
/// unit each unit factor collapses to one value variable v_I and the term
/// becomes
///     sum_{v in [0,d)^n}  prod_I  A[v_{tau_1(I)}, ..., v_{tau_r(I)}],
/// tau_1 = id, tau_k = sigma_k^-1, at cost O(n d^n).  A generic Delta falls
/// back to the full contraction over all unit-factor indices, cost
/// O(n d^(n r)) (budget-guarded).
///
/// The tuple's sign is NOT applied; callers own the sign.
double contract_tuple(const HyperMatrix& A, const HyperMatrix& Delta,
                      const PermutationTuple& tuple);

/// Central-difference gradient with respect to every formal entry.
HyperMatrix fd_gradient(const std::function<double(const HyperMatrix&)>& f,
                        const HyperMatrix& A, double h);

}  // namespace hyperinv
