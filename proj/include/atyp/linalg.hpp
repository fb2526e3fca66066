#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "atyp/rational.hpp"

namespace atyp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = DenseMatrix<Rational>;
using RatVector = DenseVector<Rational>;
using Index = Eigen::Index;

/// Matrix-vector product skipping zero entries of v (exact scalars make the
/// skip test free; dense products would grind through explicit zeros).
RatVector apply(const RatMatrix& m, const RatVector& v);

bool is_zero(const RatVector& v);

/// Incremental exact row space with echelon structure.
///
/// Vectors inserted are kept reduced against each other; `coords` expresses a
/// vector as a combination of the *inserted* vectors (in insertion order).
class SpanBasis {
 public:
  explicit SpanBasis(Index ambient) : ambient_(ambient) {}

  Index ambient() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }

  /// Reduces v against the current rows; returns the remainder.
  RatVector reduce(const RatVector& v) const;

  bool contains(const RatVector& v) const { return is_zero(reduce(v)); }

  /// Inserts v if independent. Returns true when the span grew.
  bool insert(const RatVector& v);

  /// Coordinates of v in terms of the inserted vectors; nullopt if v is
  /// outside the span.
  std::optional<RatVector> coords(const RatVector& v) const;

  /// The k-th inserted (raw) vector.
  const RatVector& raw(Index k) const { return raws_[static_cast<size_t>(k)]; }
  const std::vector<RatVector>& raw_vectors() const { return raws_; }

  /// Pivot columns of the echelon rows, in insertion order of rows.
  const std::vector<Index>& pivots() const { return pivots_; }

 private:
  Index ambient_;
  std::vector<RatVector> rows_;        // echelon rows (pivot-normalized)
  std::vector<Index> pivots_;          // pivot column of rows_[k]
  std::vector<RatVector> row_combo_;   // rows_[k] = sum row_combo_[k][j] * raws_[j]
  std::vector<RatVector> raws_;
};

/// Nullspace basis (columns) of a; exact.
RatMatrix kernel_basis(const RatMatrix& a);

Index rank_of(const RatMatrix& a);

/// One solution of a x = b, if any.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

/// Jordan block sizes of a nilpotent matrix, largest first.
std::vector<int> nilpotent_jordan_profile(const RatMatrix& n);

}  // namespace atyp
