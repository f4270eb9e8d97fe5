#pragma once

// Dense exact linear algebra over the rationals.
//
// Everything here is value-semantic and exact; there is no tolerance anywhere.
// Vectors are plain `std::vector<Rat>`; subspaces are kept in a canonical form
// (reduced row echelon basis) so that equality of subspaces is equality of
// their basis matrices.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "interdec/rational.hpp"

namespace interdec {

using RatVector = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  /// Zero matrix of the given shape. Either extent may be 0.
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix column(const RatVector& v);
  static RatMatrix diagonal(const RatVector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;

  RatMatrix transpose() const;
  /// Rows (resp. columns) picked by index, in the order given.
  RatMatrix select_rows(std::span<const std::size_t> idx) const;
  RatMatrix select_cols(std::span<const std::size_t> idx) const;

  RatMatrix& operator+=(const RatMatrix& other);
  RatMatrix& operator-=(const RatMatrix& other);
  RatMatrix& operator*=(const Rat& scalar);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& scalar, RatMatrix m);
RatVector operator*(const RatMatrix& m, const RatVector& v);

/// [a | b], [a ; b].
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

struct RowEchelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Canonical: equal row spaces give equal results.
RatMatrix rref(const RatMatrix& m);
RowEchelon row_reduce(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

bool is_invertible(const RatMatrix& m);
/// Throws DimensionError for non-square or singular input.
RatMatrix inverse(const RatMatrix& m);

bool is_projector(const RatMatrix& m);

/// Unique X with a * X == b when `a` has full column rank and every column of
/// `b` lies in its column space; nullopt otherwise.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

/// A linear subspace of Q^n, stored by its reduced echelon basis (one row per
/// basis vector, pivot columns strictly increasing, full row rank).
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient_dim.
  explicit Subspace(std::size_t ambient_dim);

  /// Span of the rows of `vectors` (any spanning set, dependent rows allowed).
  static Subspace row_span(const RatMatrix& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  /// Basis vectors as rows (dim x ambient_dim).
  const RatMatrix& basis() const { return basis_; }
  /// Basis vectors as columns (ambient_dim x dim).
  RatMatrix basis_columns() const { return basis_.transpose(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVector& v) const;
  /// True when every column of `m` lies in the subspace.
  bool contains_columns(const RatMatrix& m) const;
  /// Coordinates of the columns of `m` in the echelon basis (dim x m.cols()).
  /// Throws DimensionError when some column is not in the subspace.
  RatMatrix coordinates(const RatMatrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Column space.
Subspace image(const RatMatrix& m);
/// Null space {x : m x = 0}.
Subspace kernel(const RatMatrix& m);

bool subspace_leq(const Subspace& lhs, const Subspace& rhs);
Subspace subspace_sum(std::span<const Subspace> parts);
/// Concatenated bases have rank sum(dims) == ambient_dim.
bool direct_sum_is_ambient(std::span<const Subspace> parts);

}  // namespace interdec
