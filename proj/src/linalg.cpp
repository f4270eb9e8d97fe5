#include "interdec/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "interdec/errors.hpp"

namespace interdec {

namespace {

std::string shape(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(cols));
    }
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

RatMatrix RatMatrix::column(const RatVector& v) {
  RatMatrix m(v.size(), 1);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> idx) const {
  RatMatrix out(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(idx[k], j);
  return out;
}

RatMatrix RatMatrix::select_cols(std::span<const std::size_t> idx) const {
  RatMatrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) out(i, k) = (*this)(i, idx[k]);
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& other) {
  require_same_shape(*this, other, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& other) {
  require_same_shape(*this, other, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator*(const Rat& scalar, RatMatrix m) { return m *= scalar; }

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("multiply: shape mismatch " + shape(a) + " * " + shape(b));
  }
  RatMatrix c(a.rows(), b.cols());
  Rat tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) == 0) continue;
        tmp = aik * b(k, j);
        c(i, j) += tmp;
      }
    }
  }
  return c;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector: shape mismatch");
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  RatMatrix out(a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) out(a.rows() + i, j) = b(i, j);
  }
  return out;
}

RowEchelon row_reduce(const RatMatrix& m) {
  RowEchelon res{m, {}};
  RatMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

RatMatrix rref(const RatMatrix& m) { return row_reduce(m).reduced; }

std::size_t rank(const RatMatrix& m) { return row_reduce(m).pivots.size(); }

bool is_invertible(const RatMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square " + shape(m));
  const std::size_t n = m.rows();
  const RowEchelon red = row_reduce(hstack(m, RatMatrix::identity(n)));
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] >= n)) {
    throw DimensionError("inverse of singular matrix");
  }
  std::vector<std::size_t> right(n);
  for (std::size_t j = 0; j < n; ++j) right[j] = n + j;
  return red.reduced.select_cols(right);
}

bool is_projector(const RatMatrix& m) { return m.is_square() && m * m == m; }

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row counts differ");
  const std::size_t k = a.cols();
  const RowEchelon red = row_reduce(hstack(a, b));
  // Full column rank puts the first k pivots on columns 0..k-1; consistency
  // forbids any further pivot.
  if (red.pivots.size() != k) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i)
    if (red.pivots[i] != i) return std::nullopt;
  RatMatrix x(k, b.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = red.reduced(i, k + j);
  return x;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::row_span(const RatMatrix& vectors) {
  RowEchelon red = row_reduce(vectors);
  Subspace s(vectors.cols());
  std::vector<std::size_t> keep(red.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  s.basis_ = red.reduced.select_rows(keep);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_span(RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(const RatVector& v) const {
  return contains_columns(RatMatrix::column(v));
}

RatMatrix Subspace::coordinates(const RatMatrix& m) const {
  if (m.rows() != ambient_) throw DimensionError("coordinates: ambient dimension mismatch");
  // Basis rows are the identity on the pivot columns, so coordinates are the
  // pivot entries; membership is then a reconstruction check.
  RatMatrix coords = m.select_rows(pivots_);
  if (basis_columns() * coords != m) throw DimensionError("coordinates: vector not in subspace");
  return coords;
}

bool Subspace::contains_columns(const RatMatrix& m) const {
  if (m.rows() != ambient_) throw DimensionError("contains: ambient dimension mismatch");
  return basis_columns() * m.select_rows(pivots_) == m;
}

Subspace image(const RatMatrix& m) { return Subspace::row_span(m.transpose()); }

Subspace kernel(const RatMatrix& m) {
  const RowEchelon red = row_reduce(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<RatVector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = -red.reduced(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::row_span(RatMatrix::from_rows(vectors, n));
}

bool subspace_leq(const Subspace& lhs, const Subspace& rhs) {
  if (lhs.ambient_dim() != rhs.ambient_dim()) {
    throw DimensionError("subspace_leq: ambient dimension mismatch");
  }
  return rhs.contains_columns(lhs.basis_columns());
}

namespace {

RatMatrix stacked_bases(std::span<const Subspace> parts, std::size_t& ambient) {
  if (parts.empty()) throw DimensionError("empty list of subspaces");
  ambient = parts.front().ambient_dim();
  RatMatrix all(0, ambient);
  for (const auto& s : parts) {
    if (s.ambient_dim() != ambient) throw DimensionError("subspaces live in different ambients");
    all = vstack(all, s.basis());
  }
  return all;
}

}  // namespace

Subspace subspace_sum(std::span<const Subspace> parts) {
  std::size_t ambient = 0;
  return Subspace::row_span(stacked_bases(parts, ambient));
}

bool direct_sum_is_ambient(std::span<const Subspace> parts) {
  std::size_t ambient = 0;
  const RatMatrix all = stacked_bases(parts, ambient);
  return all.rows() == ambient && rank(all) == ambient;
}

}  // namespace interdec
