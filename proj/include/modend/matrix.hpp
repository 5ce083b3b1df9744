/**
 * @file matrix.hpp
 * @brief Dense matrices over a number field with exact elimination.
 *
 * Provides products, transposes, block assembly, reduced row echelon form,
 * rank, nullspace, inverse and subspace comparison. Elimination is
 * deterministic: pivots are taken in the leftmost nonzero column, using the
 * first row (from the current top) with a nonzero entry there.
 *
 * Nullspace bases follow the usual free-column convention: for each
 * non-pivot column f the basis vector has a 1 in position f, zeros in the
 * other free positions, and minus the RREF entries in the pivot positions.
 * For [[1,1],[2,2]] this gives the single vector (-1, 1).
 */

#pragma once

#include <string>
#include <vector>

#include "modend/errors.hpp"
#include "modend/field.hpp"

namespace modend {

class Matrix {
 public:
  Matrix() = default;

  Matrix(FieldPtr f, size_t rows, size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
    e_.assign(rows * cols, f_->zero());
  }

  static Matrix zero(const FieldPtr& f, size_t rows, size_t cols) { return Matrix(f, rows, cols); }

  static Matrix identity(const FieldPtr& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = f->one();
    return m;
  }

  /// Column vector from entries.
  static Matrix column(const FieldPtr& f, const std::vector<FieldElement>& v) {
    Matrix m(f, v.size(), 1);
    for (size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const FieldPtr& field() const { return f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  FieldElement& operator()(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const FieldElement& operator()(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw Error(ErrorKind::DimensionMismatch, "product " + shape() + " * " + o.shape());
    Matrix out(f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const FieldElement& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j) {
          const FieldElement& b = o(k, j);
          if (!b.is_zero()) out(i, j) += a * b;
        }
      }
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    same_shape(o, "sum");
    Matrix out(*this);
    for (size_t i = 0; i < e_.size(); ++i)
      if (!o.e_[i].is_zero()) out.e_[i] += o.e_[i];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    same_shape(o, "difference");
    Matrix out(*this);
    for (size_t i = 0; i < e_.size(); ++i)
      if (!o.e_[i].is_zero()) out.e_[i] -= o.e_[i];
    return out;
  }

  Matrix scaled(const FieldElement& s) const {
    Matrix out(*this);
    for (auto& x : out.e_)
      if (!x.is_zero()) x *= s;
    return out;
  }

  Matrix transpose() const {
    Matrix out(f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
    Matrix out(f_, nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(size_t r0, size_t c0, const Matrix& b) {
    for (size_t i = 0; i < b.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  /// Stacks b below this matrix (column counts must agree).
  Matrix vstack(const Matrix& b) const {
    if (rows_ == 0 && cols_ == 0) return b;
    if (cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack " + shape() + " / " + b.shape());
    Matrix out(f_, rows_ + b.rows_, cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, 0, b);
    return out;
  }

  Matrix hstack(const Matrix& b) const {
    if (rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hstack " + shape() + " | " + b.shape());
    Matrix out(f_, rows_, cols_ + b.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, b);
    return out;
  }

  /// Flattens row-major into a column vector.
  Matrix flatten() const {
    Matrix out(f_, e_.size(), 1);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i];
    return out;
  }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref_in_place() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t p = row;
      while (p < rows_ && (*this)(p, col).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != row)
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(row, j));
      FieldElement inv = (*this)(row, col).inverse();
      for (size_t j = col; j < cols_; ++j)
        if (!(*this)(row, j).is_zero()) (*this)(row, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        FieldElement factor = (*this)(i, col);
        if (factor.is_zero()) continue;
        for (size_t j = col; j < cols_; ++j)
          if (!(*this)(row, j).is_zero()) (*this)(i, j) -= factor * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  Matrix rref() const {
    Matrix m(*this);
    m.rref_in_place();
    return m;
  }

  size_t rank() const {
    Matrix m(*this);
    return m.rref_in_place().size();
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square " + shape());
    Matrix aug = hstack(identity(f_, rows_));
    auto piv = aug.rref_in_place();
    if (piv.size() < rows_ || (rows_ > 0 && piv[rows_ - 1] >= rows_))
      throw Error(ErrorKind::SingularMatrix, "matrix " + shape() + " is not invertible");
    return aug.block(0, cols_, rows_, cols_);
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void same_shape(const Matrix& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + " " + shape() + " vs " + o.shape());
  }

  FieldPtr f_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<FieldElement> e_;
};

/// Basis of {v : m v = 0} as column vectors (see file comment for normalization).
inline std::vector<Matrix> nullspace(const Matrix& m) {
  Matrix r(m);
  auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix v(m.field(), m.cols(), 1);
    v(f, 0) = m.field()->one();
    for (size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Kronecker product a ⊗ b.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) out.set_block(i * b.rows(), j * b.cols(), b.scaled(a(i, j)));
  return out;
}

/// Places column vectors side by side (ambient dimension n, possibly zero vectors).
inline Matrix columns_to_matrix(const FieldPtr& f, size_t n, const std::vector<Matrix>& cols) {
  Matrix out(f, n, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rows() != n || cols[j].cols() != 1)
      throw Error(ErrorKind::DimensionMismatch, "basis vector of shape " + cols[j].shape());
    for (size_t i = 0; i < n; ++i) out(i, j) = cols[j](i, 0);
  }
  return out;
}

/// span(a) == span(b), decided by rank(a), rank(b) and rank([a b]).
inline bool subspace_equal(const FieldPtr& f, size_t ambient, const std::vector<Matrix>& a,
                           const std::vector<Matrix>& b) {
  Matrix ma = columns_to_matrix(f, ambient, a);
  Matrix mb = columns_to_matrix(f, ambient, b);
  size_t ra = ma.rank(), rb = mb.rank();
  if (ra != rb) return false;
  return ma.hstack(mb).rank() == ra;
}

/// True when every vector of a lies in span(b).
inline bool subspace_contained(const FieldPtr& f, size_t ambient, const std::vector<Matrix>& a,
                               const std::vector<Matrix>& b) {
  Matrix ma = columns_to_matrix(f, ambient, a);
  Matrix mb = columns_to_matrix(f, ambient, b);
  return mb.hstack(ma).rank() == mb.rank();
}

}  // namespace modend
