#pragma once

#include <optional>
#include <vector>

#include "axial/field.hpp"

namespace axial {

using Coords = std::vector<Scalar>;

/// Dense matrix over an exact field. Row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldPtr& f, std::size_t n);
  static Matrix from_rows(const FieldPtr& f, const std::vector<Coords>& rows);
  static Matrix from_columns(const FieldPtr& f, const std::vector<Coords>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return f_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Coords row(std::size_t i) const;
  Coords column(std::size_t j) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const Scalar& s) const;
  Coords apply(const Coords& x) const;  // this * x
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;

  /// In-place reduced row echelon form; pivot = first nonzero in column order.
  /// Returns pivot column indices.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right kernel.
  std::vector<Coords> kernel() const;
  /// One solution of this * x = b, or nullopt if inconsistent.
  std::optional<Coords> solve(const Coords& b) const;
  std::optional<Matrix> inverse() const;

 private:
  FieldPtr f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Coordinate-vector helpers.
Coords zero_coords(const FieldPtr& f, std::size_t n);
Coords unit_coords(const FieldPtr& f, std::size_t n, std::size_t i);
bool coords_zero(const Coords& v);
Coords add(const Coords& a, const Coords& b);
Coords sub(const Coords& a, const Coords& b);
Coords scale(const Scalar& s, const Coords& a);
void add_scaled(Coords& acc, const Scalar& s, const Coords& a);

/// Incremental row-echelon span tracker: feed vectors, query rank and
/// membership. Deterministic (first-nonzero pivoting, insertion order).
class RowSpan {
 public:
  RowSpan(FieldPtr f, std::size_t dim);
  /// Reduces v against the current rows; inserts the remainder if nonzero.
  /// Returns true when the rank grew.
  bool insert(Coords v);
  bool contains(const Coords& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Coords>& rows() const { return rows_; }

 private:
  Coords reduce(Coords v) const;
  FieldPtr f_;
  std::size_t dim_;
  std::vector<Coords> rows_;          // echelonized, normalized pivots
  std::vector<std::size_t> pivots_;   // pivot column of each row
};

}  // namespace axial
