#include "axial/matrix.hpp"

#include <stdexcept>

namespace axial {

Matrix::Matrix(FieldPtr f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, f_->zero());
}

Matrix Matrix::identity(const FieldPtr& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

Matrix Matrix::from_rows(const FieldPtr& f, const std::vector<Coords>& rows) {
  if (rows.empty()) return Matrix(f, 0, 0);
  Matrix m(f, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Matrix Matrix::from_columns(const FieldPtr& f, const std::vector<Coords>& cols) {
  if (cols.empty()) return Matrix(f, 0, 0);
  Matrix m(f, cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

Coords Matrix::row(std::size_t i) const {
  return Coords(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

Coords Matrix::column(std::size_t j) const {
  Coords c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r = a;
  for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix r(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Coords Matrix::apply(const Coords& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  Coords r = zero_coords(f_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& aij = at(i, j);
      if (!aij.is_zero()) r[i] += aij * x[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && at(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    Scalar inv = at(r, c).inv();
    for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Scalar m = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) -= m * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

std::vector<Coords> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Coords> basis;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Coords v = zero_coords(f_, cols_);
    v[c] = f_->one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Coords> Matrix::solve(const Coords& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs size mismatch");
  Matrix aug(f_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Coords x = zero_coords(f_, cols_);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(f_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = f_->one();
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || pivots.back() != cols_ - 1) return std::nullopt;
  Matrix inv(f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Coords zero_coords(const FieldPtr& f, std::size_t n) {
  return Coords(n, f->zero());
}

Coords unit_coords(const FieldPtr& f, std::size_t n, std::size_t i) {
  Coords v = zero_coords(f, n);
  v[i] = f->one();
  return v;
}

bool coords_zero(const Coords& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Coords add(const Coords& a, const Coords& b) {
  Coords r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Coords sub(const Coords& a, const Coords& b) {
  Coords r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Coords scale(const Scalar& s, const Coords& a) {
  Coords r = a;
  for (auto& x : r) x *= s;
  return r;
}

void add_scaled(Coords& acc, const Scalar& s, const Coords& a) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!a[i].is_zero()) acc[i] += s * a[i];
}

RowSpan::RowSpan(FieldPtr f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

Coords RowSpan::reduce(Coords v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (!c.is_zero()) add_scaled(v, -c, rows_[r]);
  }
  return v;
}

bool RowSpan::insert(Coords v) {
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = v[p].inv();
  for (auto& x : v) x *= inv;
  // keep earlier rows reduced against the new pivot
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][p];
    if (!c.is_zero()) add_scaled(rows_[r], -c, v);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpan::contains(const Coords& v) const { return coords_zero(reduce(v)); }

}  // namespace axial
