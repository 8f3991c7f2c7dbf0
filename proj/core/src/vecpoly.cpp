#include "axial/vecpoly.hpp"

#include <stdexcept>

namespace axial {

ScalarPoly::ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

ScalarPoly ScalarPoly::constant(const Scalar& c) { return ScalarPoly({c}); }

void ScalarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar ScalarPoly::eval(const Scalar& x) const {
  Scalar r = x.field()->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<Scalar> c = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& s = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  for (std::size_t i = 0; i < s.size(); ++i) c[i] += s[i];
  return ScalarPoly(std::move(c));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<Scalar> c = a.c_;
  c.resize(std::max(a.c_.size(), b.c_.size()),
           a.c_.empty() ? (b.c_.empty() ? Scalar() : b.c_[0].field()->zero())
                        : a.c_[0].field()->zero());
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return ScalarPoly(std::move(c));
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return ScalarPoly();
  auto f = a.c_[0].field();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, f->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return ScalarPoly(std::move(c));
}

ScalarPoly ScalarPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Scalar> c(k, c_[0].field()->zero());
  c.insert(c.end(), c_.begin(), c_.end());
  return ScalarPoly(std::move(c));
}

VecPoly::VecPoly(FieldPtr f, std::size_t dim) : f_(std::move(f)), dim_(dim) {}

VecPoly::VecPoly(FieldPtr f, std::size_t dim, std::vector<Coords> coeffs)
    : f_(std::move(f)), dim_(dim), c_(std::move(coeffs)) {
  trim();
}

VecPoly VecPoly::constant(const FieldPtr& f, const Coords& v) {
  return VecPoly(f, v.size(), {v});
}

void VecPoly::trim() {
  while (!c_.empty() && coords_zero(c_.back())) c_.pop_back();
}

Coords VecPoly::eval(const Scalar& lambda) const {
  Coords r = zero_coords(lambda.field(), dim_);
  Scalar pw = lambda.field()->one();
  for (std::size_t k = 0; k < c_.size(); ++k) {
    add_scaled(r, pw, c_[k]);
    pw *= lambda;
  }
  return r;
}

VecPoly operator+(const VecPoly& a, const VecPoly& b) {
  VecPoly r(a.f_ ? a.f_ : b.f_, std::max(a.dim_, b.dim_));
  std::vector<Coords> c;
  for (std::size_t k = 0; k < std::max(a.c_.size(), b.c_.size()); ++k) {
    Coords v = k < a.c_.size() ? a.c_[k] : zero_coords(r.f_, r.dim_);
    if (k < b.c_.size()) v = add(v, b.c_[k]);
    c.push_back(std::move(v));
  }
  return VecPoly(r.f_, r.dim_, std::move(c));
}

VecPoly operator-(const VecPoly& a, const VecPoly& b) {
  VecPoly nb = b * (-(b.f_ ? b.f_ : a.f_)->one());
  return a + nb;
}

VecPoly VecPoly::operator*(const Scalar& s) const {
  std::vector<Coords> c;
  c.reserve(c_.size());
  for (const auto& v : c_) c.push_back(scale(s, v));
  return VecPoly(f_, dim_, std::move(c));
}

VecPoly VecPoly::operator*(const ScalarPoly& s) const {
  if (is_zero() || s.is_zero()) return VecPoly(f_, dim_);
  std::vector<Coords> c(c_.size() + s.coeffs().size() - 1, zero_coords(f_, dim_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < s.coeffs().size(); ++j)
      add_scaled(c[i + j], s.coeffs()[j], c_[i]);
  return VecPoly(f_, dim_, std::move(c));
}

VecPoly VecPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Coords> c(k, zero_coords(f_, dim_));
  c.insert(c.end(), c_.begin(), c_.end());
  return VecPoly(f_, dim_, std::move(c));
}

VecPoly interpolate(const FieldPtr& f, const std::vector<Scalar>& points,
                    const std::vector<Coords>& values) {
  if (points.size() != values.size() || points.empty())
    throw std::invalid_argument("interpolation needs matching nonempty samples");
  std::size_t dim = values[0].size();
  VecPoly acc(f, dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    ScalarPoly basis = ScalarPoly::constant(f->one());
    Scalar denom = f->one();
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * ScalarPoly({-points[j], f->one()});
      denom *= points[i] - points[j];
    }
    acc = acc + VecPoly::constant(f, values[i]) * basis * denom.inv();
  }
  return acc;
}

}  // namespace axial
