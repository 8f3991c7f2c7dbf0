#pragma once

#include <vector>

#include "axial/matrix.hpp"

namespace axial {

/// Univariate polynomial with Scalar coefficients; trailing zeros trimmed,
/// the zero polynomial has empty coefficient list.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<Scalar> coeffs);
  static ScalarPoly constant(const Scalar& c);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar eval(const Scalar& x) const;

  friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  ScalarPoly shifted(std::size_t k) const;  // multiply by lambda^k

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Polynomial whose coefficients are coordinate vectors of a fixed dimension.
class VecPoly {
 public:
  VecPoly() = default;
  VecPoly(FieldPtr f, std::size_t dim);
  VecPoly(FieldPtr f, std::size_t dim, std::vector<Coords> coeffs);
  static VecPoly constant(const FieldPtr& f, const Coords& v);

  const FieldPtr& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Coords>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Coords eval(const Scalar& lambda) const;

  friend VecPoly operator+(const VecPoly& a, const VecPoly& b);
  friend VecPoly operator-(const VecPoly& a, const VecPoly& b);
  VecPoly operator*(const Scalar& s) const;
  VecPoly operator*(const ScalarPoly& s) const;
  VecPoly shifted(std::size_t k) const;  // multiply by lambda^k

 private:
  void trim();
  FieldPtr f_;
  std::size_t dim_ = 0;
  std::vector<Coords> c_;
};

/// Lagrange interpolation through d+1 (point, vector) samples.
VecPoly interpolate(const FieldPtr& f, const std::vector<Scalar>& points,
                    const std::vector<Coords>& values);

}  // namespace axial
