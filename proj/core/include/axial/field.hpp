#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace axial {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

struct FieldMismatch : std::runtime_error {
  FieldMismatch() : std::runtime_error("operands belong to different fields") {}
};
struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Exact scalar: a rational, a residue mod an odd prime, or an element
/// c0 + c1*t of a quadratic extension. Immutable value type.
class Scalar {
 public:
  Scalar() = default;  // detached zero-like placeholder; do not operate on it

  const FieldPtr& field() const { return f_; }
  bool valid() const { return f_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inv() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(long e) const;

  /// Canonical text form: "p/q" or "p" over Q, the residue over F_p,
  /// "(c0,c1)" over a quadratic extension.
  std::string str() const;

  // carrier accessors (valid for the matching field kind only)
  const mpq_class& rational() const { return rat_; }
  std::uint64_t residue() const { return res_; }
  const Scalar& ext0() const { return (*ext_)[0]; }
  const Scalar& ext1() const { return (*ext_)[1]; }

 private:
  friend class Field;
  FieldPtr f_;
  mpq_class rat_;
  std::uint64_t res_ = 0;
  std::shared_ptr<const std::array<Scalar, 2>> ext_;
};

/// A field descriptor plus its arithmetic. Instances are immutable and
/// shared; equality of specs is structural (two Field::prime(5) compare
/// equal), so scalars from independently built fields interoperate.
class Field : public std::enable_shared_from_this<Field> {
 public:
  enum class Kind { Rationals, Prime, Quadratic };

  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);  // odd prime, p < 2^31
  /// Extension by a root of t^2 + c1*t + c0, which must be irreducible
  /// over the base (checked).
  static FieldPtr quadratic(const FieldPtr& base, const Scalar& c0, const Scalar& c1);

  Kind kind() const { return kind_; }
  std::uint64_t prime_p() const { return p_; }
  const FieldPtr& base() const { return base_; }
  const Scalar& minpoly_c0() const { return c0_; }
  const Scalar& minpoly_c1() const { return c1_; }

  /// 0 for characteristic-zero fields, p otherwise.
  std::uint64_t characteristic() const;

  bool same(const Field& o) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_ratio(long num, long den) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar half() const { return from_ratio(1, 2); }
  /// Quadratic fields only: c0 + c1*t.
  Scalar make_ext(const Scalar& c0, const Scalar& c1) const;
  /// Quadratic fields only: lift a base-field value.
  Scalar embed(const Scalar& base_val) const;
  /// Quadratic fields only: the adjoined root t.
  Scalar generator() const;

  bool is_square(const Scalar& a) const;
  std::optional<Scalar> sqrt(const Scalar& a) const;

  std::string describe() const;

 private:
  Field() = default;
  Kind kind_ = Kind::Rationals;
  std::uint64_t p_ = 0;
  FieldPtr base_;
  Scalar c0_, c1_;

  friend class Scalar;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar wrap_rat(mpq_class q) const;
  Scalar wrap_res(std::uint64_t r) const;
  Scalar wrap_ext(Scalar a, Scalar b) const;
};

/// Throws FieldMismatch unless both scalars live over structurally equal fields.
void check_same_field(const Scalar& a, const Scalar& b);
bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Dual number r + eps*e with eps^2 = 0, over any Field.
struct DualScalar {
  Scalar real, eps;

  DualScalar() = default;
  DualScalar(Scalar r, Scalar e) : real(std::move(r)), eps(std::move(e)) {}
  static DualScalar lift(const Scalar& r) { return {r, r.field()->zero()}; }

  bool is_zero() const { return real.is_zero() && eps.is_zero(); }
  bool operator==(const DualScalar& o) const { return real == o.real && eps == o.eps; }

  friend DualScalar operator+(const DualScalar& a, const DualScalar& b) {
    return {a.real + b.real, a.eps + b.eps};
  }
  friend DualScalar operator-(const DualScalar& a, const DualScalar& b) {
    return {a.real - b.real, a.eps - b.eps};
  }
  friend DualScalar operator*(const DualScalar& a, const DualScalar& b) {
    return {a.real * b.real, a.real * b.eps + a.eps * b.real};
  }
  DualScalar operator-() const { return {-real, -eps}; }
  DualScalar inv() const {  // needs real != 0
    Scalar ri = real.inv();
    return {ri, -(eps * ri * ri)};
  }
};

}  // namespace axial
