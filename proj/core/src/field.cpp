#include "axial/field.hpp"

#include <cassert>

namespace axial {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZero();
  return mod_pow(a, p - 2, p);
}

// Tonelli-Shanks, p odd prime, a a quadratic residue.
std::uint64_t mod_sqrt(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  std::uint64_t z = 2;
  while (mod_pow(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, c = mod_pow(z, q, p), t = mod_pow(a, q, p),
                r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) { tt = tt * tt % p; ++i; }
    std::uint64_t b = mod_pow(c, 1ull << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return r;
}

}  // namespace

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same(*b);
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid() || !same_field(a.field(), b.field()))
    throw FieldMismatch();
}

bool Field::same(const Field& o) const {
  if (this == &o) return true;
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Rationals: return true;
    case Kind::Prime: return p_ == o.p_;
    case Kind::Quadratic:
      return base_->same(*o.base_) && c0_ == o.c0_ && c1_ == o.c1_;
  }
  return false;
}

FieldPtr Field::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Rationals;
    return FieldPtr(f);
  }();
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (p >= (1ull << 31) || !is_prime_u64(p))
    throw std::invalid_argument("p must be an odd prime < 2^31");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Prime;
  f->p_ = p;
  return f;
}

FieldPtr Field::quadratic(const FieldPtr& base, const Scalar& c0, const Scalar& c1) {
  if (!base || !same_field(c0.field(), base) || !same_field(c1.field(), base))
    throw FieldMismatch();
  // t^2 + c1*t + c0 irreducible <=> disc = c1^2 - 4*c0 is not a square in base
  Scalar disc = c1 * c1 - base->from_int(4) * c0;
  if (base->is_square(disc))
    throw std::invalid_argument("minimal polynomial is reducible over the base field");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = Kind::Quadratic;
  f->base_ = base;
  f->c0_ = c0;
  f->c1_ = c1;
  return f;
}

std::uint64_t Field::characteristic() const {
  switch (kind_) {
    case Kind::Rationals: return 0;
    case Kind::Prime: return p_;
    case Kind::Quadratic: return base_->characteristic();
  }
  return 0;
}

Scalar Field::wrap_rat(mpq_class q) const {
  Scalar s;
  s.f_ = shared_from_this();
  q.canonicalize();
  s.rat_ = std::move(q);
  return s;
}

Scalar Field::wrap_res(std::uint64_t r) const {
  Scalar s;
  s.f_ = shared_from_this();
  s.res_ = r % p_;
  return s;
}

Scalar Field::wrap_ext(Scalar a, Scalar b) const {
  Scalar s;
  s.f_ = shared_from_this();
  s.ext_ = std::make_shared<std::array<Scalar, 2>>(
      std::array<Scalar, 2>{std::move(a), std::move(b)});
  return s;
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  switch (kind_) {
    case Kind::Rationals: return wrap_rat(mpq_class(v));
    case Kind::Prime: {
      long m = v % static_cast<long>(p_);
      if (m < 0) m += static_cast<long>(p_);
      return wrap_res(static_cast<std::uint64_t>(m));
    }
    case Kind::Quadratic: return wrap_ext(base_->from_int(v), base_->from_int(0));
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::from_ratio(long num, long den) const {
  return from_rational(mpq_class(num, den));
}

Scalar Field::from_rational(const mpq_class& q) const {
  switch (kind_) {
    case Kind::Rationals: return wrap_rat(q);
    case Kind::Prime: {
      mpz_class num = q.get_num() % static_cast<long>(p_);
      mpz_class den = q.get_den() % static_cast<long>(p_);
      std::uint64_t n = (num.get_si() + static_cast<long>(p_)) % p_;
      std::uint64_t d = (den.get_si() + static_cast<long>(p_)) % p_;
      return wrap_res(n * mod_inv(d, p_) % p_);
    }
    case Kind::Quadratic:
      return wrap_ext(base_->from_rational(q), base_->from_int(0));
  }
  throw std::logic_error("bad field kind");
}

Scalar Field::make_ext(const Scalar& c0, const Scalar& c1) const {
  if (kind_ != Kind::Quadratic) throw std::logic_error("make_ext on a non-extension field");
  if (!same_field(c0.field(), base_) || !same_field(c1.field(), base_))
    throw FieldMismatch();
  return wrap_ext(c0, c1);
}

Scalar Field::embed(const Scalar& base_val) const {
  return make_ext(base_val, base_->zero());
}

Scalar Field::generator() const {
  if (kind_ != Kind::Quadratic) throw std::logic_error("generator of a non-extension field");
  return wrap_ext(base_->zero(), base_->one());
}

bool Scalar::is_zero() const {
  if (!f_) throw FieldMismatch();
  switch (f_->kind()) {
    case Field::Kind::Rationals: return rat_ == 0;
    case Field::Kind::Prime: return res_ == 0;
    case Field::Kind::Quadratic: return ext0().is_zero() && ext1().is_zero();
  }
  return false;
}

bool Scalar::is_one() const { return *this == f_->one(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same_field(*this, o);
  switch (f_->kind()) {
    case Field::Kind::Rationals: return rat_ == o.rat_;
    case Field::Kind::Prime: return res_ == o.res_;
    case Field::Kind::Quadratic:
      return ext0() == o.ext0() && ext1() == o.ext1();
  }
  return false;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  const Field& f = *a.f_;
  switch (f.kind()) {
    case Field::Kind::Rationals: return f.wrap_rat(a.rat_ + b.rat_);
    case Field::Kind::Prime: return f.wrap_res(a.res_ + b.res_);
    case Field::Kind::Quadratic:
      return f.wrap_ext(a.ext0() + b.ext0(), a.ext1() + b.ext1());
  }
  throw std::logic_error("bad field kind");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar Scalar::operator-() const {
  if (!f_) throw FieldMismatch();
  switch (f_->kind()) {
    case Field::Kind::Rationals: return f_->wrap_rat(-rat_);
    case Field::Kind::Prime: return f_->wrap_res(f_->prime_p() - res_);
    case Field::Kind::Quadratic: return f_->wrap_ext(-ext0(), -ext1());
  }
  throw std::logic_error("bad field kind");
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  const Field& f = *a.f_;
  switch (f.kind()) {
    case Field::Kind::Rationals: return f.wrap_rat(a.rat_ * b.rat_);
    case Field::Kind::Prime: return f.wrap_res(a.res_ * b.res_ % f.prime_p());
    case Field::Kind::Quadratic: {
      // (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0
      Scalar hi = a.ext1() * b.ext1();
      Scalar c0 = a.ext0() * b.ext0() - hi * f.minpoly_c0();
      Scalar c1 = a.ext0() * b.ext1() + a.ext1() * b.ext0() - hi * f.minpoly_c1();
      return f.wrap_ext(std::move(c0), std::move(c1));
    }
  }
  throw std::logic_error("bad field kind");
}

Scalar Scalar::inv() const {
  if (!f_) throw FieldMismatch();
  if (is_zero()) throw DivisionByZero();
  switch (f_->kind()) {
    case Field::Kind::Rationals: return f_->wrap_rat(1 / rat_);
    case Field::Kind::Prime: return f_->wrap_res(mod_inv(res_, f_->prime_p()));
    case Field::Kind::Quadratic: {
      // conjugate trick: norm(a0 + a1 t) = a0^2 - a0 a1 c1 + a1^2 c0
      Scalar n = ext0() * ext0() - ext0() * ext1() * f_->minpoly_c1() +
                 ext1() * ext1() * f_->minpoly_c0();
      Scalar ni = n.inv();
      return f_->wrap_ext((ext0() - ext1() * f_->minpoly_c1()) * ni, -(ext1() * ni));
    }
  }
  throw std::logic_error("bad field kind");
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar Scalar::pow(long e) const {
  if (!f_) throw FieldMismatch();
  if (e < 0) return inv().pow(-e);
  Scalar r = f_->one(), b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

bool Field::is_square(const Scalar& a) const { return sqrt(a).has_value(); }

std::optional<Scalar> Field::sqrt(const Scalar& a) const {
  if (!same_field(a.field(), shared_from_this())) throw FieldMismatch();
  if (a.is_zero()) return zero();
  switch (kind_) {
    case Kind::Rationals: {
      const mpq_class& q = a.rational();
      if (q < 0) return std::nullopt;
      if (!mpz_perfect_square_p(q.get_num_mpz_t()) ||
          !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return wrap_rat(mpq_class(n, d));
    }
    case Kind::Prime: {
      if (mod_pow(a.residue(), (p_ - 1) / 2, p_) != 1) return std::nullopt;
      return wrap_res(mod_sqrt(a.residue(), p_));
    }
    case Kind::Quadratic: {
      // y = d0 + d1 t with y^2 = x0 + x1 t. The d1 = 0 branch needs x1 = 0
      // and x0 a base square; otherwise w = d1^2 solves
      //   (c1^2 - 4 c0) w^2 + (2 c1 x1 - 4 x0) w + x1^2 = 0  over the base.
      const Scalar& x0 = a.ext0();
      const Scalar& x1 = a.ext1();
      if (x1.is_zero()) {
        if (auto r = base_->sqrt(x0)) return wrap_ext(*r, base_->zero());
      }
      Scalar four = base_->from_int(4);
      Scalar qa = c1_ * c1_ - four * c0_;  // nonzero: minpoly is irreducible
      Scalar qb = base_->from_int(2) * c1_ * x1 - four * x0;
      Scalar qc = x1 * x1;
      Scalar disc = qb * qb - four * qa * qc;
      auto sd = base_->sqrt(disc);
      if (!sd) return std::nullopt;
      Scalar inv2a = (base_->from_int(2) * qa).inv();
      for (const Scalar& w : {(-qb + *sd) * inv2a, (-qb - *sd) * inv2a}) {
        if (w.is_zero()) continue;
        auto d1 = base_->sqrt(w);
        if (!d1) continue;
        Scalar d0 = (x1 / *d1 + *d1 * c1_) * base_->from_ratio(1, 2);
        Scalar cand = wrap_ext(d0, *d1);
        if (cand * cand == a) return cand;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string Scalar::str() const {
  if (!f_) return "<invalid>";
  switch (f_->kind()) {
    case Field::Kind::Rationals:
      return rat_.get_str();
    case Field::Kind::Prime:
      return std::to_string(res_);
    case Field::Kind::Quadratic:
      return "(" + ext0().str() + "," + ext1().str() + ")";
  }
  return "?";
}

std::string Field::describe() const {
  switch (kind_) {
    case Kind::Rationals: return "Q";
    case Kind::Prime: return "F" + std::to_string(p_);
    case Kind::Quadratic:
      return base_->describe() + "[t]/(t^2+" + c1_.str() + "t+" + c0_.str() + ")";
  }
  return "?";
}

}  // namespace axial
