#include "doctest.h"

#include "axial/jordan.hpp"
#include "axial/vecpoly.hpp"

using namespace axial;

namespace {

Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c,
                     std::mt19937_64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar(f, rng);
  return m;
}

}  // namespace

TEST_CASE("rref, rank and kernel over F_7") {
  auto F = Field::prime(7);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(F, 5, 7, rng);
    std::size_t rank = m.rank();
    auto ker = m.kernel();
    CHECK(rank + ker.size() == 7);  // rank-nullity
    for (const auto& v : ker) CHECK(coords_zero(m.apply(v)));
  }
}

TEST_CASE("solve returns an exact solution or detects inconsistency") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(Q, 4, 3, rng);
    Coords x = random_coords(Q, 3, rng);
    Coords b = m.apply(x);
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
  }
  Matrix z(Q, 2, 2);  // zero matrix: x + anything = e_0 is inconsistent
  CHECK(!z.solve({Q->one(), Q->zero()}).has_value());
}

TEST_CASE("inverse round-trips") {
  auto F = Field::prime(11);
  std::mt19937_64 rng(17);
  int invertible = 0;
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(F, 4, 4, rng);
    auto inv = m.inverse();
    if (!inv) {
      CHECK(m.rank() < 4);
      continue;
    }
    ++invertible;
    CHECK(*inv * m == Matrix::identity(F, 4));
    CHECK(m * *inv == Matrix::identity(F, 4));
  }
  CHECK(invertible > 0);
}

TEST_CASE("RowSpan tracks rank and membership deterministically") {
  auto Q = Field::rationals();
  RowSpan span(Q, 3);
  Coords v1{Q->one(), Q->from_int(2), Q->from_int(3)};
  Coords v2{Q->zero(), Q->one(), Q->one()};
  CHECK(span.insert(v1));
  CHECK(span.insert(v2));
  CHECK(!span.insert(add(v1, v2)));
  CHECK(span.rank() == 2);
  CHECK(span.contains(sub(v1, scale(Q->from_int(5), v2))));
  CHECK(!span.contains({Q->zero(), Q->zero(), Q->one()}));
}

TEST_CASE("scalar polynomial arithmetic and evaluation") {
  auto F = Field::prime(5);
  ScalarPoly p({F->from_int(1), F->from_int(2)});   // 1 + 2x
  ScalarPoly q({F->from_int(3), F->from_int(4)});   // 3 + 4x
  ScalarPoly prod = p * q;
  CHECK(prod.degree() == 2);
  for (long v = 0; v < 5; ++v) {
    Scalar x = F->from_int(v);
    CHECK(prod.eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
  CHECK(p.shifted(2).degree() == 3);
  CHECK((p - p).is_zero());
}

TEST_CASE("vector polynomial interpolation round-trips") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(19);
  VecPoly vp(Q, 2, {random_coords(Q, 2, rng), random_coords(Q, 2, rng),
                    random_coords(Q, 2, rng)});
  std::vector<Scalar> pts{Q->from_int(0), Q->from_int(1), Q->from_int(2),
                          Q->from_int(-1)};
  std::vector<Coords> vals;
  for (const auto& x : pts) vals.push_back(vp.eval(x));
  VecPoly back = interpolate(Q, pts, vals);
  CHECK(back.degree() == vp.degree());
  CHECK(back.eval(Q->from_ratio(7, 3)) == vp.eval(Q->from_ratio(7, 3)));
}

TEST_CASE("VecPoly shift multiplies by the variable") {
  auto Q = Field::rationals();
  VecPoly vp = VecPoly::constant(Q, {Q->one(), Q->from_int(2)});
  VecPoly shifted = vp.shifted(3);
  Scalar x = Q->from_ratio(2, 5);
  CHECK(shifted.eval(x) == scale(x.pow(3), vp.eval(x)));
}
