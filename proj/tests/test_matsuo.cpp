#include "doctest.h"

#include "helpers.hpp"

using namespace axial;
using axial::testing::matsuo_fixture;

TEST_CASE("M(S3) over Q: dimension, labels, structure constants") {
  auto Q = Field::rationals();
  const auto& fx = matsuo_fixture("S3", Q);
  const auto& alg = fx.alg;
  REQUIRE(alg->dim() == 3);
  CHECK(alg->axes().size() == 3);

  // e_i^2 = e_i; for distinct transpositions of S3,
  // e_i e_j = 1/4 (e_i + e_j - e_k) with k the third one
  Scalar q = Q->from_ratio(1, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Element prod = alg->basis_element(i) * alg->basis_element(j);
      if (i == j) {
        CHECK(prod == alg->basis_element(i));
      } else {
        std::size_t k = 3 - i - j;
        Element expect = (alg->basis_element(i) + alg->basis_element(j) -
                          alg->basis_element(k)) * q;
        CHECK(prod == expect);
      }
    }
  for (const auto& l : alg->labels()) CHECK(l.front() == '(');
}

TEST_CASE("M(S4): products follow the order of the product of transpositions") {
  auto Q = Field::rationals();
  auto cls = catalog_class("S4");
  const auto& alg = matsuo_fixture("S4", Q).alg;
  REQUIRE(alg->dim() == 6);
  std::size_t commuting = 0, collinear = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const Perm& di = cls.class_D[i];
      const Perm& dj = cls.class_D[j];
      Element prod = alg->basis_element(i) * alg->basis_element(j);
      if ((di * dj).order() == 2) {
        CHECK(prod.is_zero());
        ++commuting;
      } else {
        std::size_t k = cls.index_of(di.conjugated_by(dj));
        Element expect = (alg->basis_element(i) + alg->basis_element(j) -
                          alg->basis_element(k)) * Q->from_ratio(1, 4);
        CHECK(prod == expect);
        ++collinear;
      }
    }
  CHECK(commuting == 3);   // (01)(23), (02)(13), (03)(12)
  CHECK(collinear == 12);
}

TEST_CASE("catalog class sizes match the group theory") {
  CHECK(catalog_class("S3").class_D.size() == 3);
  CHECK(catalog_class("S4").class_D.size() == 6);
  CHECK(catalog_class("S5").class_D.size() == 10);
  CHECK(catalog_class("WD4").class_D.size() == 12);
  CHECK(catalog_class("3_3_S4").class_D.size() == 18);
}

TEST_CASE("eta must avoid 0 and 1") {
  auto Q = Field::rationals();
  auto cls = catalog_class("S3");
  CHECK_THROWS_AS(build_matsuo(cls, {Q, Q->zero()}), std::invalid_argument);
  CHECK_THROWS_AS(build_matsuo(cls, {Q, Q->one()}), std::invalid_argument);
  CHECK_NOTHROW(build_matsuo(cls, {Q, Q->from_int(2)}));
}

TEST_CASE("generic eta changes the collinear product but keeps idempotency") {
  auto Q = Field::rationals();
  auto alg = build_matsuo(catalog_class("S3"), {Q, Q->from_ratio(1, 3)});
  Element p = alg->basis_element(0) * alg->basis_element(1);
  Element expect = (alg->basis_element(0) + alg->basis_element(1) -
                    alg->basis_element(2)) * Q->from_ratio(1, 6);
  CHECK(p == expect);
  CHECK(alg->basis_element(0) * alg->basis_element(0) == alg->basis_element(0));
}

TEST_CASE("direct sum is block diagonal and keeps all axes") {
  auto Q = Field::rationals();
  const auto& a = matsuo_fixture("S3", Q).alg;
  auto sum = direct_sum({a, a});
  REQUIRE(sum->dim() == 6);
  CHECK(sum->axes().size() == 6);
  // cross-block products vanish
  CHECK((sum->basis_element(0) * sum->basis_element(4)).is_zero());
  // within-block products match the summand
  Coords p = sum->table_entry(3, 4);
  Coords q = a->table_entry(0, 1);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(p[k] == Q->zero());
    CHECK(p[3 + k] == q[k]);
  }
}

TEST_CASE("model line algebras expose certified axes") {
  auto Q = Field::rationals();
  for (auto alg : {make_flat_line_algebra(Q), make_baric_line_algebra(Q)}) {
    REQUIRE(alg->dim() == 3);
    REQUIRE(alg->axes().size() == 2);
    for (const auto& ax : alg->axes()) CHECK(certify_axis(alg->element(ax)).ok());
  }
}
