#include "doctest.h"

#include "axial/perm.hpp"

using namespace axial;

namespace {

Perm transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  std::swap(img[a], img[b]);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("permutation composition, inverse and order") {
  Perm p({1, 2, 0, 3});  // 3-cycle (0 1 2)
  CHECK(p.order() == 3);
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  Perm t = transposition(4, 0, 1);
  CHECK((p * t)(0) == 2);  // p(t(0)) = p(1) = 2
  CHECK(t.conjugated_by(p) == p.inverse() * t * p);
  CHECK(t.cycle_str() == "(0 1)");
}

TEST_CASE("close_class recovers the transpositions of S_n") {
  for (std::size_t n : {3, 4, 5}) {
    std::vector<Perm> gens;
    for (std::uint32_t i = 0; i + 1 < n; ++i)
      gens.push_back(transposition(n, i, i + 1));
    auto cls = close_class(gens, {gens[0]}, "Sn");
    CHECK(cls.class_D.size() == n * (n - 1) / 2);
    std::size_t fact = 1;
    for (std::size_t k = 2; k <= n; ++k) fact *= k;
    REQUIRE(cls.group_order.has_value());
    CHECK(*cls.group_order == fact);
    // canonical sort fixes the basis order
    CHECK(std::is_sorted(cls.class_D.begin(), cls.class_D.end()));
    for (const auto& d : cls.class_D)
      CHECK(cls.class_D[cls.index_of(d)] == d);
  }
}

TEST_CASE("class closure is conjugation-stable with pairwise order <= 3") {
  std::vector<Perm> gens = {transposition(4, 0, 1), transposition(4, 1, 2),
                            transposition(4, 2, 3)};
  auto cls = close_class(gens, {gens[0]});
  for (const auto& d : cls.class_D) {
    CHECK(d.order() == 2);
    for (const auto& e : cls.class_D) {
      CHECK((d * e).order() <= 3);
      CHECK(std::binary_search(cls.class_D.begin(), cls.class_D.end(),
                               d.conjugated_by(e)));
    }
  }
}

TEST_CASE("close_class rejects bad seeds") {
  Perm cycle({1, 2, 0});
  CHECK_THROWS_AS(close_class({cycle}, {cycle}), NotInvolution);
  // (0 1) and (2 3)(4 5)... no: use two involutions whose product has order 4
  Perm a = transposition(4, 0, 1);
  Perm b({2, 3, 0, 1});  // (0 2)(1 3); a*b has order 4
  CHECK((a * b).order() == 4);
  CHECK_THROWS_AS(close_class({a, b}, {a, b}), OrderViolation);
}

TEST_CASE("degree mismatch is rejected") {
  CHECK_THROWS_AS((void)(transposition(3, 0, 1) * transposition(4, 0, 1)),
                  DegreeMismatch);
}
