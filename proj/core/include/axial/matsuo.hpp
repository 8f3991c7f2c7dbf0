#pragma once

#include "axial/algebra.hpp"
#include "axial/perm.hpp"

namespace axial {

struct FieldCharTwo : std::runtime_error {
  FieldCharTwo() : std::runtime_error("Matsuo algebras require characteristic != 2") {}
};

struct MatsuoConfig {
  FieldPtr field;
  Scalar eta;  // must avoid {0, 1}; defaults to 1/2
  static MatsuoConfig standard(const FieldPtr& f) { return {f, f->half()}; }
};

/// Matsuo algebra of a 3-transposition class: dim = |D|, basis indexed by
/// the sorted class; e_a e_b = e_a (a = b), 0 (o(ab) = 2),
/// eta/2 (e_a + e_b - e_{a^b}) (o(ab) = 3). Every basis vector is
/// registered as a generating axis.
AlgebraPtr build_matsuo(const TranspositionClass& cls, const MatsuoConfig& cfg);

/// Block-diagonal direct sum of structure-constant algebras over one field.
AlgebraPtr direct_sum(const std::vector<AlgebraPtr>& parts);

/// 3-dimensional flat line J(0): basis {a, b, v = ab}, v a 1/2-eigenvector
/// of both generators, v^2 = 0. Generating axes a, b.
AlgebraPtr make_flat_line_algebra(const FieldPtr& f);

/// 3-dimensional baric line J(1): basis {a, v, v^2} with v = 2(ab - a);
/// generating axes a and b = a + v + v^2.
AlgebraPtr make_baric_line_algebra(const FieldPtr& f);

}  // namespace axial
