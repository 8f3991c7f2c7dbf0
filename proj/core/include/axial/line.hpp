#pragma once

#include "axial/algebra.hpp"
#include "axial/vecpoly.hpp"

namespace axial {

/// Isomorphism type of a 2-generated subalgebra ("line").
enum class LineKind { Toric, Flat3, Flat2, Baric3, Baric2, Baric1 };
const char* to_string(LineKind k);

struct SameAxis : std::runtime_error {
  SameAxis() : std::runtime_error("a line needs two distinct axes") {}
};
struct LineDimZeroOrOne : std::runtime_error {
  LineDimZeroOrOne() : std::runtime_error("degenerate line carries no idempotent family") {}
};
struct ZeroParameter : std::runtime_error {
  ZeroParameter() : std::runtime_error("toric family members need lambda != 0") {}
};
/// Toric basis construction failed even after one quadratic extension.
struct ExtensionInsufficient : std::runtime_error {
  ExtensionInsufficient() : std::runtime_error(
      "toric basis is not constructible over a single quadratic extension") {}
};

/// A classified line with its canonical basis. When the toric construction
/// needs a square root missing from the base field, `ambient` is the same
/// algebra over one quadratic extension and `extended` is set; all coordinate
/// data below lives over `ambient`'s field.
struct LineRecord {
  AxisRecord a, b;
  LineKind kind = LineKind::Flat2;
  Scalar gram_ab;
  AlgebraPtr ambient;
  FrobeniusForm form;
  std::vector<Coords> span;  // echelon basis of the line
  std::size_t dim = 0;
  bool extended = false;

  // pre-extension snapshot (same objects as above when !extended); lets
  // field-size-bounded work (idempotent enumeration) run over the base field
  AlgebraPtr base_ambient;
  std::vector<Coords> base_span;
  Coords base_a, base_b;

  // canonical symbols (set per kind)
  std::optional<Coords> u, e, f;  // toric: a = e + u/2 + f, e^2 = f^2 = 0
  std::optional<Coords> v, v2;    // flat: v = ab; baric: v = 2(ab - a), v2 = v^2
  std::optional<Scalar> mu;       // toric parameter: b = mu e + u/2 + mu^{-1} f

  /// Canonical basis per kind: toric {e,u,f}; flat {a,b,v} / {a,b};
  /// baric {a,v,v2} / {a,v} / {a}.
  std::vector<Coords> canonical_basis() const;
};

/// Classify the subalgebra generated by two certified axes, branching on
/// the Frobenius value (a,b) in {0, 1, other} and the line dimension, and
/// build the canonical basis (toric case: unit, half-eigenvector, then the
/// null pair e, f; extends the field by one square root when required).
LineRecord classify_line(const AxisRecord& a, const AxisRecord& b,
                         const FrobeniusForm& form);

/// One-parameter family of primitive idempotents on a line. The coordinates
/// of the member are polynomial in lambda; for toric lines the stored
/// polynomial is lambda * a_lambda (degree 2), clearing the lambda^{-1}.
struct IdempotentFamily {
  LineRecord line;
  bool b_side = false;  // flat lines carry a second family b + lambda v
  VecPoly poly;
  bool toric() const { return line.kind == LineKind::Toric; }
};

/// Builds the family: toric lambda e + u/2 + lambda^{-1} f; flat a + lambda v
/// (b_side: b + lambda v); baric a + lambda v + lambda^2 v2 (3-dim) or
/// a + lambda v (2-dim). Throws LineDimZeroOrOne for Flat2/Baric1.
IdempotentFamily make_family(const LineRecord& line, bool b_side = false);

/// Evaluates a_lambda and asserts idempotency.
Element family_member(const IdempotentFamily& fam, const Scalar& lambda);

/// Parameter of a_lambda^{tau_{a_mu}}: lambda^{-1} mu^2 (toric), 2 mu - lambda
/// (flat and baric, same family), -4 - 2 mu - lambda (flat, conjugating by
/// the opposite family's member b_mu; cross_family is flat-only).
Scalar miyamoto_action_closed_form(const IdempotentFamily& fam, const Scalar& lambda,
                                   const Scalar& mu, bool cross_family = false);

struct OrbitSize {
  bool infinite = false;
  std::size_t size = 0;
  bool proven = true;  // false: root-of-unity search hit the bound
  bool operator==(const OrbitSize& o) const {
    return infinite == o.infinite && (infinite || size == o.size);
  }
};

/// Size of the Miyamoto orbit of the generating axes on the line, computed
/// two ways — closed form (order of mu for toric; characteristic p for
/// 3-dim flat/baric; 2 for Flat2; 1 for Baric1) and explicit closure under
/// tau_a, tau_b — which must agree.
OrbitSize orbit_size(const LineRecord& line, std::size_t bound = 1000);

}  // namespace axial
