#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "axial/matrix.hpp"

namespace axial {

class AlgebraTable;
using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

struct AlgebraMismatch : std::runtime_error {
  AlgebraMismatch() : std::runtime_error("elements belong to different algebras") {}
};

struct Element {
  AlgebraPtr alg;
  Coords coords;

  bool is_zero() const { return coords_zero(coords); }
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);  // algebra product
  Element operator*(const Scalar& s) const;
  Element operator-() const;
  bool operator==(const Element& o) const;
};

/// Commutative structure-constant algebra. Immutable after construction.
class AlgebraTable : public std::enable_shared_from_this<AlgebraTable> {
 public:
  /// table[i][j] = coordinates of e_i * e_j; must be symmetric in (i, j).
  static AlgebraPtr create(FieldPtr field, std::vector<std::vector<Coords>> table,
                           std::vector<std::string> labels = {},
                           std::vector<Coords> axes = {});

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Coords& table_entry(std::size_t i, std::size_t j) const {
    return table_[i * dim_ + j];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Declared generating axes (coordinate vectors).
  const std::vector<Coords>& axes() const { return axes_; }

  Element element(Coords c) const;
  Element basis_element(std::size_t i) const;
  Element zero() const;
  Coords product(const Coords& x, const Coords& y) const;

  /// Same table over a quadratic extension of the current field.
  AlgebraPtr base_change(const FieldPtr& ext) const;

 private:
  AlgebraTable() = default;
  FieldPtr field_;
  std::size_t dim_ = 0;
  std::vector<Coords> table_;
  std::vector<std::string> labels_;
  std::vector<Coords> axes_;
};

Matrix ad_matrix(const Element& a);
/// Basis of ker(ad(a) - lambda I), exact.
std::vector<Element> eigenspace(const Element& a, const Scalar& lambda);

struct EigenDecomposition {
  Element axis;
  std::vector<Element> basis_1, basis_0, basis_half;
  Matrix P;     // columns: basis_1 | basis_0 | basis_half
  Matrix Pinv;  // inverse change of basis
  /// Split x into (1, 0, 1/2)-components.
  std::array<Coords, 3> split(const Coords& x) const;
  /// Coefficient of the axis inside the A_1-component of x (primitive axes).
  Scalar axis_coefficient(const Coords& x) const;
};

enum class AxisFailure { NotIdempotent, NotSemisimple, NotPrimitive, FusionViolation };

struct AxisRecord {
  Element element;
  EigenDecomposition decomposition;
  bool fusion_ok = false;
};

struct CertifyResult {
  std::optional<AxisRecord> record;
  AxisFailure failure = AxisFailure::NotIdempotent;
  std::string detail;  // human-readable witness
  bool ok() const { return record.has_value(); }
};

/// Full Jordan-type-1/2 axis check: idempotency, semisimplicity over
/// {1, 0, 1/2}, primitivity, and all fusion products of the J(1/2) law.
CertifyResult certify_axis(const Element& a);

/// Miyamoto involution of a certified axis as a matrix (eigen-flip form).
Matrix miyamoto_matrix(const AxisRecord& a);

/// Smallest product-closed subspace containing gens, as an echelonized basis.
std::vector<Element> subalgebra_closure(const std::vector<Element>& gens);

struct SpanFailure : std::runtime_error {
  SpanFailure() : std::runtime_error("Miyamoto orbit of the axes does not span the algebra") {}
};
struct InconsistentForm : std::runtime_error {
  explicit InconsistentForm(const std::string& w)
      : std::runtime_error("Frobenius form verification failed: " + w) {}
};

struct FrobeniusForm {
  AlgebraPtr alg;
  Matrix gram;
  Scalar pair(const Coords& x, const Coords& y) const;
  Scalar pair(const Element& x, const Element& y) const { return pair(x.coords, y.coords); }
  /// Gram matrix over a quadratic extension of the base field.
  FrobeniusForm base_change(const AlgebraPtr& ext_alg) const;
};

/// Builds the Frobenius form from eigenprojections onto a spanning set of
/// axes (the Miyamoto-orbit closure of the given ones). Verifies symmetry
/// and associativity on all basis triples.
FrobeniusForm frobenius_form(const AlgebraPtr& alg, const std::vector<AxisRecord>& axes);

/// Verifies the basic component identities (i)-(iii) relating products, the
/// Frobenius form, and the Miyamoto involution on every basis vector.
/// Returns a witness description on failure.
std::optional<std::string> check_basiccomp(const AxisRecord& a, const FrobeniusForm& form);

}  // namespace axial
