#pragma once

#include "axial/line.hpp"

namespace axial {

/// D_{a,b} = [ad a, ad b]: x -> a(bx) - b(ax).
struct AssociatorMap {
  Element a, b;
  Matrix matrix;
};
AssociatorMap associator_map(const Element& a, const Element& b);

struct DerivationCheck {
  bool ok = false;
  std::size_t i = 0, j = 0;  // first basis pair violating Leibniz
  std::string witness;
  explicit operator bool() const { return ok; }
};

/// Leibniz rule D(e_i e_j) = D(e_i) e_j + e_i D(e_j) on all basis pairs.
DerivationCheck is_derivation(const AlgebraPtr& alg, const Matrix& D);

/// Canonical solidity decision: D_{a,b} is a derivation iff the line is solid.
bool derivation_test(const LineRecord& line, std::string* witness = nullptr);

/// The two vanishing criteria for a symbolic family member c = a_lambda:
/// P_{x,y}(c) = 4(cx)(cy) - (c,y)cx - (cy)x - (c,x)cy - (cx)y - (c,xy)c + c(xy)
/// and Q_x(c) = c(cx) - (cx + (c,x)c)/2, as coordinate polynomials in lambda
/// (toric: multiplied through by lambda^2 to clear lambda^{-1}). x, y are
/// basis vectors of the ambient algebra.
std::pair<VecPoly, VecPoly> solidity_polynomials(const LineRecord& line,
                                                 std::size_t x_idx, std::size_t y_idx,
                                                 bool b_side = false);

/// True iff P and Q vanish identically for all basis pairs (both families on
/// flat lines); nullopt for Flat2/Baric2/Baric1, where the finitely many
/// primitive idempotents make the polynomial route moot.
std::optional<bool> polynomial_test(const LineRecord& line,
                                    std::string* witness = nullptr);

/// Ground truth over F_p, p <= 13: enumerate every idempotent of the line
/// over F_{p^2} (solidity is base-change stable, and any failure already
/// shows over a quadratic extension), keep those primitive in the line
/// (1-eigenspace of the restricted adjoint is one-dimensional), and certify
/// each as an axis of the ambient algebra; nullopt over other fields. On
/// failure `witness` gets the bad idempotent (extension coordinates).
std::optional<bool> enumeration_test(const LineRecord& line,
                                     Coords* witness = nullptr);

/// Independent Leibniz oracle: over dual-number scalars F[eps]/(eps^2),
/// phi(x) = x + eps D(x) is an automorphism iff D is a derivation.
bool dual_number_check(const AlgebraPtr& alg, const Matrix& D);

/// Checks that phi_c(x) = x + 4(c,x)c - 4cx is multiplicative on basis
/// pairs (for an axis c this is the Miyamoto involution).
bool phi_c_automorphism_check(const Element& c, const FrobeniusForm& form);

struct SolidityVerdict {
  LineKind kind = LineKind::Flat2;
  Scalar gram_ab;
  bool by_derivation = false;
  std::optional<bool> by_polynomial;
  std::optional<bool> by_enumeration;
  bool solid = false;  // the canonical (derivation) verdict
  std::string witness;
};

/// Runs every applicable method and asserts they agree (a disagreement is a
/// bug, not an input condition — std::logic_error).
SolidityVerdict decide_solidity(const LineRecord& line);

}  // namespace axial
