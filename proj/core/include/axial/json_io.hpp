#pragma once

#include <cstdint>

#include "json.hpp"

#include "axial/algebra.hpp"
#include "axial/perm.hpp"

namespace axial {

using nlohmann::json;

struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& w) : std::runtime_error(w) {}
};

// Field spec: {"kind":"Q"} | {"kind":"Fp","p":5}
//           | {"kind":"Quad","base":<spec>,"minpoly":[c0,c1]}  (t^2+c1 t+c0)
json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const json& j);

// Scalars: exact strings "n" / "n/d" over Q, residues over F_p, [c0,c1] pairs
// over quadratic extensions. Never floats.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldPtr& f, const json& j);

// Algebra: {"field","dim","table","axes","labels"}; table[i][j] is the
// coordinate vector of e_i e_j.
json algebra_to_json(const AlgebraPtr& alg);
AlgebraPtr algebra_from_json(const json& j);

struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> generators;  // image arrays
  std::vector<std::vector<std::uint32_t>> seeds;
  std::size_t expected_class_size = 0;
  std::string sha256;  // digest of the canonical content (below)
};

json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const json& j);

/// SHA-256 hex of the compact dump of {degree, generators, name, seeds}.
std::string group_digest(const GroupSpec& g);

/// Conjugation closure of the seeds; verifies the stored digest and the
/// expected class size.
TranspositionClass build_class(const GroupSpec& g);

}  // namespace axial
