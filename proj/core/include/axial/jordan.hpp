#pragma once

#include <cstdint>
#include <random>

#include "axial/solidity.hpp"

namespace axial {

struct OrbitCapExceeded : std::runtime_error {
  OrbitCapExceeded()
      : std::runtime_error("Miyamoto orbit closure exceeded its cap") {}
};

enum class JordanVerdict { Jordan, NotJordan, Inconclusive };
const char* to_string(JordanVerdict v);

struct IdentityReport {
  bool almost_jordan = false;
  std::string almost_witness;
  bool linearized_jordan = false;
  std::string linearized_witness;
  bool jordan_sampled = false;
  bool sample_exhaustive = false;
  std::size_t sample_count = 0;
  bool spans_by_axes = false;
  bool spans_known = false;  // false when the orbit cap was exceeded
  bool all_lines_solid = false;
  JordanVerdict final_verdict = JordanVerdict::Inconclusive;
};

/// D_{e_i,e_j} is a derivation for every basis pair i < j (multilinearity of
/// the Leibniz defect makes basis pairs sufficient). Witness: first failure.
bool almost_jordan_test(const AlgebraPtr& alg, std::string* witness = nullptr);

/// Direct degree-4 form of the same condition, 2((yx)x)x + y x^3 = 3(y x^2)x,
/// checked on all basis pairs plus `trials` seeded random pairs. A false
/// return always implies almost_jordan_test is false; the converse is only
/// as strong as the sample.
bool almost_jordan_direct_sample(const AlgebraPtr& alg, std::size_t trials,
                                 std::uint64_t seed);

/// Four-variable linearized Jordan identity
/// (yz)(ax) + (xy)(az) + (xz)(ay) = ((yz)a)x + ((xy)a)z + ((xz)a)y
/// on all basis quadruples (multilinear, symmetric in x, y, z).
bool linearized_jordan_test(const AlgebraPtr& alg, std::string* witness = nullptr);

struct SampleResult {
  bool ok = true;
  bool exhaustive = false;
  std::size_t count = 0;
};

/// (x^2 y)x = x^2 (yx) on random pairs; exhaustive over all pairs when the
/// field is F_3 or F_5 and dim <= 3. Needed on top of the linearized test in
/// characteristic 3, where linearization does not imply the identity.
SampleResult jordan_identity_sample(const AlgebraPtr& alg, std::size_t trials,
                                    std::uint64_t seed);

/// Whether the orbit of the generating axes under their Miyamoto involutions
/// spans the algebra. Throws OrbitCapExceeded when the orbit outgrows `cap`
/// (default 10 * dim) before either answer is known.
bool spans_by_axes(const AlgebraPtr& alg, const std::vector<AxisRecord>& axes,
                   std::size_t cap = 0);

/// End-to-end verdict: lines solid over generator pairs, spanning, both
/// almost-Jordan forms, the linearized identity, and the sampled identity;
/// asserts the implication invariants between them. Jordan requires the
/// linearized identity plus, in characteristic 3, an exhaustive sample
/// (else Inconclusive); any failed identity gives NotJordan.
IdentityReport full_pipeline(const AlgebraPtr& alg,
                             const std::vector<AxisRecord>& axes,
                             std::size_t trials = 100, std::uint64_t seed = 1);

/// Seeded scalar / coordinate helpers shared by the samplers.
Scalar random_scalar(const FieldPtr& f, std::mt19937_64& rng);
Coords random_coords(const FieldPtr& f, std::size_t n, std::mt19937_64& rng);

}  // namespace axial
