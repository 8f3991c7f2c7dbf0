#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace axial {

struct DegreeMismatch : std::runtime_error {
  DegreeMismatch() : std::runtime_error("permutations act on different degrees") {}
};

/// Permutation of {0,...,degree-1}, stored as the image array.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  /// (p * q)(x) = p(q(x))
  friend Perm operator*(const Perm& p, const Perm& q);
  Perm inverse() const;
  /// b^{-1} * this * b
  Perm conjugated_by(const Perm& b) const;
  std::size_t order() const;
  bool is_identity() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string cycle_str() const;

 private:
  std::vector<std::uint32_t> img_;
};

struct NotInvolution : std::runtime_error {
  explicit NotInvolution(const Perm& p);
  Perm seed;
};
struct OrderViolation : std::runtime_error {
  OrderViolation(const Perm& d, const Perm& e, std::size_t order);
  Perm d, e;
  std::size_t order;
};

/// A 3-transposition class: generators plus the closed, canonically sorted
/// conjugacy class D. The sort order fixes the Matsuo basis.
struct TranspositionClass {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::vector<Perm> class_D;
  /// |<D>| when the enumeration fits under the cap, otherwise nullopt.
  std::optional<std::size_t> group_order;

  std::size_t index_of(const Perm& d) const;  // position in class_D
};

/// Closes seeds under conjugation by the generators and by class members,
/// verifies involutions and the pairwise order <= 3 condition.
TranspositionClass close_class(const std::vector<Perm>& gens,
                               const std::vector<Perm>& seeds,
                               const std::string& name = "",
                               std::size_t group_order_cap = 2'000'000);

}  // namespace axial
