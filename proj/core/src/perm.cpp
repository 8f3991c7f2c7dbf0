#include "axial/perm.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace axial {

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("image array is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Perm(std::move(img));
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch();
  std::vector<std::uint32_t> img(p.degree());
  for (std::size_t x = 0; x < p.degree(); ++x) img[x] = p.img_[q.img_[x]];
  Perm r;
  r.img_ = std::move(img);
  return r;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> img(degree());
  for (std::size_t x = 0; x < degree(); ++x) img[img_[x]] = static_cast<std::uint32_t>(x);
  Perm r;
  r.img_ = std::move(img);
  return r;
}

Perm Perm::conjugated_by(const Perm& b) const { return b.inverse() * *this * b; }

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::size_t Perm::order() const {
  Perm acc = *this;
  std::size_t n = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++n;
  }
  return n;
}

std::string Perm::cycle_str() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = img_[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

NotInvolution::NotInvolution(const Perm& p)
    : std::runtime_error("class seed is not an involution: " + p.cycle_str()), seed(p) {}

OrderViolation::OrderViolation(const Perm& d_, const Perm& e_, std::size_t o)
    : std::runtime_error("3-transposition violation: o(" + d_.cycle_str() + "*" +
                         e_.cycle_str() + ") = " + std::to_string(o)),
      d(d_), e(e_), order(o) {}

std::size_t TranspositionClass::index_of(const Perm& d) const {
  auto it = std::lower_bound(class_D.begin(), class_D.end(), d);
  if (it == class_D.end() || !(*it == d))
    throw std::runtime_error("permutation not in class D");
  return static_cast<std::size_t>(it - class_D.begin());
}

TranspositionClass close_class(const std::vector<Perm>& gens,
                               const std::vector<Perm>& seeds,
                               const std::string& name,
                               std::size_t group_order_cap) {
  if (seeds.empty()) throw std::invalid_argument("close_class needs a seed");
  std::size_t degree = seeds[0].degree();
  for (const auto& s : seeds)
    if (s.order() != 2) throw NotInvolution(s);

  std::set<Perm> D(seeds.begin(), seeds.end());
  std::vector<Perm> frontier(seeds.begin(), seeds.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& d : frontier) {
      auto consider = [&](const Perm& g) {
        Perm c = d.conjugated_by(g);
        if (D.insert(c).second) next.push_back(c);
      };
      for (const auto& g : gens) consider(g);
      std::vector<Perm> snapshot(D.begin(), D.end());
      for (const auto& g : snapshot) consider(g);
    }
    frontier = std::move(next);
  }

  TranspositionClass tc;
  tc.name = name;
  tc.degree = degree;
  tc.generators = gens;
  tc.class_D.assign(D.begin(), D.end());  // std::set order == lexicographic

  for (const auto& d : tc.class_D)
    if (d.order() != 2) throw NotInvolution(d);
  for (std::size_t i = 0; i < tc.class_D.size(); ++i)
    for (std::size_t j = i + 1; j < tc.class_D.size(); ++j) {
      std::size_t o = (tc.class_D[i] * tc.class_D[j]).order();
      if (o > 3) throw OrderViolation(tc.class_D[i], tc.class_D[j], o);
    }

  // enumerate <D> while it fits
  std::set<Perm> grp{Perm::identity(degree)};
  std::vector<Perm> gf{Perm::identity(degree)};
  bool capped = false;
  while (!gf.empty() && !capped) {
    std::vector<Perm> next;
    for (const auto& x : gf) {
      for (const auto& d : tc.class_D) {
        Perm y = d * x;
        if (grp.insert(y).second) {
          next.push_back(y);
          if (grp.size() > group_order_cap) { capped = true; break; }
        }
      }
      if (capped) break;
    }
    gf = std::move(next);
  }
  if (!capped) tc.group_order = grp.size();
  return tc;
}

}  // namespace axial
