#pragma once

#include <cstdlib>
#include <map>

#include "axial/catalog.hpp"
#include "axial/jordan.hpp"
#include "axial/matsuo.hpp"

namespace axial::testing {

inline std::vector<AxisRecord> certify_all(const AlgebraPtr& alg) {
  std::vector<AxisRecord> out;
  for (const auto& a : alg->axes()) {
    auto res = certify_axis(alg->element(a));
    if (!res.ok()) throw std::runtime_error("axis certification failed: " + res.detail);
    out.push_back(*res.record);
  }
  return out;
}

struct Fixture {
  AlgebraPtr alg;
  std::vector<AxisRecord> axes;
  FrobeniusForm form;
};

/// Matsuo fixture over eta = 1/2, cached per (group, field description).
inline const Fixture& matsuo_fixture(const std::string& group, const FieldPtr& f) {
  static std::map<std::string, Fixture> cache;
  std::string key = group + "/" + f->describe();
  auto it = cache.find(key);
  if (it == cache.end()) {
    Fixture fx;
    fx.alg = build_matsuo(catalog_class(group), MatsuoConfig::standard(f));
    fx.axes = certify_all(fx.alg);
    fx.form = frobenius_form(fx.alg, fx.axes);
    it = cache.emplace(key, std::move(fx)).first;
  }
  return it->second;
}

}  // namespace axial::testing
