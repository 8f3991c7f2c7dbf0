#include "axial/matsuo.hpp"

namespace axial {

AlgebraPtr build_matsuo(const TranspositionClass& cls, const MatsuoConfig& cfg) {
  const auto& f = cfg.field;
  if (f->characteristic() == 2) throw FieldCharTwo();
  if (cfg.eta.is_zero() || cfg.eta.is_one())
    throw std::invalid_argument("eta must avoid {0, 1}");
  std::size_t n = cls.class_D.size();
  Scalar w = cfg.eta * f->half();  // eta/2
  std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coords v = zero_coords(f, n);
      if (i == j) {
        v[i] = f->one();
      } else {
        const Perm& di = cls.class_D[i];
        const Perm& dj = cls.class_D[j];
        if ((di * dj).order() == 3) {
          std::size_t k = cls.index_of(di.conjugated_by(dj));
          v[i] += w;
          v[j] += w;
          v[k] -= w;
        }
      }
      table[i][j] = std::move(v);
    }
  std::vector<std::string> labels;
  std::vector<Coords> axes;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(cls.class_D[i].cycle_str());
    axes.push_back(unit_coords(f, n, i));
  }
  return AlgebraTable::create(f, std::move(table), std::move(labels), std::move(axes));
}

AlgebraPtr direct_sum(const std::vector<AlgebraPtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const auto& f = parts[0]->field();
  std::size_t n = 0;
  for (const auto& p : parts) {
    if (!same_field(p->field(), f)) throw FieldMismatch();
    n += p->dim();
  }
  std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n, zero_coords(f, n)));
  std::vector<std::string> labels;
  std::vector<Coords> axes;
  std::size_t off = 0;
  for (const auto& p : parts) {
    std::size_t d = p->dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Coords& e = p->table_entry(i, j);
        for (std::size_t k = 0; k < d; ++k) table[off + i][off + j][off + k] = e[k];
      }
    for (std::size_t i = 0; i < d; ++i)
      labels.push_back(p->labels().empty() ? "" : p->labels()[i]);
    for (const auto& a : p->axes()) {
      Coords big = zero_coords(f, n);
      for (std::size_t k = 0; k < d; ++k) big[off + k] = a[k];
      axes.push_back(std::move(big));
    }
    off += d;
  }
  return AlgebraTable::create(f, std::move(table), std::move(labels), std::move(axes));
}

AlgebraPtr make_flat_line_algebra(const FieldPtr& f) {
  if (f->characteristic() == 2) throw FieldCharTwo();
  std::size_t n = 3;  // basis a, b, v = ab
  auto z = [&] { return zero_coords(f, n); };
  std::vector<std::vector<Coords>> t(n, std::vector<Coords>(n, z()));
  Scalar h = f->half();
  t[0][0][0] = f->one();
  t[1][1][1] = f->one();
  t[0][1][2] = f->one();
  t[1][0][2] = f->one();
  t[0][2][2] = h;
  t[2][0][2] = h;
  t[1][2][2] = h;
  t[2][1][2] = h;
  // v^2 = 0
  return AlgebraTable::create(f, std::move(t), {"a", "b", "v"},
                              {unit_coords(f, n, 0), unit_coords(f, n, 1)});
}

AlgebraPtr make_baric_line_algebra(const FieldPtr& f) {
  if (f->characteristic() == 2) throw FieldCharTwo();
  std::size_t n = 3;  // basis a, v = 2(ab - a), v^2
  auto z = [&] { return zero_coords(f, n); };
  std::vector<std::vector<Coords>> t(n, std::vector<Coords>(n, z()));
  Scalar h = f->half();
  t[0][0][0] = f->one();
  t[0][1][1] = h;
  t[1][0][1] = h;
  t[1][1][2] = f->one();
  // a v^2 = v v^2 = v^2 v^2 = 0
  Coords b = zero_coords(f, n);
  b[0] = f->one();
  b[1] = f->one();
  b[2] = f->one();
  return AlgebraTable::create(f, std::move(t), {"a", "v", "v2"},
                              {unit_coords(f, n, 0), std::move(b)});
}

}  // namespace axial
