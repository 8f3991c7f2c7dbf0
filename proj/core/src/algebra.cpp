#include "axial/algebra.hpp"

#include <algorithm>
#include <array>

namespace axial {

namespace {
void check_same_alg(const Element& a, const Element& b) {
  if (a.alg != b.alg) throw AlgebraMismatch();
}
}  // namespace

Element operator+(const Element& a, const Element& b) {
  check_same_alg(a, b);
  return {a.alg, add(a.coords, b.coords)};
}

Element operator-(const Element& a, const Element& b) {
  check_same_alg(a, b);
  return {a.alg, sub(a.coords, b.coords)};
}

Element operator*(const Element& a, const Element& b) {
  check_same_alg(a, b);
  return {a.alg, a.alg->product(a.coords, b.coords)};
}

Element Element::operator*(const Scalar& s) const { return {alg, scale(s, coords)}; }

Element Element::operator-() const { return {alg, scale(-alg->field()->one(), coords)}; }

bool Element::operator==(const Element& o) const {
  check_same_alg(*this, o);
  return coords == o.coords;
}

AlgebraPtr AlgebraTable::create(FieldPtr field, std::vector<std::vector<Coords>> table,
                                std::vector<std::string> labels,
                                std::vector<Coords> axes) {
  auto alg = std::shared_ptr<AlgebraTable>(new AlgebraTable());
  std::size_t n = table.size();
  if (n == 0) throw std::invalid_argument("algebra dimension must be >= 1");
  alg->field_ = std::move(field);
  alg->dim_ = n;
  alg->table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw std::invalid_argument("structure table is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != n)
        throw std::invalid_argument("structure constants have wrong length");
      alg->table_.push_back(std::move(table[i][j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (alg->table_[i * n + j] != alg->table_[j * n + i])
        throw std::invalid_argument("structure table is not commutative");
  alg->labels_ = std::move(labels);
  alg->axes_ = std::move(axes);
  return alg;
}

Element AlgebraTable::element(Coords c) const {
  if (c.size() != dim_) throw std::invalid_argument("coordinate length mismatch");
  return {shared_from_this(), std::move(c)};
}

Element AlgebraTable::basis_element(std::size_t i) const {
  return element(unit_coords(field_, dim_, i));
}

Element AlgebraTable::zero() const { return element(zero_coords(field_, dim_)); }

Coords AlgebraTable::product(const Coords& x, const Coords& y) const {
  Coords r = zero_coords(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      add_scaled(r, x[i] * y[j], table_entry(i, j));
    }
  }
  return r;
}

AlgebraPtr AlgebraTable::base_change(const FieldPtr& ext) const {
  if (ext->kind() != Field::Kind::Quadratic || !same_field(ext->base(), field_))
    throw FieldMismatch();
  auto lift = [&](const Coords& v) {
    Coords w;
    w.reserve(v.size());
    for (const auto& s : v) w.push_back(ext->embed(s));
    return w;
  };
  std::vector<std::vector<Coords>> table(dim_, std::vector<Coords>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) table[i][j] = lift(table_entry(i, j));
  std::vector<Coords> axes;
  for (const auto& a : axes_) axes.push_back(lift(a));
  return create(ext, std::move(table), labels_, std::move(axes));
}

Matrix ad_matrix(const Element& a) {
  const auto& alg = *a.alg;
  std::vector<Coords> cols;
  cols.reserve(alg.dim());
  for (std::size_t j = 0; j < alg.dim(); ++j)
    cols.push_back(alg.product(a.coords, unit_coords(alg.field(), alg.dim(), j)));
  return Matrix::from_columns(alg.field(), cols);
}

std::vector<Element> eigenspace(const Element& a, const Scalar& lambda) {
  Matrix m = ad_matrix(a) - Matrix::identity(a.alg->field(), a.alg->dim()) * lambda;
  std::vector<Element> basis;
  for (auto& v : m.kernel()) basis.push_back(a.alg->element(std::move(v)));
  return basis;
}

std::array<Coords, 3> EigenDecomposition::split(const Coords& x) const {
  Coords c = Pinv.apply(x);
  const auto& f = axis.alg->field();
  std::size_t n = x.size();
  std::array<Coords, 3> parts{zero_coords(f, n), zero_coords(f, n), zero_coords(f, n)};
  std::size_t k = 0;
  for (std::size_t part = 0; part < 3; ++part) {
    const auto& bs = part == 0 ? basis_1 : part == 1 ? basis_0 : basis_half;
    for (const auto& b : bs) add_scaled(parts[part], c[k++], b.coords);
  }
  return parts;
}

Scalar EigenDecomposition::axis_coefficient(const Coords& x) const {
  // basis_1 = {axis} for a primitive axis, so the first coordinate is (a, x)
  return Pinv.apply(x)[0];
}

CertifyResult certify_axis(const Element& a) {
  CertifyResult res;
  const auto& alg = *a.alg;
  const auto& f = alg.field();
  if (!(a * a == a)) {
    res.failure = AxisFailure::NotIdempotent;
    res.detail = "a*a != a";
    return res;
  }
  EigenDecomposition d;
  d.axis = a;
  d.basis_1 = eigenspace(a, f->one());
  d.basis_0 = eigenspace(a, f->zero());
  d.basis_half = eigenspace(a, f->half());
  std::size_t total = d.basis_1.size() + d.basis_0.size() + d.basis_half.size();
  if (total != alg.dim()) {
    res.failure = AxisFailure::NotSemisimple;
    res.detail = "eigenspace dimensions for {1,0,1/2} sum to " + std::to_string(total) +
                 " of " + std::to_string(alg.dim());
    return res;
  }
  if (d.basis_1.size() != 1) {
    res.failure = AxisFailure::NotPrimitive;
    res.detail = "dim A_1(a) = " + std::to_string(d.basis_1.size());
    return res;
  }
  d.basis_1[0] = a;  // normalize the 1-eigenvector to the axis itself
  std::vector<Coords> cols;
  for (const auto& bs : {d.basis_1, d.basis_0, d.basis_half})
    for (const auto& b : bs) cols.push_back(b.coords);
  d.P = Matrix::from_columns(f, cols);
  auto inv = d.P.inverse();
  if (!inv) {
    res.failure = AxisFailure::NotSemisimple;
    res.detail = "eigenbasis is not independent";
    return res;
  }
  d.Pinv = std::move(*inv);

  // J(1/2) fusion law: indices 0=eigenvalue 1, 1=eigenvalue 0, 2=eigenvalue 1/2
  static constexpr bool allowed[3][3][3] = {
      // products of A_1 with A_1, A_0, A_half
      {{true, false, false}, {false, false, false}, {false, false, true}},
      // A_0 with ...
      {{false, false, false}, {false, true, false}, {false, false, true}},
      // A_half with ...
      {{false, false, true}, {false, false, true}, {true, true, false}}};
  const std::vector<Element>* spaces[3] = {&d.basis_1, &d.basis_0, &d.basis_half};
  const char* names[3] = {"1", "0", "1/2"};
  for (int li = 0; li < 3; ++li)
    for (int mi = li; mi < 3; ++mi)
      for (const auto& v : *spaces[li])
        for (const auto& w : *spaces[mi]) {
          Coords comp = d.Pinv.apply(alg.product(v.coords, w.coords));
          std::size_t k = 0;
          for (int part = 0; part < 3; ++part) {
            for (std::size_t t = 0; t < spaces[part]->size(); ++t, ++k) {
              if (!allowed[li][mi][part] && !comp[k].is_zero()) {
                res.failure = AxisFailure::FusionViolation;
                res.detail = std::string("A_") + names[li] + " * A_" + names[mi] +
                             " leaks into A_" + names[part];
                return res;
              }
            }
          }
        }
  AxisRecord rec{a, std::move(d), true};
  res.record = std::move(rec);
  return res;
}

Matrix miyamoto_matrix(const AxisRecord& a) {
  const auto& d = a.decomposition;
  const auto& f = a.element.alg->field();
  std::size_t n = a.element.alg->dim();
  Matrix diag(f, n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < d.basis_1.size() + d.basis_0.size(); ++i, ++k)
    diag.at(k, k) = f->one();
  for (std::size_t i = 0; i < d.basis_half.size(); ++i, ++k)
    diag.at(k, k) = -f->one();
  return d.P * diag * d.Pinv;
}

std::vector<Element> subalgebra_closure(const std::vector<Element>& gens) {
  if (gens.empty()) throw std::invalid_argument("closure of an empty generating set");
  const auto& alg = gens[0].alg;
  RowSpan span(alg->field(), alg->dim());
  for (const auto& g : gens) {
    if (g.alg != alg) throw AlgebraMismatch();
    span.insert(g.coords);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    auto rows = span.rows();  // copy: span mutates during insertion
    for (std::size_t i = 0; i < rows.size() && !grew; ++i)
      for (std::size_t j = i; j < rows.size(); ++j)
        if (span.insert(alg->product(rows[i], rows[j]))) {
          grew = true;
          break;
        }
  }
  std::vector<Element> basis;
  for (const auto& r : span.rows()) basis.push_back(alg->element(r));
  return basis;
}

FrobeniusForm frobenius_form(const AlgebraPtr& alg, const std::vector<AxisRecord>& axes) {
  const auto& f = alg->field();
  std::size_t n = alg->dim();
  if (axes.empty()) throw std::invalid_argument("frobenius_form needs at least one axis");

  std::vector<Matrix> taus;
  taus.reserve(axes.size());
  for (const auto& a : axes) taus.push_back(miyamoto_matrix(a));

  // Miyamoto orbit closure of the axes, capped at 10*dim elements
  std::vector<Coords> orbit;
  for (const auto& a : axes) orbit.push_back(a.element.coords);
  RowSpan span(f, n);
  for (const auto& v : orbit) span.insert(v);
  std::size_t cap = 10 * n;
  for (std::size_t head = 0; head < orbit.size() && orbit.size() <= cap &&
                             span.rank() < n; ++head) {
    for (const auto& tau : taus) {
      Coords img = tau.apply(orbit[head]);
      if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) {
        orbit.push_back(img);
        span.insert(img);
      }
    }
  }
  if (span.rank() < n) throw SpanFailure();

  // pick a linearly independent spanning subset of orbit axes
  RowSpan pick(f, n);
  std::vector<Coords> S;
  for (const auto& v : orbit)
    if (pick.insert(v)) S.push_back(v);

  // each spanning axis contributes a row of pairings via eigenprojection
  std::vector<Coords> rows;
  for (const auto& s : S) {
    Element se = alg->element(s);
    auto cert = certify_axis(se);
    if (!cert.ok())
      throw InconsistentForm("orbit element is not a primitive axis: " + cert.detail);
    Coords r;
    r.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
      r.push_back(cert.record->decomposition.axis_coefficient(
          unit_coords(f, n, j)));
    rows.push_back(std::move(r));
  }

  Matrix M = Matrix::from_rows(f, S);
  Matrix R = Matrix::from_rows(f, rows);
  Matrix G = *M.inverse() * R;

  // verification: symmetry, associativity on basis triples, (a,a) = 1
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (G.at(i, j) != G.at(j, i)) throw InconsistentForm("gram is not symmetric");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Coords gij = G.apply(alg->table_entry(i, j));  // (e_i e_j, .)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar rhs = f->zero();
        const Coords& tjk = alg->table_entry(j, k);
        for (std::size_t m = 0; m < n; ++m)
          if (!tjk[m].is_zero()) rhs += G.at(i, m) * tjk[m];
        if (gij[k] != rhs)
          throw InconsistentForm("associativity fails on basis triple (" +
                                 std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
      }
    }
  FrobeniusForm form{alg, std::move(G)};
  for (const auto& a : axes)
    if (!form.pair(a.element, a.element).is_one())
      throw InconsistentForm("(a,a) != 1 on a generating axis");
  return form;
}

Scalar FrobeniusForm::pair(const Coords& x, const Coords& y) const {
  Coords gy = gram.apply(y);
  Scalar r = alg->field()->zero();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) r += x[i] * gy[i];
  return r;
}

FrobeniusForm FrobeniusForm::base_change(const AlgebraPtr& ext_alg) const {
  const auto& ext = ext_alg->field();
  Matrix g(ext, gram.rows(), gram.cols());
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) g.at(i, j) = ext->embed(gram.at(i, j));
  return {ext_alg, std::move(g)};
}

std::optional<std::string> check_basiccomp(const AxisRecord& a, const FrobeniusForm& form) {
  const auto& alg = a.element.alg;
  const auto& f = alg->field();
  Matrix tau = miyamoto_matrix(a);
  Scalar quarter = f->from_ratio(1, 4);
  Scalar four = f->from_int(4);
  for (std::size_t j = 0; j < alg->dim(); ++j) {
    Element x = alg->basis_element(j);
    Element ax = a.element * x;
    Element xtau = alg->element(tau.apply(x.coords));
    Scalar ax_pair = form.pair(a.element, x);
    // (i) ax = 1/4 (x - x^tau) + (a,x) a
    if (!(ax == (x - xtau) * quarter + a.element * ax_pair))
      return "identity (i) fails on basis vector " + std::to_string(j);
    // (ii) x^tau = x + 4 (a,x) a - 4 ax
    if (!(xtau == x + a.element * (four * ax_pair) - ax * four))
      return "identity (ii) fails on basis vector " + std::to_string(j);
    // (iii) a(ax) = 1/2 (ax + (a,x) a)
    if (!(a.element * ax == (ax + a.element * ax_pair) * f->half()))
      return "identity (iii) fails on basis vector " + std::to_string(j);
  }
  return std::nullopt;
}

}  // namespace axial
