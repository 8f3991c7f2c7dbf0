#include "axial/line.hpp"

namespace axial {

const char* to_string(LineKind k) {
  switch (k) {
    case LineKind::Toric: return "Toric";
    case LineKind::Flat3: return "Flat3";
    case LineKind::Flat2: return "Flat2";
    case LineKind::Baric3: return "Baric3";
    case LineKind::Baric2: return "Baric2";
    case LineKind::Baric1: return "Baric1";
  }
  return "?";
}

std::vector<Coords> LineRecord::canonical_basis() const {
  switch (kind) {
    case LineKind::Toric: return {*e, *u, *f};
    case LineKind::Flat3: return {a.element.coords, b.element.coords, *v};
    case LineKind::Flat2: return {a.element.coords, b.element.coords};
    case LineKind::Baric3: return {a.element.coords, *v, *v2};
    case LineKind::Baric2: return {a.element.coords, *v};
    case LineKind::Baric1: return {a.element.coords};
  }
  return {};
}

static Coords embed_coords(const FieldPtr& ext, const Coords& x) {
  Coords out;
  out.reserve(x.size());
  for (const auto& s : x) out.push_back(ext->embed(s));
  return out;
}

/// Express x in the given (independent) spanning vectors; throws if outside.
static Coords in_basis(const FieldPtr& f, const std::vector<Coords>& basis,
                       const Coords& x) {
  auto sol = Matrix::from_columns(f, basis).solve(x);
  if (!sol) throw std::runtime_error("vector left the line span");
  return *sol;
}

static void build_toric(LineRecord& rec) {
  AlgebraPtr alg = rec.ambient;
  FieldPtr F = alg->field();
  std::size_t n = alg->dim();
  const auto& span = rec.span;
  Scalar half = F->half();

  // unit of the line: u with u x_i = x_i for every basis vector of the line
  Matrix sys(F, 3 * n, 3);
  Coords rhs = zero_coords(F, 3 * n);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      Coords prod = alg->product(span[k], span[i]);
      for (std::size_t r = 0; r < n; ++r) sys.at(i * n + r, k) = prod[r];
    }
    for (std::size_t r = 0; r < n; ++r) rhs[i * n + r] = span[i][r];
  }
  auto uc = sys.solve(rhs);
  if (!uc) throw std::runtime_error("toric line has no unit");
  Coords u = zero_coords(F, n);
  for (std::size_t k = 0; k < 3; ++k) add_scaled(u, (*uc)[k], span[k]);

  // the 1/2-eigenvector of ad(a) inside the line
  Matrix restr(F, 3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    Coords w = alg->product(rec.a.element.coords, span[j]);
    add_scaled(w, -half, span[j]);
    Coords wc = in_basis(F, span, w);
    for (std::size_t i = 0; i < 3; ++i) restr.at(i, j) = wc[i];
  }
  auto ker = restr.kernel();
  if (ker.size() != 1)
    throw std::runtime_error("toric line: half-eigenspace of the axis is not a line");
  Coords z = zero_coords(F, n);
  for (std::size_t k = 0; k < 3; ++k) add_scaled(z, ker[0][k], span[k]);

  // z^2 = gamma u; pick s with s^2 = -1/(4 gamma) so that e = (w + s z)/2
  // squares to zero, where w = a - u/2 (w^2 = u/4, w z = 0)
  Coords z2 = alg->product(z, z);
  Scalar gamma;
  for (std::size_t r = 0; r < n; ++r)
    if (!u[r].is_zero()) { gamma = z2[r] / u[r]; break; }
  if (!gamma.valid() || gamma.is_zero() || !(z2 == scale(gamma, u)))
    throw std::runtime_error("toric line: z^2 is not a nonzero multiple of the unit");
  Scalar theta = -(F->from_ratio(1, 4) * gamma.inv());

  Scalar s;
  if (auto root = F->sqrt(theta)) {
    s = *root;
  } else {
    if (F->kind() == Field::Kind::Quadratic) throw ExtensionInsufficient();
    FieldPtr ext = Field::quadratic(F, -theta, F->zero());  // t^2 = theta
    AlgebraPtr ealg = alg->base_change(ext);
    rec.form = rec.form.base_change(ealg);
    rec.extended = true;
    auto recert = [&](const AxisRecord& old) {
      auto res = certify_axis(ealg->element(embed_coords(ext, old.element.coords)));
      if (!res.ok()) throw std::runtime_error("axis lost under base change");
      return *res.record;
    };
    rec.a = recert(rec.a);
    rec.b = recert(rec.b);
    rec.gram_ab = ext->embed(rec.gram_ab);
    for (auto& row : rec.span) row = embed_coords(ext, row);
    u = embed_coords(ext, u);
    z = embed_coords(ext, z);
    s = ext->generator();
    F = ext;
    alg = ealg;
    rec.ambient = ealg;
    half = F->half();
  }

  Coords w = rec.a.element.coords;
  add_scaled(w, -half, u);
  Coords e = scale(half, w);
  add_scaled(e, half * s, z);
  Coords f = sub(w, e);

  if (!coords_zero(alg->product(e, e)) || !coords_zero(alg->product(f, f)) ||
      !(alg->product(e, f) == scale(F->from_ratio(1, 8), u)))
    throw std::runtime_error("toric basis identities failed");

  Coords bc = in_basis(F, {e, u, f}, rec.b.element.coords);
  if (!(bc[1] == half) || !(bc[0] * bc[2]).is_one())
    throw std::runtime_error("second axis is not in normalized family form");
  rec.u = std::move(u);
  rec.e = std::move(e);
  rec.f = std::move(f);
  rec.mu = bc[0];
}

LineRecord classify_line(const AxisRecord& a, const AxisRecord& b,
                         const FrobeniusForm& form) {
  if (a.element == b.element) throw SameAxis();
  LineRecord rec;
  rec.a = a;
  rec.b = b;
  rec.ambient = a.element.alg;
  rec.form = form;
  rec.gram_ab = form.pair(a.element, b.element);
  for (const auto& el : subalgebra_closure({a.element, b.element}))
    rec.span.push_back(el.coords);
  rec.dim = rec.span.size();
  rec.base_ambient = rec.ambient;
  rec.base_span = rec.span;
  rec.base_a = a.element.coords;
  rec.base_b = b.element.coords;

  const FieldPtr& F = rec.ambient->field();
  Coords ab = rec.ambient->product(a.element.coords, b.element.coords);
  if (rec.gram_ab.is_zero()) {
    if (rec.dim == 3) {
      rec.kind = LineKind::Flat3;
      rec.v = ab;  // the shared 1/2-eigenvector, v^2 = 0
    } else if (rec.dim == 2) {
      rec.kind = LineKind::Flat2;
    } else {
      throw std::runtime_error("flat line of unexpected dimension");
    }
  } else if (rec.gram_ab.is_one()) {
    Coords v = scale(F->from_int(2), sub(ab, a.element.coords));
    if (rec.dim == 3) {
      rec.kind = LineKind::Baric3;
      rec.v2 = rec.ambient->product(v, v);
      rec.v = std::move(v);
    } else if (rec.dim == 2) {
      rec.kind = LineKind::Baric2;
      rec.v = std::move(v);
    } else if (rec.dim == 1) {
      rec.kind = LineKind::Baric1;
    } else {
      throw std::runtime_error("baric line of unexpected dimension");
    }
  } else {
    if (rec.dim != 3) throw std::runtime_error("toric line of unexpected dimension");
    rec.kind = LineKind::Toric;
    build_toric(rec);
  }
  return rec;
}

IdempotentFamily make_family(const LineRecord& line, bool b_side) {
  const FieldPtr& F = line.ambient->field();
  std::size_t n = line.ambient->dim();
  if (b_side && line.kind != LineKind::Flat3)
    throw std::invalid_argument("only flat 3-dim lines carry a second family");
  IdempotentFamily fam;
  fam.line = line;
  fam.b_side = b_side;
  switch (line.kind) {
    case LineKind::Toric:
      // lambda * a_lambda = f + lambda u/2 + lambda^2 e
      fam.poly = VecPoly(F, n, {*line.f, scale(F->half(), *line.u), *line.e});
      break;
    case LineKind::Flat3:
      fam.poly = VecPoly(
          F, n, {(b_side ? line.b : line.a).element.coords, *line.v});
      break;
    case LineKind::Baric3:
      fam.poly = VecPoly(F, n, {line.a.element.coords, *line.v, *line.v2});
      break;
    case LineKind::Baric2:
      fam.poly = VecPoly(F, n, {line.a.element.coords, *line.v});
      break;
    case LineKind::Flat2:
    case LineKind::Baric1:
      throw LineDimZeroOrOne();
  }
  return fam;
}

Element family_member(const IdempotentFamily& fam, const Scalar& lambda) {
  Coords c = fam.poly.eval(lambda);
  if (fam.toric()) {
    if (lambda.is_zero()) throw ZeroParameter();
    c = scale(lambda.inv(), c);
  }
  Element el = fam.line.ambient->element(std::move(c));
  if (!(el * el == el)) throw std::runtime_error("family member is not idempotent");
  return el;
}

Scalar miyamoto_action_closed_form(const IdempotentFamily& fam, const Scalar& lambda,
                                   const Scalar& mu, bool cross_family) {
  const FieldPtr& F = fam.line.ambient->field();
  if (cross_family) {
    if (fam.line.kind != LineKind::Flat3)
      throw std::invalid_argument("cross-family action is flat-only");
    return -(F->from_int(4)) - F->from_int(2) * mu - lambda;
  }
  if (fam.toric()) {
    if (lambda.is_zero()) throw ZeroParameter();
    return lambda.inv() * mu * mu;
  }
  return F->from_int(2) * mu - lambda;
}

OrbitSize orbit_size(const LineRecord& rec, std::size_t bound) {
  const FieldPtr& F = rec.ambient->field();
  std::uint64_t p = F->characteristic();

  OrbitSize closed;
  switch (rec.kind) {
    case LineKind::Toric: {
      Scalar m = *rec.mu, acc = m;
      std::size_t n = 1;
      while (!acc.is_one() && n <= bound) { acc *= m; ++n; }
      if (acc.is_one()) closed = {false, n, true};
      else closed = {true, 0, false};
      break;
    }
    case LineKind::Flat3:
    case LineKind::Baric3:
    case LineKind::Baric2:
      if (p) closed = {false, static_cast<std::size_t>(p), true};
      else closed = {true, 0, true};
      break;
    case LineKind::Flat2: closed = {false, 2, true}; break;
    case LineKind::Baric1: closed = {false, 1, true}; break;
  }

  // independent route: explicit closure of the axes under tau_a, tau_b
  // (capped low over characteristic 0, where coordinates can grow fast)
  std::size_t cap = closed.infinite ? (p ? bound : 24)
                                    : std::min(closed.size, bound) + 1;
  Matrix taus[2] = {miyamoto_matrix(rec.a), miyamoto_matrix(rec.b)};
  std::vector<Coords> orbit{rec.a.element.coords};
  if (rec.kind == LineKind::Toric || rec.kind == LineKind::Flat2)
    orbit.push_back(rec.b.element.coords);
  auto seen = [&](const Coords& c) {
    for (const auto& o : orbit)
      if (o == c) return true;
    return false;
  };
  bool overflow = false;
  for (std::size_t head = 0; head < orbit.size() && !overflow; ++head) {
    for (const auto& t : taus) {
      Coords img = t.apply(orbit[head]);
      if (!seen(img)) {
        orbit.push_back(std::move(img));
        if (orbit.size() > cap) { overflow = true; break; }
      }
    }
  }

  bool agree = closed.infinite || closed.size > bound
                   ? overflow || orbit.size() == closed.size
                   : !overflow && orbit.size() == closed.size;
  if (!agree)
    throw std::runtime_error("closed-form orbit size disagrees with explicit closure");
  return closed;
}

}  // namespace axial
