#include "axial/json_io.hpp"

#include <openssl/evp.h>

namespace axial {

json field_to_json(const FieldPtr& f) {
  switch (f->kind()) {
    case Field::Kind::Rationals: return {{"kind", "Q"}};
    case Field::Kind::Prime: return {{"kind", "Fp"}, {"p", f->prime_p()}};
    case Field::Kind::Quadratic:
      return {{"kind", "Quad"},
              {"base", field_to_json(f->base())},
              {"minpoly", {scalar_to_json(f->minpoly_c0()), scalar_to_json(f->minpoly_c1())}}};
  }
  throw BadInput("unknown field kind");
}

FieldPtr field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw BadInput("field spec must have a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    if (!j.contains("p")) throw BadInput("Fp field spec needs p");
    return Field::prime(j.at("p").get<std::uint64_t>());
  }
  if (kind == "Quad") {
    FieldPtr base = field_from_json(j.at("base"));
    const json& mp = j.at("minpoly");
    if (!mp.is_array() || mp.size() != 2) throw BadInput("minpoly must be [c0, c1]");
    return Field::quadratic(base, scalar_from_json(base, mp[0]),
                            scalar_from_json(base, mp[1]));
  }
  throw BadInput("unknown field kind: " + kind);
}

json scalar_to_json(const Scalar& s) {
  switch (s.field()->kind()) {
    case Field::Kind::Rationals: return s.rational().get_str();
    case Field::Kind::Prime: return s.residue();
    case Field::Kind::Quadratic:
      return json::array({scalar_to_json(s.ext0()), scalar_to_json(s.ext1())});
  }
  throw BadInput("unknown scalar kind");
}

Scalar scalar_from_json(const FieldPtr& f, const json& j) {
  switch (f->kind()) {
    case Field::Kind::Rationals: {
      if (!j.is_string()) throw BadInput("rational scalars are exact strings");
      mpq_class q;
      if (q.set_str(j.get<std::string>(), 10) != 0)
        throw BadInput("bad rational literal: " + j.dump());
      q.canonicalize();
      return f->from_rational(q);
    }
    case Field::Kind::Prime: {
      if (!j.is_number_integer()) throw BadInput("F_p scalars are integers");
      return f->from_int(j.get<long>());
    }
    case Field::Kind::Quadratic: {
      if (!j.is_array() || j.size() != 2) throw BadInput("extension scalars are [c0, c1]");
      return f->make_ext(scalar_from_json(f->base(), j[0]),
                         scalar_from_json(f->base(), j[1]));
    }
  }
  throw BadInput("unknown field kind");
}

json algebra_to_json(const AlgebraPtr& alg) {
  std::size_t n = alg->dim();
  json table = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      json v = json::array();
      for (const auto& s : alg->table_entry(i, j)) v.push_back(scalar_to_json(s));
      row.push_back(std::move(v));
    }
    table.push_back(std::move(row));
  }
  json axes = json::array();
  for (const auto& a : alg->axes()) {
    json v = json::array();
    for (const auto& s : a) v.push_back(scalar_to_json(s));
    axes.push_back(std::move(v));
  }
  return {{"field", field_to_json(alg->field())},
          {"dim", n},
          {"table", std::move(table)},
          {"axes", std::move(axes)},
          {"labels", alg->labels()}};
}

AlgebraPtr algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("dim") ||
      !j.contains("table"))
    throw BadInput("algebra JSON needs field, dim and table");
  FieldPtr f = field_from_json(j.at("field"));
  std::size_t n = j.at("dim").get<std::size_t>();
  const json& table = j.at("table");
  if (!table.is_array() || table.size() != n) throw BadInput("table must have dim rows");
  auto coords_of = [&](const json& v) {
    if (!v.is_array() || v.size() != n) throw BadInput("coordinate vector of wrong length");
    Coords c;
    c.reserve(n);
    for (const auto& s : v) c.push_back(scalar_from_json(f, s));
    return c;
  };
  std::vector<std::vector<Coords>> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!table[i].is_array() || table[i].size() != n)
      throw BadInput("table must be dim x dim");
    for (std::size_t k = 0; k < n; ++k) t[i].push_back(coords_of(table[i][k]));
  }
  std::vector<Coords> axes;
  for (const auto& a : j.value("axes", json::array())) axes.push_back(coords_of(a));
  std::vector<std::string> labels =
      j.value("labels", std::vector<std::string>{});
  try {
    return AlgebraTable::create(f, std::move(t), std::move(labels), std::move(axes));
  } catch (const std::exception& e) {
    throw BadInput(std::string("invalid algebra table: ") + e.what());
  }
}

json group_to_json(const GroupSpec& g) {
  return {{"name", g.name},
          {"degree", g.degree},
          {"generators", g.generators},
          {"seeds", g.seeds},
          {"expected_class_size", g.expected_class_size},
          {"sha256", g.sha256}};
}

GroupSpec group_from_json(const json& j) {
  GroupSpec g;
  try {
    g.name = j.at("name").get<std::string>();
    g.degree = j.at("degree").get<std::size_t>();
    g.generators = j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
    g.seeds = j.at("seeds").get<std::vector<std::vector<std::uint32_t>>>();
    g.expected_class_size = j.at("expected_class_size").get<std::size_t>();
    g.sha256 = j.at("sha256").get<std::string>();
  } catch (const json::exception& e) {
    throw BadInput(std::string("malformed group file: ") + e.what());
  }
  return g;
}

std::string group_digest(const GroupSpec& g) {
  json canon = {{"degree", g.degree},
                {"generators", g.generators},
                {"name", g.name},
                {"seeds", g.seeds}};
  std::string payload = canon.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(payload.data(), payload.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("digest computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

TranspositionClass build_class(const GroupSpec& g) {
  if (!g.sha256.empty() && group_digest(g) != g.sha256)
    throw BadInput("group file digest mismatch: " + g.name);
  std::vector<Perm> gens, seeds;
  for (const auto& im : g.generators) gens.emplace_back(im);
  for (const auto& im : g.seeds) seeds.emplace_back(im);
  TranspositionClass cls = close_class(gens, seeds, g.name);
  if (g.expected_class_size && cls.class_D.size() != g.expected_class_size)
    throw BadInput("class size of " + g.name + " is " +
                   std::to_string(cls.class_D.size()) + ", expected " +
                   std::to_string(g.expected_class_size));
  return cls;
}

}  // namespace axial
