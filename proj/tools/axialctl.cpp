#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "axial/catalog.hpp"
#include "axial/jordan.hpp"
#include "axial/matsuo.hpp"

using namespace axial;

namespace {

constexpr const char* kToolVersion = "axialctl 1.0.0";

// exit codes
constexpr int kOk = 0;           // also: Jordan
constexpr int kVerifyFail = 1;   // verification failure / method disagreement
constexpr int kInputError = 2;
constexpr int kNotJordan = 3;
constexpr int kInconclusive = 4;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BadInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string algebra_file;
  std::string field = "Q";
  std::string eta = "1/2";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string json_out;
  std::string pairs = "all";
  std::size_t sample = 0;
};

FieldPtr parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 1 && s[0] == 'F') {
    try {
      return Field::prime(std::stoull(s.substr(1)));
    } catch (const std::exception&) {
      throw BadInput("bad field spec: " + s);
    }
  }
  throw BadInput("bad field spec: " + s + " (use Q or F<p>)");
}

Scalar parse_scalar(const FieldPtr& f, const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw BadInput("bad scalar literal: " + s);
  q.canonicalize();
  return f->from_rational(q);
}

json manifest(const std::string& command, const Options& o,
              const std::string& input_data) {
  return {{"command", command},
          {"input_sha256", sha256_hex(input_data)},
          {"field", o.field},
          {"eta", o.eta},
          {"seed", o.seed},
          {"tool_version", kToolVersion}};
}

void emit(const json& report, const Options& o) {
  std::string text = report.dump(2) + "\n";
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out, std::ios::binary);
    out << text;
  } else {
    std::cout << text;
  }
}

struct LoadedAlgebra {
  std::string raw;
  AlgebraPtr alg;
  std::vector<AxisRecord> axes;
  FrobeniusForm form;
};

LoadedAlgebra load_algebra(const std::string& path, bool need_form = true) {
  LoadedAlgebra L;
  L.raw = read_file(path);
  L.alg = algebra_from_json(json::parse(L.raw));
  for (std::size_t i = 0; i < L.alg->axes().size(); ++i) {
    auto res = certify_axis(L.alg->element(L.alg->axes()[i]));
    if (!res.ok())
      throw BadInput("declared axis " + std::to_string(i) +
                     " fails certification: " + res.detail);
    L.axes.push_back(*res.record);
  }
  if (L.axes.empty()) throw BadInput("algebra declares no axes");
  if (need_form) L.form = frobenius_form(L.alg, L.axes);
  return L;
}

std::vector<std::pair<std::size_t, std::size_t>> select_pairs(const Options& o,
                                                              std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (o.pairs == "all") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  } else {
    std::size_t comma = o.pairs.find(',');
    if (comma == std::string::npos) throw BadInput("--pairs wants 'all' or 'i,j'");
    try {
      std::size_t i = std::stoull(o.pairs.substr(0, comma));
      std::size_t j = std::stoull(o.pairs.substr(comma + 1));
      if (i >= n || j >= n || i == j) throw BadInput("pair out of range");
      if (i > j) std::swap(i, j);
      out.emplace_back(i, j);
    } catch (const BadInput&) {
      throw;
    } catch (const std::exception&) {
      throw BadInput("--pairs wants 'all' or 'i,j'");
    }
  }
  if (o.sample && o.sample < out.size()) {
    std::mt19937_64 rng(o.seed);
    std::shuffle(out.begin(), out.end(), rng);
    out.resize(o.sample);
    std::sort(out.begin(), out.end());
  }
  return out;
}

/// Deterministic parallel map: results land by index, not completion order.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex mu;
  std::size_t next = 0;
  std::exception_ptr err;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (err || next >= count) return;
          i = next++;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

json orbit_json(const OrbitSize& os) {
  json j;
  j["orbit_size"] = os.infinite ? json("Infinite") : json(os.size);
  j["proven"] = os.proven;
  return j;
}

int cmd_matsuo(const std::string& group_arg, const Options& o,
               const std::string& out_file) {
  GroupSpec g;
  std::string raw;
  if (group_arg.size() > 5 && group_arg.substr(group_arg.size() - 5) == ".json") {
    raw = read_file(group_arg);
    g = group_from_json(json::parse(raw));
  } else {
    g = catalog_group(group_arg);
    raw = group_to_json(g).dump();
  }
  TranspositionClass cls = build_class(g);
  FieldPtr f = parse_field(o.field);
  AlgebraPtr alg = build_matsuo(cls, {f, parse_scalar(f, o.eta)});
  json doc = algebra_to_json(alg);
  doc["manifest"] = manifest("matsuo", o, raw);
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw BadInput("cannot write " + out_file);
  out << doc.dump(2) << "\n";
  std::cerr << "wrote " << out_file << " (dim " << alg->dim() << ")\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  std::string raw = read_file(o.algebra_file);
  AlgebraPtr alg = algebra_from_json(json::parse(raw));
  json rows = json::array();
  bool ok = true;
  std::vector<AxisRecord> axes;
  for (std::size_t i = 0; i < alg->axes().size(); ++i) {
    auto res = certify_axis(alg->element(alg->axes()[i]));
    rows.push_back({{"axis", i}, {"ok", res.ok()}, {"detail", res.detail}});
    if (res.ok()) axes.push_back(*res.record);
    else ok = false;
  }
  json report{{"manifest", manifest("verify", o, raw)}, {"axes", rows}};
  if (ok && !axes.empty()) {
    try {
      auto form = frobenius_form(alg, axes);
      report["frobenius_ok"] = true;
      json bc = json::array();
      for (const auto& ax : axes) {
        auto w = check_basiccomp(ax, form);
        bc.push_back(w ? json(*w) : json(true));
        if (w) ok = false;
      }
      report["basic_identities"] = bc;
    } catch (const std::exception& e) {
      report["frobenius_ok"] = false;
      report["frobenius_error"] = e.what();
      ok = false;
    }
  }
  report["ok"] = ok;
  emit(report, o);
  return ok ? kOk : kVerifyFail;
}

int cmd_lines(const Options& o) {
  LoadedAlgebra L = load_algebra(o.algebra_file);
  auto pairs = select_pairs(o, L.axes.size());
  std::vector<json> rows(pairs.size());
  parallel_for(pairs.size(), o.threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    LineRecord l = classify_line(L.axes[i], L.axes[j], L.form);
    json row{{"i", i},
             {"j", j},
             {"kind", to_string(l.kind)},
             {"dim", l.dim},
             {"gram_ab", scalar_to_json(l.gram_ab)},
             {"extended", l.extended},
             {"mu", l.mu ? scalar_to_json(*l.mu) : json(nullptr)}};
    row.update(orbit_json(orbit_size(l)));
    rows[k] = std::move(row);
  });
  json report{{"manifest", manifest("lines", o, L.raw)}, {"rows", rows}};
  emit(report, o);
  return kOk;
}

int cmd_solidity(const Options& o, const std::string& method) {
  LoadedAlgebra L = load_algebra(o.algebra_file);
  auto pairs = select_pairs(o, L.axes.size());
  std::vector<json> rows(pairs.size());
  bool disagreement = false;
  std::mutex mu;
  parallel_for(pairs.size(), o.threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    LineRecord l = classify_line(L.axes[i], L.axes[j], L.form);
    json verdicts;
    std::string witness;
    auto opt_json = [](std::optional<bool> b) {
      return b ? json(*b) : json(nullptr);
    };
    if (method == "all") {
      try {
        SolidityVerdict v = decide_solidity(l);
        verdicts = {{"derivation", v.by_derivation},
                    {"polynomial", opt_json(v.by_polynomial)},
                    {"enumeration", opt_json(v.by_enumeration)},
                    {"solid", v.solid}};
        witness = v.witness;
      } catch (const std::logic_error& e) {
        std::lock_guard<std::mutex> lock(mu);
        disagreement = true;
        verdicts = {{"error", e.what()}};
      }
    } else if (method == "derivation") {
      bool d = derivation_test(l, &witness);
      verdicts = {{"derivation", d}, {"solid", d}};
    } else if (method == "polynomial") {
      verdicts = {{"polynomial", opt_json(polynomial_test(l, &witness))}};
    } else if (method == "enumerate") {
      Coords w;
      auto e = enumeration_test(l, &w);
      verdicts = {{"enumeration", opt_json(e)}};
      if (e && !*e) {
        json wc = json::array();
        for (const auto& s : w) wc.push_back(scalar_to_json(s));
        verdicts["witness_idempotent"] = wc;
      }
    } else {
      throw BadInput("unknown method: " + method);
    }
    json row{{"i", i},
             {"j", j},
             {"kind", to_string(l.kind)},
             {"gram_ab", scalar_to_json(l.gram_ab)},
             {"verdicts", verdicts}};
    if (!witness.empty()) row["witness"] = witness;
    rows[k] = std::move(row);
  });
  json report{{"manifest", manifest("solidity", o, L.raw)}, {"rows", rows}};
  emit(report, o);
  return disagreement ? kVerifyFail : kOk;
}

int cmd_jordan(const Options& o, std::size_t trials) {
  LoadedAlgebra L = load_algebra(o.algebra_file, /*need_form=*/false);
  IdentityReport r = full_pipeline(L.alg, L.axes, trials, o.seed);
  json report{{"manifest", manifest("jordan", o, L.raw)},
              {"almost_jordan", r.almost_jordan},
              {"almost_witness", r.almost_witness},
              {"linearized_jordan", r.linearized_jordan},
              {"linearized_witness", r.linearized_witness},
              {"jordan_sampled", r.jordan_sampled},
              {"sample_exhaustive", r.sample_exhaustive},
              {"sample_count", r.sample_count},
              {"spans_by_axes", r.spans_by_axes},
              {"spans_known", r.spans_known},
              {"all_lines_solid", r.all_lines_solid},
              {"final_verdict", to_string(r.final_verdict)}};
  emit(report, o);
  switch (r.final_verdict) {
    case JordanVerdict::Jordan: return kOk;
    case JordanVerdict::NotJordan: return kNotJordan;
    case JordanVerdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_orbit(const Options& o) {
  LoadedAlgebra L = load_algebra(o.algebra_file);
  json report{{"manifest", manifest("orbit", o, L.raw)}};
  try {
    report["spans_by_axes"] = spans_by_axes(L.alg, L.axes);
  } catch (const OrbitCapExceeded& e) {
    report["spans_by_axes"] = nullptr;
    report["spans_error"] = e.what();
  }
  auto pairs = select_pairs(o, L.axes.size());
  std::vector<json> rows(pairs.size());
  parallel_for(pairs.size(), o.threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    LineRecord l = classify_line(L.axes[i], L.axes[j], L.form);
    json row{{"i", i}, {"j", j}, {"kind", to_string(l.kind)}};
    row.update(orbit_json(orbit_size(l)));
    rows[k] = std::move(row);
  });
  report["rows"] = rows;
  emit(report, o);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with axial algebras of Jordan type 1/2"};
  app.require_subcommand(1);

  Options o;
  std::string group_arg, out_file = "algebra.json", method = "all";
  std::size_t trials = 500;

  auto add_common = [&](CLI::App* c, bool with_algebra) {
    c->add_option("--seed", o.seed, "sampling seed");
    c->add_option("--threads", o.threads, "worker threads");
    c->add_option("--json-out", o.json_out, "write the JSON report here");
    if (with_algebra)
      c->add_option("--algebra", o.algebra_file, "algebra JSON file")->required();
  };

  auto* matsuo = app.add_subcommand("matsuo", "build a Matsuo algebra");
  matsuo->add_option("--group", group_arg, "catalog name or group JSON file")->required();
  matsuo->add_option("--field", o.field, "Q or F<p>");
  matsuo->add_option("--eta", o.eta, "fusion parameter (default 1/2)");
  matsuo->add_option("--out", out_file, "output algebra file");
  add_common(matsuo, false);

  auto* verify = app.add_subcommand("verify", "certify axes and the Frobenius form");
  add_common(verify, true);

  auto* lines = app.add_subcommand("lines", "classify 2-generated subalgebras");
  lines->add_option("--pairs", o.pairs, "'all' or 'i,j'");
  lines->add_option("--sample", o.sample, "random subsample size");
  add_common(lines, true);

  auto* solidity = app.add_subcommand("solidity", "decide solidity per line");
  solidity->add_option("--pairs", o.pairs, "'all' or 'i,j'");
  solidity->add_option("--sample", o.sample, "random subsample size");
  solidity->add_option("--method", method, "derivation|polynomial|enumerate|all");
  add_common(solidity, true);

  auto* jordan = app.add_subcommand("jordan", "run the Jordan identity pipeline");
  jordan->add_option("--trials", trials, "random samples for the direct identities");
  add_common(jordan, true);

  auto* orbit = app.add_subcommand("orbit", "Miyamoto orbit and spanning report");
  orbit->add_option("--pairs", o.pairs, "'all' or 'i,j'");
  orbit->add_option("--sample", o.sample, "random subsample size");
  add_common(orbit, true);

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  int rc = kInputError;
  try {
    if (matsuo->parsed()) rc = cmd_matsuo(group_arg, o, out_file);
    else if (verify->parsed()) rc = cmd_verify(o);
    else if (lines->parsed()) rc = cmd_lines(o);
    else if (solidity->parsed()) rc = cmd_solidity(o, method);
    else if (jordan->parsed()) rc = cmd_jordan(o, trials);
    else if (orbit->parsed()) rc = cmd_orbit(o);
  } catch (const BadInput& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnknownGroup& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal disagreement: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "elapsed: " << ms << " ms\n";  // timing stays out of reports
  return rc;
}
