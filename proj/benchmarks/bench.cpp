#include <benchmark/benchmark.h>

#include "axial/catalog.hpp"
#include "axial/jordan.hpp"
#include "axial/matsuo.hpp"

using namespace axial;

namespace {

struct Setup {
  AlgebraPtr alg;
  std::vector<AxisRecord> axes;
  FrobeniusForm form;
};

const Setup& setup(const std::string& group, std::uint64_t p) {
  static std::map<std::string, Setup> cache;
  std::string key = group + "/" + std::to_string(p);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Setup s;
    FieldPtr f = p ? Field::prime(p) : Field::rationals();
    s.alg = build_matsuo(catalog_class(group), MatsuoConfig::standard(f));
    for (const auto& a : s.alg->axes())
      s.axes.push_back(*certify_axis(s.alg->element(a)).record);
    s.form = frobenius_form(s.alg, s.axes);
    it = cache.emplace(key, std::move(s)).first;
  }
  return it->second;
}

void BM_algebra_product(benchmark::State& state) {
  const Setup& s = setup("WD4", 0);
  Coords x = s.axes[0].element.coords, y = s.axes[5].element.coords;
  for (auto _ : state) benchmark::DoNotOptimize(s.alg->product(x, y));
}
BENCHMARK(BM_algebra_product);

void BM_certify_axis(benchmark::State& state) {
  const Setup& s = setup("WD4", 0);
  Element a = s.alg->basis_element(0);
  for (auto _ : state) benchmark::DoNotOptimize(certify_axis(a));
}
BENCHMARK(BM_certify_axis);

void BM_subalgebra_closure(benchmark::State& state) {
  const Setup& s = setup("3_3_S4", 0);
  std::vector<Element> gens{s.alg->basis_element(0), s.alg->basis_element(1)};
  for (auto _ : state) benchmark::DoNotOptimize(subalgebra_closure(gens));
}
BENCHMARK(BM_subalgebra_closure);

void BM_classify_line(benchmark::State& state) {
  const Setup& s = setup("S4", 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_line(s.axes[0], s.axes[1], s.form));
}
BENCHMARK(BM_classify_line);

void BM_derivation_test(benchmark::State& state) {
  const Setup& s = setup("WD4", 3);
  LineRecord line = classify_line(s.axes[0], s.axes[1], s.form);
  for (auto _ : state) benchmark::DoNotOptimize(derivation_test(line));
}
BENCHMARK(BM_derivation_test);

void BM_enumeration_test(benchmark::State& state) {
  const Setup& s = setup("WD4", 3);
  LineRecord line = classify_line(s.axes[0], s.axes[1], s.form);
  for (auto _ : state) benchmark::DoNotOptimize(enumeration_test(line));
}
BENCHMARK(BM_enumeration_test);

void BM_full_pipeline(benchmark::State& state) {
  const Setup& s = setup("S4", 5);
  for (auto _ : state) benchmark::DoNotOptimize(full_pipeline(s.alg, s.axes));
}
BENCHMARK(BM_full_pipeline);

}  // namespace

BENCHMARK_MAIN();
