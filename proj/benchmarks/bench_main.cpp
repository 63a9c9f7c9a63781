#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "kmsph/cartan.hpp"
#include "kmsph/cones.hpp"
#include "kmsph/datum.hpp"
#include "kmsph/lp.hpp"
#include "kmsph/shell.hpp"

namespace {

using namespace kmsph;

LoadedDatum fixture(const std::string& name) {
  return load_datum_file(std::string(KMSPH_FIXTURES_DIR) + "/" + name + ".json");
}

void BM_ValidateCorpus(benchmark::State& state) {
  std::vector<LoadedDatum> loaded;
  for (const char* name :
       {"ex_verysolv", "ex_second", "ex_second_K", "ex_conj", "ex_new", "ex_veryred"})
    loaded.push_back(fixture(name));
  for (auto _ : state)
    for (const LoadedDatum& d : loaded)
      benchmark::DoNotOptimize(validate(d.name, d.datum, d.registry));
}
BENCHMARK(BM_ValidateCorpus);

void BM_FiniteTypeSearch(benchmark::State& state) {
  LoadedDatum d = fixture("ex_second_K");
  for (auto _ : state) benchmark::DoNotOptimize(check_finite_type(d.datum));
}
BENCHMARK(BM_FiniteTypeSearch);

void BM_FiniteTypeMinors(benchmark::State& state) {
  // E8: a path with one branch, the largest finite exceptional diagram.
  ZMat a(8, ZVec(8, 0));
  for (int i = 0; i < 8; ++i) a[i][i] = 2;
  auto join = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  for (int i = 0; i + 1 < 7; ++i) join(i, i + 1);
  join(2, 7);
  auto gcm = GeneralizedCartanMatrix::make(a);
  std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
  for (auto _ : state) benchmark::DoNotOptimize(is_finite_type(gcm, all));
}
BENCHMARK(BM_FiniteTypeMinors);

void BM_StrictFeasibility(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<QMat> instances;
  for (int t = 0; t < 32; ++t) {
    QMat m(6, QVec(4));
    for (auto& row : m)
      for (auto& v : row) v = static_cast<long>(rng() % 9) - 4;
    instances.push_back(std::move(m));
  }
  for (auto _ : state)
    for (const QMat& m : instances) benchmark::DoNotOptimize(strict_feasibility(m, 4));
}
BENCHMARK(BM_StrictFeasibility);

void BM_DoubleDescription(benchmark::State& state) {
  // A pyramid over a square: four inequalities, one ambient dimension more.
  PolyhedralCone cone;
  cone.dim = 3;
  cone.le = {{-1, 0, 0}, {0, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  for (auto _ : state) benchmark::DoNotOptimize(dd_generators(cone));
}
BENCHMARK(BM_DoubleDescription);

}  // namespace

BENCHMARK_MAIN();
