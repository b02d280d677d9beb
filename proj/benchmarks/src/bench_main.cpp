#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"
#include "knotoid/sbm.hpp"
#include "knotoid/vassiliev.hpp"

namespace {

knotoid::KnotoidCode load(const std::string& name) {
  std::ifstream in(std::string(KNOTOID_BENCH_DATA_DIR) + "/fixtures/" + name + ".gauss");
  std::stringstream ss;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') ss << line << ' ';
  return knotoid::parse(ss.str());
}

void BM_AffinePolynomial(benchmark::State& state) {
  auto d = load("fig30-D1");
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::affine_index_polynomial(d));
}
BENCHMARK(BM_AffinePolynomial);

void BM_InvariantF(benchmark::State& state) {
  auto d = load("fig30-D1");
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::invariant_F(d));
}
BENCHMARK(BM_InvariantF);

void BM_InvariantG(benchmark::State& state) {
  auto d = load("fig30-D1");
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::invariant_G(d));
}
BENCHMARK(BM_InvariantG);

void BM_BuildSbm(benchmark::State& state) {
  auto d = load("fig31-left");
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::build_sbm(d));
}
BENCHMARK(BM_BuildSbm);

// Random skew matrices with the given number of unmarked elements.
void BM_CanonicalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0)) + 2;
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> entry(-1, 1);
  knotoid::SBM::Matrix b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b[i][j] = entry(rng);
      b[j][i] = -b[i][j];
    }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  knotoid::SBM m(labels, b, labels.front(), labels.back());
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::canonical_form(m));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(1, 9, 2);

void BM_HomologyCertificate(benchmark::State& state) {
  auto m = knotoid::build_sbm(load("fig31-left"));
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::homology_certificate(m));
}
BENCHMARK(BM_HomologyCertificate);

void BM_RandomWalk(benchmark::State& state) {
  auto d = load("fig19");
  knotoid::WalkOptions opt;
  opt.max_chords = 9;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(knotoid::random_walk(d, static_cast<int>(state.range(0)), seed++, opt));
}
BENCHMARK(BM_RandomWalk)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
