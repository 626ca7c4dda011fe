#include <benchmark/benchmark.h>

#include "lieperm/excep.hpp"

using namespace lieperm;

namespace {

void BM_GenerateMap(benchmark::State& state, const char* type, int k) {
  auto t = rootsys::LieType::parse(type);
  for (auto _ : state) {
    auto P = exppoly::compute_P(t, k);
    benchmark::DoNotOptimize(P);
  }
}

void BM_WeylGeneration(benchmark::State& state, const char* type) {
  auto t = rootsys::LieType::parse(type);
  for (auto _ : state) {
    auto W = weyl::WeylGroup::generate(t);
    benchmark::DoNotOptimize(W);
  }
}

void BM_BruteForce(benchmark::State& state, const char* type, int k, uint64_t q) {
  auto t = rootsys::LieType::parse(type);
  auto P = exppoly::compute_P(t, k);
  auto F = ffield::FieldSpec::from_order(q);
  ffield::ReducedMap M(P, F);
  uint64_t points = 1;
  for (int i = 0; i < t.rank(); ++i) points *= q;
  for (auto _ : state) {
    auto r = excep::brute_force_is_permutation(M);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * points));
}

void BM_FixedPoints(benchmark::State& state, const char* type, int k) {
  auto t = rootsys::LieType::parse(type);
  auto W = weyl::WeylGroup::generate(t);
  for (auto _ : state) {
    auto fp = excep::fixed_points(W, k);
    benchmark::DoNotOptimize(fp);
  }
}

BENCHMARK_CAPTURE(BM_GenerateMap, A4_k7, "A4", 7);
BENCHMARK_CAPTURE(BM_GenerateMap, G2_k6, "G2", 6);
BENCHMARK_CAPTURE(BM_GenerateMap, B6_k4, "B6", 4);
BENCHMARK_CAPTURE(BM_WeylGeneration, B5, "B5");
BENCHMARK_CAPTURE(BM_WeylGeneration, F4, "F4");
BENCHMARK_CAPTURE(BM_BruteForce, A2_k5_q9, "A2", 5, 9);
BENCHMARK_CAPTURE(BM_BruteForce, A4_k7_q3, "A4", 7, 3);
BENCHMARK_CAPTURE(BM_BruteForce, B2_k7_q25, "B2", 7, 25);
BENCHMARK_CAPTURE(BM_FixedPoints, G2_k5, "G2", 5);

}  // namespace

BENCHMARK_MAIN();
