#include <benchmark/benchmark.h>

#include "tpp/constructions.hpp"

using namespace tpp;

namespace {

void BM_verify_triangle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_triangle(uint32_t(state.range(0))));
  }
}
BENCHMARK(BM_verify_triangle)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_verify_wreath(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_wreath(uint32_t(state.range(0))));
  }
}
BENCHMARK(BM_verify_wreath)->Arg(3)->Arg(4)->Arg(5)->Unit(
    benchmark::kMillisecond);

void BM_verify_sperner(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_sperner_power(4, 6));
  }
}
BENCHMARK(BM_verify_sperner)->Unit(benchmark::kMillisecond);

void BM_verify_frob80(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_frobenius80());
  }
}
BENCHMARK(BM_verify_frob80)->Unit(benchmark::kMicrosecond);

void BM_quotient_set(benchmark::State& state) {
  // Non-subgroup third set of the k=6 dihedral power: 90^2 quotients.
  RealizationCertificate cert = construct_sperner_power(4, 6);
  Group g = cert.group();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_set(g, cert.subsets[2]));
  }
}
BENCHMARK(BM_quotient_set)->Unit(benchmark::kMillisecond);

}  // namespace
