#include <benchmark/benchmark.h>

#include <random>

#include "tpp/constructions.hpp"
#include "tpp/embed.hpp"

using namespace tpp;

namespace {

ExactMatrix rand_matrix(size_t r, size_t c, std::mt19937_64& rng) {
  ExactMatrix m(r, c);
  for (auto& x : m.data) x = Coeff(int64_t(rng() % 201) - 100);
  return m;
}

void BM_matmul_via_group(benchmark::State& state,
                         RealizationCertificate cert) {
  Group g = cert.group();
  std::mt19937_64 rng(3);
  ExactMatrix a = rand_matrix(cert.shape.n, cert.shape.m, rng);
  ExactMatrix b = rand_matrix(cert.shape.m, cert.shape.p, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matmul_via_group(g, cert, a, b));
  }
}
BENCHMARK_CAPTURE(BM_matmul_via_group, s3, construct_triangle(2))
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_matmul_via_group, sl2_5, construct_sl2_parabolic(5))
    ->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_matmul_via_group, triangle3, construct_triangle(3))
    ->Unit(benchmark::kMillisecond);

void BM_naive_matmul(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const size_t n = size_t(state.range(0));
  ExactMatrix a = rand_matrix(n, n, rng);
  ExactMatrix b = rand_matrix(n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_matmul(a, b));
  }
}
BENCHMARK(BM_naive_matmul)->Arg(5)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
