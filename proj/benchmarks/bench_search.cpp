#include <benchmark/benchmark.h>

#include "tpp/search.hpp"

using namespace tpp;

namespace {

void BM_subset_search_d4(benchmark::State& state) {
  Group g = Group::dihedral(4);
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::kSubsets;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_subset_triples(g, cfg));
  }
}
BENCHMARK(BM_subset_search_d4)->Unit(benchmark::kMillisecond);

void BM_subset_search_c16(benchmark::State& state) {
  Group g = Group::cyclic(16);
  SearchConfig cfg;
  cfg.mode = SearchConfig::Mode::kSubsets;
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_subset_triples(g, cfg));
  }
}
BENCHMARK(BM_subset_search_c16)->Unit(benchmark::kMillisecond);

void BM_subgroup_search_frob80(benchmark::State& state) {
  Group g = Group::frobenius80();
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_subgroup_triples(g, SearchConfig{}));
  }
}
BENCHMARK(BM_subgroup_search_frob80)->Unit(benchmark::kMillisecond);

void BM_enumerate_subgroups(benchmark::State& state) {
  Group g = Group::symmetric(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_subgroups(g).size());
  }
}
BENCHMARK(BM_enumerate_subgroups)->Unit(benchmark::kMillisecond);

}  // namespace
