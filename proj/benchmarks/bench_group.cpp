#include <benchmark/benchmark.h>

#include <random>

#include "tpp/group.hpp"

using namespace tpp;

namespace {

void BM_field_mul(benchmark::State& state) {
  FieldCtx f = field_for_order(uint32_t(state.range(0)));
  std::mt19937_64 rng(1);
  FieldElem a{uint32_t(rng() % f.order())}, b{uint32_t(rng() % f.order())};
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(a, b));
  }
}
BENCHMARK(BM_field_mul)->Arg(16)->Arg(25)->Arg(49);

void BM_group_mul(benchmark::State& state, const Group& g) {
  std::mt19937_64 rng(2);
  std::vector<Elem> xs, ys;
  for (int i = 0; i < 256; ++i) {
    xs.push_back(g.element_at(rng() % g.order()));
    ys.push_back(g.element_at(rng() % g.order()));
  }
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g.mul(xs[i & 255], ys[i & 255]));
    ++i;
  }
}
BENCHMARK_CAPTURE(BM_group_mul, sym10, Group::symmetric(10));
BENCHMARK_CAPTURE(BM_group_mul, wreath_c10_s5, Group::wreath(10, 5));
BENCHMARK_CAPTURE(BM_group_mul, sl2_9, Group::sl2(field_for_order(9)));
BENCHMARK_CAPTURE(BM_group_mul, frob80, Group::frobenius80());

void BM_dense_table_build(benchmark::State& state) {
  Group g = Group::wreath(4, 2);  // order 32
  for (auto _ : state) {
    DenseTable t(g);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_dense_table_build);

void BM_conjugacy_classes(benchmark::State& state) {
  Group g = Group::sl2(field_for_order(uint32_t(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_classes(g).size());
  }
}
BENCHMARK(BM_conjugacy_classes)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
