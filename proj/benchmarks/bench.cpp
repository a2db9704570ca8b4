#include <benchmark/benchmark.h>

#include "matfp/catalog.hpp"
#include "matfp/coalgebra.hpp"
#include "matfp/extension.hpp"
#include "matfp/free_product.hpp"
#include "matfp/iso.hpp"
#include "matfp/matroid.hpp"

namespace {

using namespace matfp;

Matroid double_points() {
  return Matroid::from_bases(4, 2, {0b0101, 0b0110, 0b1001, 0b1010});
}

void BM_free_product(benchmark::State& state) {
  const Matroid m = Matroid::uniform(3, int(state.range(0)));
  const Matroid n = double_points();
  for (auto _ : state) benchmark::DoNotOptimize(free_product(m, n));
}
BENCHMARK(BM_free_product)->Arg(6)->Arg(10)->Arg(12);

void BM_canonical_form(benchmark::State& state) {
  const Matroid m = relabel(free_product(double_points(), double_points()),
                            {5, 2, 7, 0, 4, 6, 1, 3});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(m));
}
BENCHMARK(BM_canonical_form);

void BM_modular_cuts(benchmark::State& state) {
  const Matroid m = free_product(Matroid::uniform(2, 3), double_points());
  for (auto _ : state) benchmark::DoNotOptimize(modular_cuts(m));
}
BENCHMARK(BM_modular_cuts);

void BM_coproduct(benchmark::State& state) {
  const Matroid m = free_product(double_points(), Matroid::uniform(2, 4));
  for (auto _ : state) benchmark::DoNotOptimize(coproduct(m));
}
BENCHMARK(BM_coproduct);

void BM_enumerate(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_up_to(int(state.range(0))));
}
BENCHMARK(BM_enumerate)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
