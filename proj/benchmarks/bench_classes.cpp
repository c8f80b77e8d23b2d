#include <benchmark/benchmark.h>

#include "sl2coh/classes/universal.hpp"
#include "sl2coh/classes/witt.hpp"
#include "sl2coh/hochschild/torus.hpp"

using namespace sl2coh;

namespace {

void BM_WittCocycleCheck(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  Cochain c = witt_cocycle(p, r);
  for (auto _ : state) benchmark::DoNotOptimize(is_cocycle(c));
}
BENCHMARK(BM_WittCocycleCheck)->Args({2, 3})->Args({3, 3})->Args({5, 3})->Unit(benchmark::kMillisecond);

// d(c^m) expanded in full; the cost grows like the term count (p^r - 1)^m.
void BM_CupPowerCocycle(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  const int m = static_cast<int>(state.range(2));
  Cochain f = cup_power(p, r, m);
  for (auto _ : state) benchmark::DoNotOptimize(is_cocycle(f));
  state.counters["terms"] = static_cast<double>(f.component(0).size());
}
BENCHMARK(BM_CupPowerCocycle)
    ->Args({2, 2, 4})
    ->Args({3, 2, 3})
    ->Args({5, 2, 2})
    ->Args({3, 3, 3})
    ->Unit(benchmark::kMillisecond);

void BM_UniversalClass(benchmark::State& state) {
  UniversalClassSpec s{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)),
                       static_cast<int>(state.range(2)), static_cast<int>(state.range(3))};
  for (auto _ : state) {
    Cochain f = universal_cochain(s);
    benchmark::DoNotOptimize(is_cocycle(f));
    benchmark::DoNotOptimize(extend_to_borel(f, borel_coefficients(s)));
    benchmark::DoNotOptimize(project_universal_class(s));
  }
}
BENCHMARK(BM_UniversalClass)->Args({2, 1, 0, 4})->Args({2, 1, 2, 1})->Args({3, 1, 1, 1})->Unit(benchmark::kMillisecond);

}  // namespace
