#include <benchmark/benchmark.h>

#include "sl2coh/pairlat/pairing_diagram.hpp"

using namespace sl2coh;

namespace {

void BM_PairingLattices(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pairing_lattices(p, r));
}
BENCHMARK(BM_PairingLattices)->Args({2, 1})->Args({3, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

void BM_Diagram(benchmark::State& state) {
  PairingLattices d = pairing_lattices(static_cast<int>(state.range(0)), 1);
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_diagram(d, m));
}
BENCHMARK(BM_Diagram)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

}  // namespace
