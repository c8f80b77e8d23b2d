#include <benchmark/benchmark.h>

#include <random>

#include "sl2coh/exactalg/lattice.hpp"
#include "sl2coh/exactalg/polynomial.hpp"

using namespace sl2coh;

namespace {

IntegerMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-50, 50);
  IntegerMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

void BM_Hnf(benchmark::State& state) {
  IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(a));
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(20)->Arg(40);

void BM_Smith(benchmark::State& state) {
  IntegerMatrix a = random_matrix(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(a));
}
BENCHMARK(BM_Smith)->Arg(8)->Arg(20);

void BM_BinomialExpansion(benchmark::State& state) {
  auto v = make_vars({{"X"}, {"Y"}});
  auto s = Polynomial::variable(v, Ring::integers(), 0) + Polynomial::variable(v, Ring::integers(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(s.pow(static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_BinomialExpansion)->Arg(27)->Arg(125);

}  // namespace
