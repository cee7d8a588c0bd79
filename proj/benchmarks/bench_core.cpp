#include <benchmark/benchmark.h>

#include "arborlab/classes.hpp"
#include "arborlab/cycle_stats.hpp"
#include "arborlab/dynamics.hpp"
#include "arborlab/fppoly.hpp"
#include "arborlab/perm_group.hpp"
#include "arborlab/primes.hpp"
#include "arborlab/wreath.hpp"

using namespace arborlab;

namespace {

std::vector<Perm> m11_gens() {
  return {Perm::parse(11, "(0 1 2 3 4 5 6 7 8 9 10)"), Perm::parse(11, "(2 6 10 7)(3 9 4 5)")};
}

void BM_Compose(benchmark::State& state) {
  Rng rng(1);
  Perm a = uniform_symmetric(23, rng);
  Perm b = uniform_symmetric(23, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose);

void BM_StabilizerChainM11(benchmark::State& state) {
  auto gens = m11_gens();
  for (auto _ : state) {
    PermGroup g(11, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChainM11);

void BM_CosetFpfClassSums(benchmark::State& state) {
  PermGroup a8 = PermGroup::alternating(8);
  for (auto _ : state) {
    CosetFpfTable t = coset_fpf_table(a8, a8, {100'000'000});
    benchmark::DoNotOptimize(t.alpha);
  }
}
BENCHMARK(BM_CosetFpfClassSums);

void BM_CosetFpfTraversalM11(benchmark::State& state) {
  PermGroup m11(11, m11_gens());
  for (auto _ : state) {
    CosetFpfTable t = coset_fpf_table(m11, m11, {100'000'000});
    benchmark::DoNotOptimize(t.alpha);
  }
}
BENCHMARK(BM_CosetFpfTraversalM11);

void BM_FactorCountDeg64(benchmark::State& state) {
  DynamicalSystem sys({BigInt(1), BigInt(-1), BigInt(1)}, Rational(0), Rational(2));
  FpPoly f = *sys.reduce(99991);
  FpPoly iter = f;
  for (int i = 1; i < 6; ++i) iter = compose(iter, f);
  for (auto _ : state) benchmark::DoNotOptimize(factor_count_mod_p(iter));
}
BENCHMARK(BM_FactorCountDeg64);

void BM_SieveMillion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(primes_in_range(2, 1'000'000).size());
}
BENCHMARK(BM_SieveMillion);

void BM_OrbitHits(benchmark::State& state) {
  DynamicalSystem sys({BigInt(1), BigInt(-1), BigInt(1)}, Rational(0), Rational(2));
  auto ps = primes_in_range(100000, 101000);
  for (auto _ : state)
    for (auto p : ps) benchmark::DoNotOptimize(orbit_hits_mod_p(sys, p));
}
BENCHMARK(BM_OrbitHits);

void BM_TowerUniform(benchmark::State& state) {
  WreathTower t = WreathTower::parse("A5*A5");
  Rng rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(uniform_element(t, rng));
}
BENCHMARK(BM_TowerUniform);

} // namespace

BENCHMARK_MAIN();
