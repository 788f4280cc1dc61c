// Serial reference loops against the OpenMP kernels for the sampled checks.

#include <benchmark/benchmark.h>

#include "g2harm/g2alg.hpp"
#include "g2harm/harmonic.hpp"

namespace {

using namespace g2harm;

const EigenFamily& family() {
  static const EigenFamily fam =
      make_eigenfamily(unit<cplx>(0) + cplx(0.0, 1.0) * unit<cplx>(1), default_basis());
  return fam;
}

const RationalMap& quadratic_map() {
  static const RationalMap m = RationalMap::make(PolyFn::parse("z1^2 + z2*z3"), PolyFn::parse("z4^2"));
  return m;
}

void BM_EigenfamilySerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::check_eigenfamily(family(), default_basis(), n, 7, 1e-9));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_EigenfamilyParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_eigenfamily(family(), default_basis(), n, 7, 1e-9));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_MorphismSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::check_harmonic_morphism(quadratic_map(), family(), default_basis(), n, 7, 1e-7));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

void BM_MorphismParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_harmonic_morphism(quadratic_map(), family(), default_basis(), n, 7, 1e-7));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

BENCHMARK(BM_EigenfamilySerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_EigenfamilyParallel)->Arg(100)->Arg(1000);
BENCHMARK(BM_MorphismSerial)->Arg(100)->Arg(1000);
BENCHMARK(BM_MorphismParallel)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
