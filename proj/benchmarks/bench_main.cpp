#include <benchmark/benchmark.h>

#include <cmath>

#include "gensmooth/bank.hpp"
#include "gensmooth/cauchy.hpp"
#include "gensmooth/norms.hpp"
#include "gensmooth/operators.hpp"
#include "gensmooth/sampling.hpp"
#include "gensmooth/symbol.hpp"

using namespace gensmooth;

namespace {

GridFunction test_function(const Lattice& lat) {
  return GridFunction::sample(lat, [](double x, double y) {
    return cplx(std::cos(M_PI * x) + 0.3 * std::sin(7 * M_PI * x) + 0.1 * std::cos(40 * M_PI * (x + y)), 0.0);
  });
}

void BM_SymbolGridStable(benchmark::State& st) {
  const Lattice lat = default_lattice(1);
  const LevyModel m = make_stable(1, 0.5, AngularMeasure::two_point(1, 1));
  for (auto _ : st) benchmark::DoNotOptimize(make_symbol_grid(m, lat, SymbolMethod::Quadrature));
}
BENCHMARK(BM_SymbolGridStable)->Unit(benchmark::kMillisecond);

void BM_SymbolGridBernstein(benchmark::State& st) {
  const Lattice lat = default_lattice(1);
  const LevyModel m = make_bernstein(BernsteinPhi(2, {0.5, 0.5}), 1);
  for (auto _ : st) benchmark::DoNotOptimize(make_symbol_grid(m, lat));
}
BENCHMARK(BM_SymbolGridBernstein)->Unit(benchmark::kMillisecond);

void BM_ApplyGenerator(benchmark::State& st) {
  const Lattice lat{1, 2.0, static_cast<int>(st.range(0))};
  const SymbolGrid g = make_symbol_grid(make_stable(1, 0.5, AngularMeasure::two_point(1, 1)), lat);
  const GridFunction u = test_function(lat);
  for (auto _ : st) benchmark::DoNotOptimize(apply_generator(u, g));
}
BENCHMARK(BM_ApplyGenerator)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_BesovNorm(benchmark::State& st) {
  const Lattice lat = default_lattice(1);
  const DyadicBank bank = build_bank(4.0, lat);
  const ScalingFunction sf = ScalingFunction::power_law(0.5);
  const GridFunction u = test_function(lat);
  for (auto _ : st) benchmark::DoNotOptimize(besov_norm(u, bank, sf, 0.5));
}
BENCHMARK(BM_BesovNorm);

void BM_HolderNorm(benchmark::State& st) {
  const Lattice lat{1, 2.0, static_cast<int>(st.range(0))};
  const ScalingFunction sf = ScalingFunction::power_law(0.5);
  const GridFunction u = test_function(lat);
  for (auto _ : st) benchmark::DoNotOptimize(holder_norm(u, sf, 0.5));
}
BENCHMARK(BM_HolderNorm)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_SolveSpectral(benchmark::State& st) {
  const Lattice lat = default_lattice(1);
  const SymbolGrid g = make_symbol_grid(make_stable(1, 0.5, AngularMeasure::two_point(1, 1)), lat);
  const Forcing f = Forcing::constant(test_function(lat));
  for (auto _ : st) benchmark::DoNotOptimize(solve_spectral(f, g, 1.0, 1.0, static_cast<int>(st.range(0)), 64));
}
BENCHMARK(BM_SolveSpectral)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_IncrementPath(benchmark::State& st) {
  const LevyModel m = make_stable(1, 0.5, AngularMeasure::two_point(1, 1));
  const IncrementSampler s(m, 1e-2);
  const std::vector<double> times{0.25, 0.5, 0.75, 1.0};
  std::uint64_t path = 0;
  for (auto _ : st) {
    RngStream rng(1, path++);
    benchmark::DoNotOptimize(s.path(times, rng));
  }
}
BENCHMARK(BM_IncrementPath);

}  // namespace
BENCHMARK_MAIN();
