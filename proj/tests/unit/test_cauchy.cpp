#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gensmooth/cauchy.hpp"
#include "gensmooth/errors.hpp"
#include "gensmooth/operators.hpp"
#include "oracles.hpp"

using namespace gensmooth;

namespace {

LevyModel stable1(double alpha) { return make_stable(1, alpha, AngularMeasure::two_point(1, 1)); }

const Lattice kLat{1, 2.0, 256};

GridFunction mode(int k) {
  return GridFunction::sample(kLat, [&](double x, double) { return std::exp(cplx(0, 2 * M_PI * k * x / kLat.box)); });
}

GridFunction profile() {
  return GridFunction::sample(kLat, [](double x, double) {
    return cplx(0.5 + 0.5 * std::cos(2 * M_PI * 2 * x / 2.0) + 0.3 * std::sin(2 * M_PI * 6 * x / 2.0));
  });
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

TEST(SolveSpectral, ZeroForcingGivesZero) {
  const SymbolGrid g = make_symbol_grid(stable1(1.5), kLat);
  const auto r = solve_spectral(Forcing::constant(GridFunction(kLat)), g, 1.0, 1.0, 64);
  for (const auto& u : r.u) EXPECT_EQ(u.sup_norm(), 0.0);
  const Forcing zf = Forcing::constant(GridFunction(kLat));
  EXPECT_EQ(max_of(residual(r, zf, g)), 0.0);
}

TEST(SolveSpectral, InitialNodeIsZero) {
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  const auto r = solve_spectral(Forcing::constant(profile()), g, 1.0, 1.0, 256, 16);
  ASSERT_EQ(r.u.size(), 17u);
  EXPECT_EQ(r.u[0].sup_norm(), 0.0);
  EXPECT_DOUBLE_EQ(r.times.back(), 1.0);
}

TEST(SolveSpectral, SingleModeMatchesAnalyticDuhamel) {
  for (double a : {0.5, 1.0, 1.5}) {
    const SymbolGrid g = make_symbol_grid(stable1(a), kLat);
    for (int k : {1, 3, 20}) {
      const double lambda = 1.0;
      const auto f = mode(k);
      const auto r = solve_spectral(Forcing::constant(f), g, lambda, 1.0, 256, 8);
      const cplx z = g.values[k] - lambda;
      for (std::size_t n = 0; n < r.u.size(); ++n) {
        const cplx coef = oracle::duhamel_mode(z, r.times[n]);
        EXPECT_LT((r.u[n] - coef * f).sup_norm(), 1e-6) << a << " " << k << " " << n;
        EXPECT_LT((r.u[n] - coef * f).sup_norm(), 1e-13) << a << " " << k << " " << n;
      }
    }
  }
}

TEST(SolveSpectral, LongTimeApproachesSteadyState) {
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  const auto f = profile();
  const auto r = solve_spectral(Forcing::constant(f), g, 1.0, 20.0, 256, 256);
  EXPECT_LE((r.u.back() - steady_state(f, g, 1.0)).sup_norm(), 1e-8);
}

TEST(SolveSpectral, RestartConsistency) {
  const SymbolGrid g = make_symbol_grid(stable1(1.5), kLat);
  const Forcing f = Forcing::constant(profile());
  const auto full = solve_spectral(f, g, 0.5, 1.0, 256, 256);
  const auto half = solve_spectral(f, g, 0.5, 0.5, 128, 128);
  const auto rest = solve_spectral_from(half.u.back(), f, g, 0.5, 0.5, 128, 128);
  EXPECT_LE((full.u.back() - rest.u.back()).sup_norm(), 1e-10);
}

TEST(SolveSpectral, PositivityWithoutDiscount) {
  const auto f = GridFunction::sample(kLat, [](double x, double) { return cplx(std::exp(-6.0 * x * x)); });
  for (const LevyModel& m : {stable1(0.5), stable1(1.5), make_bernstein(BernsteinPhi(2, {0.5, 0.5}), 1)}) {
    const auto r = solve_spectral(Forcing::constant(f), make_symbol_grid(m, kLat), 0.0, 1.0, 256, 16);
    for (const auto& u : r.u)
      for (const auto& v : u.values()) EXPECT_GE(v.real(), -1e-8);
  }
}

TEST(SolveSpectral, ResidualSecondOrderUnderStepDoubling) {
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  const auto f0 = mode(3);
  auto make = [&](int K) {
    std::vector<GridFunction> nodes;
    for (int k = 0; k <= K; ++k) nodes.push_back(cplx(std::sin(3.0 * k / K)) * f0);
    return Forcing::nodes(std::move(nodes));
  };
  const Forcing a = make(256), b = make(512);
  const double ra = max_of(residual(solve_spectral(a, g, 1.0, 1.0, 256), a, g));
  const double rb = max_of(residual(solve_spectral(b, g, 1.0, 1.0, 512), b, g));
  EXPECT_NEAR(ra / rb, 4.0, 1.2);
}

TEST(SolveSpectral, ResidualIsCentralDifferenceTruncation) {
  // For one mode the residual is the central-difference error of the exact
  // solution, ≈ Δt²/6 |u'''|, with u''' = −z² e^{zt} per unit amplitude.
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  const auto f = mode(1);
  const int K = 256;
  const auto r = solve_spectral(Forcing::constant(f), g, 1.0, 1.0, K);
  const auto res = residual(r, Forcing::constant(f), g);
  const cplx z = g.values[1] - 1.0;
  const double dt = 1.0 / K;
  for (std::size_t n = 0; n < res.size(); n += 17) {
    const double t = (n + 1) * dt;
    const double pred = dt * dt / 6.0 * std::norm(z) * std::abs(std::exp(z * t));
    EXPECT_NEAR(res[n], pred, 0.02 * pred) << n;
  }
}

TEST(SolveSpectral, ClampsNonFiniteWeights) {
  SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  g.values[7] = -std::numeric_limits<double>::infinity();
  const auto r = solve_spectral(Forcing::constant(profile()), g, 1.0, 1.0, 16);
  EXPECT_GT(r.clamped, 0u);
  for (const auto& u : r.u)
    for (const auto& v : u.values()) EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
}

TEST(SolveSpectral, ArgumentErrors) {
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kLat);
  const Forcing f = Forcing::constant(profile());
  EXPECT_THROW(solve_spectral(f, g, -1.0, 1.0, 16), DomainError);
  EXPECT_THROW(solve_spectral(f, g, 1.0, 1.0, 16, 5), DomainError);
  EXPECT_THROW(solve_spectral(Forcing::nodes({profile(), profile()}), g, 1.0, 1.0, 16), DomainError);
  EXPECT_THROW(solve_spectral(Forcing::constant(GridFunction(Lattice{1, 2.0, 64})), g, 1.0, 1.0, 16), DomainError);
}

TEST(SteadyState, ModeRoundTripAndErrors) {
  const SymbolGrid g = make_symbol_grid(stable1(1.5), kLat);
  const auto f = mode(4);
  const auto s = steady_state(f, g, 2.0);
  EXPECT_LT((s - (1.0 / (2.0 - g.values[4])) * f).sup_norm(), 1e-15);
  const auto p = profile();
  const auto back = apply_resolvent_power(steady_state(p, g, 2.0), g, 2.0, 1.0, 1);
  EXPECT_LE((back - p).sup_norm(), 1e-10);
  EXPECT_THROW(steady_state(p, g, 0.0), DomainError);
}

TEST(SolveMc, ConstantForcingIsExact) {
  const auto f = GridFunction::sample(kLat, [](double, double) { return cplx(3.0); });
  McOptions mc;
  mc.paths = 200;
  const auto e = solve_mc(Forcing::constant(f), stable1(1.2), 0.7, 1.0, {{0.1, 0}, {-0.5, 0}}, mc);
  for (const auto& v : e.mean) EXPECT_NEAR(v.real(), 3.0 * -std::expm1(-0.7) / 0.7, 1e-12);
}

TEST(SolveMc, AgreesWithSpectralAtProbes) {
  const LevyModel m = stable1(0.5);
  const SymbolGrid g = make_symbol_grid(m, kLat);
  const auto f = profile();
  const auto r = solve_spectral(Forcing::constant(f), g, 1.0, 1.0, 256, 256);
  std::vector<std::array<double, 2>> probes;
  for (int p = 0; p < 16; ++p) probes.push_back({kLat.coord(p * 16 + 5), 0.0});
  SpectralInterpolant s(r.u.back());
  std::vector<cplx> ref;
  for (const auto& x : probes) ref.push_back(s(x[0], x[1]));
  McOptions mc;
  mc.paths = 100000;
  EXPECT_LE(solve_mc(Forcing::constant(f), m, 1.0, 1.0, probes, mc, 16).max_sigma(ref), 3.0);
}

TEST(SolveMc, TimeVaryingForcingAgreesWithSpectral) {
  const LevyModel m = stable1(1.5);
  const SymbolGrid g = make_symbol_grid(m, kLat);
  const int K = 64;
  std::vector<GridFunction> nodes;
  for (int k = 0; k <= K; ++k) nodes.push_back(cplx(1.0 + std::sin(4.0 * k / K)) * profile());
  const Forcing f = Forcing::nodes(nodes);
  const auto r = solve_spectral(f, g, 0.5, 1.0, K, K);
  std::vector<std::array<double, 2>> probes{{kLat.coord(10), 0.0}, {kLat.coord(100), 0.0}, {kLat.coord(200), 0.0}};
  SpectralInterpolant s(r.u.back());
  std::vector<cplx> ref;
  for (const auto& x : probes) ref.push_back(s(x[0], x[1]));
  McOptions mc;
  mc.paths = 20000;
  EXPECT_LE(solve_mc(f, m, 0.5, 1.0, probes, mc, 64).max_sigma(ref), 3.0);
}

TEST(SolveMc, StderrHalvesUnderFourfoldPaths) {
  const LevyModel m = stable1(0.5);
  const std::vector<std::array<double, 2>> probes{{0.1, 0.0}, {0.6, 0.0}, {-0.4, 0.0}};
  McOptions a, b;
  a.paths = 5000;
  b.paths = 20000;
  const auto ea = solve_mc(Forcing::constant(profile()), m, 1.0, 1.0, probes, a, 16);
  const auto eb = solve_mc(Forcing::constant(profile()), m, 1.0, 1.0, probes, b, 16);
  EXPECT_NEAR(ea.mean_stderr() / eb.mean_stderr(), 2.0, 0.4);
}
