#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "gensmooth/errors.hpp"
#include "gensmooth/scaling.hpp"
#include "oracles.hpp"

using namespace gensmooth;

namespace {

std::shared_ptr<const BernsteinKernel> kernel(int kind, std::vector<double> p, int d = 1) {
  return std::make_shared<BernsteinKernel>(BernsteinPhi(kind, std::move(p)), d);
}

const ScalingFunction& sqrt_bernstein() {
  static const ScalingFunction sf = ScalingFunction::bernstein(kernel(1, {0.5}));
  return sf;
}

const ScalingFunction& mixed_bernstein() {
  static const ScalingFunction sf = ScalingFunction::bernstein(kernel(2, {0.5, 0.5}));
  return sf;
}

}  // namespace

TEST(ScalingFunction, PowerLawValues) {
  const auto sf = ScalingFunction::power_law(0.5);
  EXPECT_DOUBLE_EQ(eval_w(sf, 4.0), 2.0);
  EXPECT_DOUBLE_EQ(eval_l(sf, 0.25), 0.5);
  EXPECT_DOUBLE_EQ(eval_l(sf, 1.0), 1.0);
}

TEST(ScalingFunction, NormalizedAtOne) {
  EXPECT_EQ(ScalingFunction::power_law(1.3).w(1.0), 1.0);
  EXPECT_EQ(sqrt_bernstein().w(1.0), 1.0);
  EXPECT_EQ(ScalingFunction::tabulated({0.1, 0.5, 2, 10}, {0.01, 0.25, 4, 100}).w(1.0), 1.0);
}

TEST(ScalingFunction, RejectsNonPositiveArguments) {
  const auto sf = ScalingFunction::power_law(1.0);
  EXPECT_THROW(sf.w(0.0), DomainError);
  EXPECT_THROW(sf.l(-1.0), DomainError);
  EXPECT_THROW(sf.w(std::nan("")), DomainError);
  EXPECT_THROW(ScalingFunction::power_law(0.0), DomainError);
  EXPECT_THROW(ScalingFunction::tabulated({1, 2, 3}, {1, 2, 3}), DomainError);
  EXPECT_THROW(ScalingFunction::tabulated({1, 3, 2, 4}, {1, 2, 3, 4}), DomainError);
}

TEST(ScalingFunction, BernsteinMatchesSubordinatedKernelOracle) {
  // w(r) = j(1) / (j(r) r^d) with j from an independent quadrature
  const double j1 = oracle::power_bernstein_kernel(0.5, 1, 1.0);
  for (double r : {0.25, 0.05, 3.0}) {
    const double expect = j1 / (oracle::power_bernstein_kernel(0.5, 1, r) * r);
    EXPECT_NEAR(sqrt_bernstein().w(r), expect, 1e-6 * expect) << r;
  }
  // φ = λ^{1/2} in d = 1 has j(r) = 1/(π r²), so w(r) = r
  EXPECT_NEAR(sqrt_bernstein().w(0.25), 0.25, 1e-6);
}

TEST(ScalingFunction, ScalingInequalityHoldsOnProbePairs) {
  for (const ScalingFunction* sf : {&sqrt_bernstein(), &mixed_bernstein()}) {
    for (double eps : log_grid(1e-3, 1e3, 25))
      for (double r : log_grid(1e-3, 1e3, 25)) EXPECT_LE(sf->w(eps * r), sf->l(eps) * sf->w(r) * (1 + 1e-12));
  }
}

TEST(ScalingFunction, LIsNondecreasingAndPiecewisePower) {
  const auto& sf = mixed_bernstein();
  double prev = 0.0;
  for (double e : log_grid(1e-4, 1e4, 81)) {
    EXPECT_GE(sf.l(e), prev);
    prev = sf.l(e);
  }
  EXPECT_NEAR(sf.l(2.0), sf.l_constant() * std::pow(2.0, sf.l_exponent_large()), 1e-14);
  EXPECT_NEAR(sf.l_exponent_large(), 2.0 * 0.5, 1e-12);
  EXPECT_NEAR(sf.l_exponent_small(), 2.0 * 0.25, 1e-12);
}

TEST(EnvelopeIndices, PowerLawExact) {
  for (double a : {0.7, 1.0}) {
    const auto e = estimate_indices(ScalingFunction::power_law(a), default_probe_grid());
    EXPECT_NEAR(e.r1, a, 1e-6);
    EXPECT_NEAR(e.r2, a, 1e-6);
  }
}

TEST(EnvelopeIndices, BernsteinWithinDeltaBounds) {
  const auto& sf = mixed_bernstein();
  const auto e = estimate_indices(sf, default_probe_grid());
  EXPECT_GE(e.r1, e.r2);
  EXPECT_LE(e.r1, 2 * 0.5 + 0.05);
  EXPECT_GE(e.r2, 2 * 0.25 - 0.05);
  for (double x : default_probe_grid()) {
    const double a = std::pow(x, e.r1), b = std::pow(x, e.r2);
    EXPECT_GE(sf.w(x), e.c0 * std::min(a, b) * (1 - 1e-12));
    EXPECT_LE(sf.w(x), e.C0 * std::max(a, b) * (1 + 1e-12));
    EXPECT_GE(sf.l(x), e.c0 / e.C0 * std::min(a, b) * (1 - 1e-12));
  }
}

TEST(EnvelopeIndices, RejectsNarrowGrid) {
  EXPECT_THROW(estimate_indices(ScalingFunction::power_law(1.0), log_grid(0.5, 2, 16)), DomainError);
}

TEST(GammaInverse, PowerLaw) {
  EXPECT_NEAR(gamma_inverse(ScalingFunction::power_law(0.8), 1.0), 1.0, 1e-12);
  EXPECT_NEAR(gamma_inverse(ScalingFunction::power_law(0.5), 2.0), 4.0, 1e-12);
}

TEST(GammaInverse, BernsteinSatisfiesLemmaBound) {
  const auto& sf = mixed_bernstein();
  const double x = 0.3;
  const double g = gamma_inverse(sf, x);
  EXPECT_GE(sf.l(g), x);
  EXPECT_LT(sf.l(g * (1 - 1e-9)), x);
  const auto& e = sf.indices();
  EXPECT_LE(g, e.C0 / e.c0 * std::max(std::pow(x, 1 / e.r1), std::pow(x, 1 / e.r2)));
}

TEST(Integrability, PowerLawVerdicts) {
  const auto sf = ScalingFunction::power_law(1.5);
  EXPECT_EQ(check_beta_integrability(sf, 0.5).verdict, Integrability::Holds);
  EXPECT_EQ(check_beta_integrability(sf, 0.8).verdict, Integrability::Fails);
  EXPECT_EQ(check_beta_integrability(sf, (1 - 1e-9) / 1.5).verdict, Integrability::Marginal);
  const auto r = check_beta_integrability(sf, 0.5);
  // ∫_0^1 t^{αβ-1} dt + ∫_1^∞ t^{αβ-2} dt = 1/(αβ) + 1/(1-αβ)
  EXPECT_NEAR(r.total(), 1 / 0.75 + 1 / 0.25, 1e-6);
  EXPECT_THROW(check_beta_integrability(sf, 0.0), DomainError);
}

TEST(HolderRegime, ThreePowerLawRegimes) {
  const auto sf = ScalingFunction::power_law(1.5);
  const double ap = estimate_alpha_prime(sf);
  EXPECT_NEAR(ap, 1.5, 1e-9);
  EXPECT_EQ(classify_holder_regime(sf, 0.5, ap), HolderRegime::ContainsLipschitz);
  EXPECT_EQ(classify_holder_regime(sf, 0.9, ap), HolderRegime::ConstantsOnly);
  EXPECT_EQ(classify_holder_regime(sf, 1 / 1.5, 1.5), HolderRegime::LipschitzExactly);
}

TEST(HolderRegime, Names) {
  EXPECT_STREQ(to_string(HolderRegime::ConstantsOnly), "ConstantsOnly");
  EXPECT_STREQ(to_string(Integrability::Marginal), "marginal");
}
