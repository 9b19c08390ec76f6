#include <gtest/gtest.h>

#include <cmath>

#include "gensmooth/errors.hpp"
#include "gensmooth/levy_model.hpp"

using namespace gensmooth;

namespace {

LevyModel stable1(double alpha, double wp = 1.0, double wm = 1.0) {
  return make_stable(1, alpha, AngularMeasure::two_point(wp, wm));
}

const LevyModel& mixed_bernstein() {
  static const LevyModel m = make_bernstein(BernsteinPhi(2, {0.5, 0.5}), 1);
  return m;
}

}  // namespace

TEST(BernsteinPhi, ReferenceValues) {
  EXPECT_DOUBLE_EQ(BernsteinPhi(1, {0.5})(4.0), 2.0);
  EXPECT_DOUBLE_EQ(BernsteinPhi(4, {0.5})(0.0), 0.0);
  EXPECT_NEAR(BernsteinPhi(2, {0.5, 0.5})(1.0), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(BernsteinPhi(3, {0.4, 0.3})(2.0), std::pow(2.0, 0.4) * std::pow(std::log(3.0), 0.3), 1e-14);
}

TEST(BernsteinPhi, NondecreasingWithRatioBound) {
  for (const BernsteinPhi& phi : {BernsteinPhi(1, {0.3, 0.8}), BernsteinPhi(2, {0.5, 0.5}),
                                  BernsteinPhi(3, {0.4, 0.3}), BernsteinPhi(4, {0.6})}) {
    EXPECT_EQ(phi(0.0), 0.0);
    const auto g = log_grid(1e-4, 1e4, 33);
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i > 0) {
        EXPECT_GE(phi(g[i]), phi(g[i - 1]));
      }
      for (std::size_t k = i + 1; k < g.size(); ++k) {
        const double q = phi(g[k]) / phi(g[i]);
        lo = std::min(lo, q / std::pow(g[k] / g[i], phi.delta1()));
        hi = std::max(hi, q / std::pow(g[k] / g[i], phi.delta2()));
      }
    }
    // C^{-1}(R/r)^{δ1} ≤ φ(R)/φ(r) ≤ C(R/r)^{δ2} with a moderate C
    EXPECT_GT(lo, 0.1) << phi.kind();
    EXPECT_LT(hi, 10.0) << phi.kind();
  }
}

TEST(TailMass, SymmetricStableClosedForm) {
  for (double a : {0.5, 1.0, 1.5})
    for (double r : {1e-3, 0.7, 1.0, 25.0}) {
      const double expect = 2.0 / a * std::pow(r, -a);
      EXPECT_NEAR(tail_mass(stable1(a), r), expect, 1e-9 * expect);
    }
}

TEST(TailMass, NegligibleBeyondTruncation) { EXPECT_LE(tail_mass(stable1(1.5), 1e9), 1e-12); }

TEST(TailMass, BernsteinTwoResolutionsAgree) {
  const double a = tail_mass(mixed_bernstein(), 1.0, 4.0);
  const double b = tail_mass(mixed_bernstein(), 1.0, 16.0);
  EXPECT_NEAR(a, b, 1e-6 * b);
}

TEST(TailMass, RejectsBadRadius) { EXPECT_THROW(tail_mass(stable1(1.0), 0.0), DomainError); }

TEST(ScaledMoments, StableIsScaleInvariant) {
  for (double a : {0.5, 1.5}) {
    const LevyModel m = stable1(a);
    const auto& e = m.moments();
    for (double R : {1e-3, 0.1, 1.0, 7.0, 1e3}) {
      const auto s = scaled_moments(m, R);
      EXPECT_NEAR(s.I1, 2 / (e.alpha1 - a), 1e-12 * s.I1 + 1e-9) << R;
      EXPECT_NEAR(s.I2, 2 / (a - e.alpha2), 1e-12 * s.I2 + 1e-9) << R;
    }
  }
}

TEST(ScaledMoments, UnitScaleIsIdentity) {
  const LevyModel& m = mixed_bernstein();
  const auto s = scaled_moments(m, 1.0);
  EXPECT_NEAR(s.I1, radial_power_integral(m, m.moments().alpha1, 0.0, 1.0, 8.0), 1e-13 * s.I1);
}

TEST(ScaledMoments, BernsteinBoundedOverFourDecades) {
  double lo = 1e300, hi = 0.0;
  for (double R : log_grid(1e-2, 1e2, 17)) {
    const auto s = scaled_moments(mixed_bernstein(), R);
    lo = std::min(lo, s.I1 + s.I2);
    hi = std::max(hi, s.I1 + s.I2);
  }
  EXPECT_LE(hi / lo, 10.0);
}

TEST(AssumptionA, StableLikePassesAllClauses) {
  for (double a : {0.5, 1.0, 1.5}) {
    const LevyModel m = stable1(a);
    const auto rep = check_assumption_A(m, *m.scaling());
    EXPECT_TRUE(rep.all_pass()) << a << " " << rep.notes;
    EXPECT_TRUE(std::isfinite(rep.moment_N0));
    EXPECT_NEAR(rep.tail_C0, 1.0 / (2.0 - a), 1e-6);
  }
  const LevyModel m2 = make_stable(2, 1.2, AngularMeasure::uniform_circle(32));
  EXPECT_TRUE(check_assumption_A(m2, *m2.scaling()).all_pass());
}

TEST(AssumptionA, SymmetricOrderOneShellResidual) {
  const auto rep = check_assumption_A(stable1(1.0), ScalingFunction::power_law(1.0));
  EXPECT_TRUE(rep.clause_ii_applicable);
  EXPECT_LE(rep.alpha1_symmetry_residual, 1e-10);
}

TEST(AssumptionA, AsymmetricOrderOneFailsClauseTwo) {
  const LevyModel m = stable1(1.0, 1.0, 0.5);
  const auto rep = check_assumption_A(m, *m.scaling());
  EXPECT_FALSE(rep.clause_ii);
  EXPECT_NEAR(rep.alpha1_symmetry_residual, 0.5 / 1.5, 1e-14);
  EXPECT_NE(rep.notes.find("clause (ii)"), std::string::npos);
}

TEST(AssumptionA, BernsteinPassesMomentAndTailClauses) {
  const LevyModel& m = mixed_bernstein();
  const auto rep = check_assumption_A(m, *m.scaling());
  EXPECT_TRUE(rep.clause_iii) << rep.notes;
  EXPECT_TRUE(rep.clause_iv);
  EXPECT_TRUE(std::isfinite(rep.tail_C0));
}

TEST(OrderEstimate, StableAndBernstein) {
  const LevyModel s = stable1(1.5);
  const auto e = order_estimate(s, *s.scaling());
  EXPECT_NEAR(e.value, 1.5, 1e-3);
  EXPECT_TRUE(e.consistent);
  const LevyModel b = make_bernstein(BernsteinPhi(1, {0.5}), 1);
  const auto eb = order_estimate(b, *b.scaling());
  EXPECT_NEAR(eb.value, 1.0, 0.05);
}

TEST(OrderEstimate, FlagsScalingMismatch) {
  const auto e = order_estimate(stable1(1.5), ScalingFunction::power_law(1.0));
  EXPECT_FALSE(e.consistent);
}

TEST(Symmetrize, IdempotentAndHalvesOneSided) {
  const LevyModel one_sided = stable1(0.7, 1.0, 0.0);
  const LevyModel s = symmetrize(one_sided);
  EXPECT_TRUE(s.symmetric());
  EXPECT_DOUBLE_EQ(s.angular().weights[0], 0.5);
  EXPECT_DOUBLE_EQ(s.angular().weights[1], 0.5);
  EXPECT_EQ(symmetrize(s).hash(), s.hash());
  const LevyModel sym = stable1(0.7);
  EXPECT_EQ(symmetrize(sym).hash(), sym.hash());
}

TEST(Symmetrize, CircleTableAveragesAntipodes) {
  std::vector<double> sigma(16);
  for (int k = 0; k < 16; ++k) sigma[k] = 1.0 + 0.5 * std::cos(2 * M_PI * k / 16) + 0.2 * (k % 3);
  const LevyModel m = make_stable(2, 1.2, AngularMeasure::circle(sigma));
  const LevyModel s = symmetrize(m);
  const auto& w = m.angular().weights;
  for (int k = 0; k < 16; ++k)
    EXPECT_NEAR(s.angular().weights[k], 0.5 * (w[k] + w[(k + 8) % 16]), 1e-15);
  EXPECT_TRUE(s.symmetric());
}

TEST(TailScaling, BoundedProductWithScalingFunction) {
  const auto g = log_grid(1e-4, 1e4, 33);
  const LevyModel s = stable1(1.5);
  const auto bs = tail_scaling_bounds(s, *s.scaling(), g);
  EXPECT_NEAR(bs.hi / bs.lo, 1.0, 1e-9);
  const auto bb = tail_scaling_bounds(mixed_bernstein(), *mixed_bernstein().scaling(), g);
  EXPECT_LE(bb.hi / bb.lo, 1e3);
  // ς nonincreasing
  double prev = 1e300;
  for (double r : g) {
    const double v = tail_mass(mixed_bernstein(), r);
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(SmallBallIntegrals, ConvergeUnderRefinement) {
  for (double eps : {0.1, 0.5}) {
    const LevyModel s = stable1(0.5);
    const auto& sf = *s.scaling();
    const double rmin = 1e-10;
    auto g = [&](double r) { return std::pow(sf.w(r), 1 + eps); };
    // 2∫_{rmin}^1 r^{αε−1} dr
    const double expect = 2 * (1 - std::pow(rmin, 0.5 * eps)) / (0.5 * eps);
    EXPECT_NEAR(small_ball_integral(s, g, rmin), expect, 1e-4 * expect);

    const LevyModel& b = mixed_bernstein();
    const auto& bf = *b.scaling();
    auto h = [&](double r) { return std::pow(r, eps) * bf.w(r); };
    const double c8 = small_ball_integral(b, h, rmin, 8.0), c16 = small_ball_integral(b, h, rmin, 16.0);
    EXPECT_NEAR(c8, c16, 1e-4 * c16);
    EXPECT_TRUE(std::isfinite(c16));
  }
}

TEST(LevyModel, ConstructionErrors) {
  EXPECT_THROW(make_stable(1, 2.0, AngularMeasure::two_point(1, 1)), DomainError);
  EXPECT_THROW(make_stable(3, 1.0, AngularMeasure::two_point(1, 1)), DomainError);
  EXPECT_THROW(AngularMeasure::two_point(0, 0), DomainError);
}
