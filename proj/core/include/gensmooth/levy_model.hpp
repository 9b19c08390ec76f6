#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gensmooth/bernstein.hpp"
#include "gensmooth/scaling.hpp"

namespace gensmooth {

// ρ(r) ≈ coef · r^{-1-exponent} outside the tabulated range.
struct PowerTail {
  double coef = 0.0;
  double exponent = 0.0;
};

constexpr double kRadialMin = 1e-8;
constexpr double kRadialMax = 1e8;

// Radial factor ρ(r) of ν(dy) = ρ(r) dr Σ(dθ); includes the r^{d-1} Jacobian.
class RadialDensity {
 public:
  virtual ~RadialDensity() = default;
  virtual double operator()(double r) const = 0;
  virtual PowerTail near_zero() const = 0;
  virtual PowerTail near_infinity() const = 0;
  virtual std::string describe() const = 0;
};

class PowerLawRadial final : public RadialDensity {
 public:
  explicit PowerLawRadial(double alpha) : alpha_(alpha) {}
  double operator()(double r) const override;
  PowerTail near_zero() const override { return {1.0, alpha_}; }
  PowerTail near_infinity() const override { return {1.0, alpha_}; }
  std::string describe() const override;

 private:
  double alpha_;
};

class BernsteinRadial final : public RadialDensity {
 public:
  explicit BernsteinRadial(std::shared_ptr<const BernsteinKernel> kernel);
  double operator()(double r) const override;
  PowerTail near_zero() const override { return zero_; }
  PowerTail near_infinity() const override { return inf_; }
  std::string describe() const override;
  const BernsteinKernel& kernel() const { return *kernel_; }

 private:
  std::shared_ptr<const BernsteinKernel> kernel_;
  PowerTail zero_, inf_;
};

class TableRadial final : public RadialDensity {
 public:
  TableRadial(std::vector<double> r, std::vector<double> density);
  double operator()(double r) const override;
  PowerTail near_zero() const override { return zero_; }
  PowerTail near_infinity() const override { return inf_; }
  std::string describe() const override;

 private:
  std::vector<double> r_, d_;
  MonotoneCubic table_;
  PowerTail zero_, inf_;
};

// Discrete angular measure on S^{d-1}: two points in d=1, K uniform angles in d=2.
struct AngularMeasure {
  std::vector<std::array<double, 2>> directions;
  std::vector<double> weights;

  static AngularMeasure two_point(double w_plus, double w_minus);
  // σ sampled at θ_k = 2πk/K, trapezoid weights σ_k·2π/K.
  static AngularMeasure circle(const std::vector<double>& sigma);
  static AngularMeasure uniform_circle(int K);
  double total() const;
};

enum class DensityKind { StableLike, Bernstein, Tabulated };
const char* to_string(DensityKind k);

struct MomentExponents {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
};

// ν(B) = intensity · ν_base(dilation · B), with ν_base(dy) = ρ(r) dr Σ(dθ).
class LevyModel {
 public:
  int dim() const { return dim_; }
  double order() const { return alpha_; }
  DensityKind kind() const { return kind_; }
  const AngularMeasure& angular() const { return angular_; }
  const RadialDensity& radial() const { return *radial_; }
  double dilation() const { return dilation_; }
  double intensity() const { return intensity_; }
  const MomentExponents& moments() const { return moments_; }
  const std::shared_ptr<const ScalingFunction>& scaling() const { return sf_; }
  const std::shared_ptr<const BernsteinKernel>& kernel() const { return kernel_; }
  std::string label() const;
  std::string hash() const;

  // Radial density of this (possibly dilated) measure.
  double rho(double r) const;
  PowerTail tail_zero() const;
  PowerTail tail_infinity() const;
  // Compensator cutoff χ_α(|y|).
  double chi(double r) const;
  bool chi_is_constant() const { return alpha_ != 1.0; }
  bool symmetric() const;
  // ν̃_R = wR · ν(R ·).
  LevyModel scaled(double R, double wR) const;
  LevyModel with_moments(MomentExponents m) const;
  LevyModel with_scaling(std::shared_ptr<const ScalingFunction> sf) const;
  LevyModel with_angular(AngularMeasure a) const;
  // Closed-form symbol available (pure stable, or Bernstein with Lebesgue angular part).
  bool has_closed_form() const;

  friend LevyModel make_stable(int, double, AngularMeasure);
  friend LevyModel make_bernstein(const BernsteinPhi&, int, int);
  friend LevyModel make_tabulated(int, double, std::vector<double>, std::vector<double>, AngularMeasure);

 private:
  int dim_ = 1;
  double alpha_ = 1.0;
  DensityKind kind_ = DensityKind::StableLike;
  std::shared_ptr<const RadialDensity> radial_;
  AngularMeasure angular_;
  double dilation_ = 1.0;
  double intensity_ = 1.0;
  bool lebesgue_angular_ = false;
  MomentExponents moments_;
  std::shared_ptr<const ScalingFunction> sf_;
  std::shared_ptr<const BernsteinKernel> kernel_;
};

// ν = r^{-1-α} dr Σ(dθ); in d=1 with weights (1,1) this is |y|^{-1-α}dy.
LevyModel make_stable(int dim, double alpha, AngularMeasure angular);
// ν(dy) = j(|y|) dy with j subordinated from φ; K angles in d=2.
LevyModel make_bernstein(const BernsteinPhi& phi, int dim, int angles = 64);
LevyModel make_tabulated(int dim, double alpha, std::vector<double> r, std::vector<double> density,
                         AngularMeasure angular);

MomentExponents default_moments(double order, double lower_index);

double tail_mass(const LevyModel& model, double r, double panels_per_decade = 4.0);
// ∫_a^b f(r) ρ(r) dr summed over angular weights, with analytic power-law
// contributions below kRadialMin and above kRadialMax.
double radial_power_integral(const LevyModel& model, double power, double a, double b,
                             double panels_per_decade = 4.0);
// ∫ (1 ∧ |y|²) ν(dy)
double levy_mass(const LevyModel& model);

struct ScaledMoments {
  double I1 = 0.0;
  double I2 = 0.0;
  bool small_divergent = false;
  bool large_divergent = false;
};
ScaledMoments scaled_moments(const LevyModel& model, double R);

struct AssumptionGrids {
  std::vector<double> R = log_grid(1e-3, 1e3, 25);
  std::vector<double> r = log_grid(1e-3, 1e3, 25);
  int directions = 64;
  double c0_threshold = 1e-8;
  double shell_tolerance = 1e-10;
  double moment_ratio_bound = 1e3;
  double tail_bound = 1e3;
};

struct AssumptionReport {
  double directional_c0 = 0.0;
  double moment_N0 = 0.0;
  double moment_min = 0.0;
  double tail_C0 = 0.0;
  double alpha1_symmetry_residual = 0.0;
  bool clause_i = false;  // proxy-verified
  bool clause_ii = true;
  bool clause_iii = false;
  bool clause_iv = false;
  bool clause_ii_applicable = false;
  std::string notes;
  bool all_pass() const { return clause_i && clause_ii && clause_iii && clause_iv; }
};

AssumptionReport check_assumption_A(const LevyModel& model, const ScalingFunction& sf,
                                    const AssumptionGrids& grids = {});

// Directional second moment min_ξ ∫_{|y|≤1} |ξ·y|² ν(dy).
double directional_second_moment(const LevyModel& model, int directions);
// max over shells of |∫_{r<|y|<R} y ν(dy)| / ∫_{r<|y|<R} |y| ν(dy)
double shell_mean_residual(const LevyModel& model);

struct OrderEstimate {
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  bool converged = true;
  double sf_index = 0.0;
  bool consistent = true;
};
OrderEstimate order_estimate(const LevyModel& model, const ScalingFunction& sf, double tol = 0.05);

LevyModel symmetrize(const LevyModel& model);

// ∫_{r_min<|y|≤1} g(|y|) ν(dy)
double small_ball_integral(const LevyModel& model, const std::function<double(double)>& g, double r_min,
                           double panels_per_decade = 8.0);

// min and max of ς(r) w(r) over the grid.
struct TailScalingBounds {
  double lo = 0.0;
  double hi = 0.0;
};
TailScalingBounds tail_scaling_bounds(const LevyModel& model, const ScalingFunction& sf,
                                      const std::vector<double>& grid);

}  // namespace gensmooth
