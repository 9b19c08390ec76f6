#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gensmooth/bernstein.hpp"
#include "gensmooth/numerics.hpp"

namespace gensmooth {

enum class ScalingKind { PowerLaw, BernsteinInduced, Tabulated };

struct EnvelopeIndices {
  double r1 = 0.0;  // upper envelope index
  double r2 = 0.0;  // lower envelope index
  double c0 = 0.0;
  double C0 = 0.0;
};

// A scaling function w with w(1) = 1 and its scaling factor l:
// w(εr) ≤ l(ε) w(r).
class ScalingFunction {
 public:
  static ScalingFunction power_law(double alpha);
  static ScalingFunction bernstein(std::shared_ptr<const BernsteinKernel> kernel);
  static ScalingFunction tabulated(std::vector<double> r, std::vector<double> w);

  ScalingKind kind() const { return kind_; }
  double w(double r) const;
  double l(double eps) const;

  double r1() const { return indices_.r1; }
  double r2() const { return indices_.r2; }
  const EnvelopeIndices& indices() const { return indices_; }
  // Power-law exponent (PowerLaw kind only).
  double alpha() const { return alpha_; }
  // Exponents of l below and above 1 and the prefactor.
  double l_exponent_small() const { return l_lo_; }
  double l_exponent_large() const { return l_hi_; }
  double l_constant() const { return l_c_; }
  const std::shared_ptr<const BernsteinKernel>& kernel() const { return kernel_; }
  std::string describe() const;

 private:
  ScalingFunction() = default;
  double w_raw(double r) const;
  void finish();

  ScalingKind kind_ = ScalingKind::PowerLaw;
  double alpha_ = 1.0;
  std::shared_ptr<const BernsteinKernel> kernel_;
  double j1_ = 1.0;
  MonotoneCubic table_;  // log r -> log w
  double l_lo_ = 1.0, l_hi_ = 1.0, l_c_ = 1.0;
  EnvelopeIndices indices_;
};

std::vector<double> default_probe_grid();

double eval_w(const ScalingFunction& sf, double r);
double eval_l(const ScalingFunction& sf, double eps);

EnvelopeIndices estimate_indices(const ScalingFunction& sf, const std::vector<double>& probe_grid);

double gamma_inverse(const ScalingFunction& sf, double x);

enum class Integrability { Holds, Fails, Marginal };

struct IntegrabilityReport {
  Integrability verdict = Integrability::Holds;
  double small_integral = 0.0;  // ∫_{t_min}^1 l(t)^β dt/t
  double large_integral = 0.0;  // ∫_1^{t_max} l(t)^β dt/t²
  double small_tail = 0.0;
  double large_tail = 0.0;
  double small_exponent = 0.0;
  double large_exponent = 0.0;
  double total() const { return small_integral + large_integral + small_tail + large_tail; }
};

IntegrabilityReport check_beta_integrability(const ScalingFunction& sf, double beta);

enum class HolderRegime { Nontrivial, ContainsLipschitz, LipschitzExactly, ConstantsOnly };
const char* to_string(HolderRegime r);
const char* to_string(Integrability v);

// Grid estimate of α' = inf{σ : r^σ / w(r) → 0 as r → 0}.
double estimate_alpha_prime(const ScalingFunction& sf, double r_min = 1e-8);

HolderRegime classify_holder_regime(const ScalingFunction& sf, double beta, double alpha_prime);

}  // namespace gensmooth
