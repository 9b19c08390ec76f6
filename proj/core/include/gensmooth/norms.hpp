#pragma once

#include <cstddef>
#include <vector>

#include "gensmooth/bank.hpp"
#include "gensmooth/scaling.hpp"

namespace gensmooth {

// sup_j w(N^{-j})^{-β} |u∗φ_j|₀
double besov_norm(const GridFunction& u, const DyadicBank& bank, const ScalingFunction& sf, double beta);
double besov_norm_from_bands(const std::vector<double>& band_sup, const DyadicBank& bank, const ScalingFunction& sf,
                             double beta);

struct HolderNorm {
  double value = 0.0;     // |u|₀ + seminorm
  double sup = 0.0;       // |u|₀
  double seminorm = 0.0;  // max_h |u(·+h) − u|₀ / w(|h|)^β
  double worst_shift = 0.0;
  std::size_t shifts = 0;
  HolderRegime regime = HolderRegime::Nontrivial;
  // False when β lies in the constants-only regime: the value then grows with refinement.
  bool converged = true;
};

// Shifts are lattice vectors with |h| ≤ Λ/2; in d=2 at most max_shifts of them,
// the shortest half exhaustively and the rest strided.
HolderNorm holder_norm(const GridFunction& u, const ScalingFunction& sf, double beta,
                       std::size_t max_shifts = 10000);

// C(β) = Σ_j w(N^{-j})^β, so that |u|₀ ≤ Σ_j |u∗φ_j|₀ ≤ C(β)|u|_{β,∞}.
double reconstruction_constant(const DyadicBank& bank, const ScalingFunction& sf, double beta);

struct InterpolationResult {
  double lhs = 0.0;    // |u|_{β',∞}
  double rhs = 0.0;    // ε|u|_{β,∞} + C_ε|u|₀
  double C_eps = 0.0;
  double slack = 0.0;  // rhs − lhs
  bool pass = true;
};

// |u|_{β',∞} ≤ ε|u|_{β,∞} + C_ε|u|₀ with C_ε from Young's inequality with
// exponents β/β' and β/(β−β') and the bank's kernel ℓ¹ norms.
InterpolationResult interpolation_check(const GridFunction& u, const DyadicBank& bank, const ScalingFunction& sf,
                                        double beta_lo, double beta_hi, double eps);

}  // namespace gensmooth
