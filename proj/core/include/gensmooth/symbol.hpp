#pragma once

#include <string>
#include <vector>

#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"

namespace gensmooth {

enum class SymbolMethod { Auto, ClosedForm, Quadrature };

// ψ(ξ) = ∫[e^{i2πξ·y} − 1 − i2πχ(|y|)ξ·y] ν(dy), Fourier kernel e^{−i2πx·ξ}.
struct SymbolGrid {
  Lattice lattice;
  std::vector<cplx> values;  // per flat spectral index
  std::string model_id;
};

// Per unit angular weight, along a direction with k = 2π|ξ·θ|:
//   A(k) = ∫(cos kr − 1) ρ(r) dr,  B(k) = ∫(sin kr − χ(r) k r) ρ(r) dr.
struct RadialSymbol {
  double A = 0.0;
  double B = 0.0;
};
RadialSymbol radial_symbol_quadrature(const LevyModel& model, double k);
// Pure power-law radial part only.
RadialSymbol radial_symbol_closed(const LevyModel& model, double k);

// ∫_0^∞ (1 − cos u) u^{−1−α} du
double stable_constant(double alpha);
// ∫_0^∞ (sin u − χ u) u^{−1−α} du, and 1 − γ at α = 1.
double stable_odd_constant(double alpha);

cplx symbol(const LevyModel& model, const std::array<double, 2>& xi, SymbolMethod method = SymbolMethod::Auto);
SymbolGrid make_symbol_grid(const LevyModel& model, const Lattice& lattice,
                            SymbolMethod method = SymbolMethod::Auto);

// 1 for κ=0, ψ for κ=1, −(−Re ψ)^κ otherwise.
SymbolGrid fractional_symbol(const SymbolGrid& g, double kappa);
// (a − Re ψ)^{sign·κ}
SymbolGrid resolvent_symbol(const SymbolGrid& g, double a, double kappa, int sign);

struct SymbolBounds {
  double c = 0.0;
  double C = 0.0;
  double ratio() const { return C / c; }
};
// min and max of (−Re ψ(ξ)) w(1/|ξ|) over nonzero lattice frequencies.
SymbolBounds check_symbol_bounds(const SymbolGrid& g, const ScalingFunction& sf);

// max relative gap of ψ(ξ) against w(R)^{-1} ψ^{ν̃_R}(Rξ), R = N^{-j}.
double symbol_scaling_residual(const LevyModel& model, const ScalingFunction& sf, double N, int j,
                               const std::vector<std::array<double, 2>>& xis,
                               SymbolMethod method = SymbolMethod::Quadrature);

// Case-split moment sup_R ∫ m_α(|y|) ν̃_R(dy) used for the upper symbol bound:
// |y|∧1 for α<1, |y|²∧1 for α=1, |y|²∧|y| for α>1.
struct AppendixMoments {
  double N2 = 0.0;
  double min = 0.0;
  std::string weight;
};
AppendixMoments appendix_moments(const LevyModel& model, const ScalingFunction& sf, const std::vector<double>& R);

std::vector<double> real_part(const SymbolGrid& g);

}  // namespace gensmooth
