#pragma once

#include <string>
#include <vector>

#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"
#include "gensmooth/symbol.hpp"

namespace gensmooth {

enum class OperatorForm { Generator, FractionalPower, ResolventPower };

struct OperatorSpec {
  std::string model_id;
  double kappa = 1.0;
  double a = 0.0;
  OperatorForm form = OperatorForm::Generator;
  int sign = 1;
};

// ℱ^{-1}[ψ ℱu]
GridFunction apply_generator(const GridFunction& u, const SymbolGrid& g);

// κ ≤ 1: multiplier ψ^{ν,κ}. κ ∈ (1,2): two κ/2 steps, sign-corrected so the
// composite multiplier is −(−Re ψ)^κ.
GridFunction apply_fractional(const GridFunction& u, const SymbolGrid& g, double kappa);

// (a − Re ψ)^{sign·κ}; κ = 1 uses the full symbol, (a − ψ)^{sign}.
GridFunction apply_resolvent_power(const GridFunction& u, const SymbolGrid& g, double a, double kappa, int sign);
std::vector<cplx> resolvent_multiplier(const SymbolGrid& g, double a, double kappa, int sign);
std::vector<cplx> fractional_multiplier(const SymbolGrid& g, double kappa);

GridFunction apply(const GridFunction& u, const SymbolGrid& g, const OperatorSpec& op);

struct QuadratureOptions {
  double taylor_scale = 1e-3;   // inner radius r_T = taylor_scale / k_max
  double panels_per_decade = 8.0;
};

// Direct radial-angular quadrature of ∫[u(x+y) − u(x) − χ(|y|) y·∇u(x)] ν(dy)
// for a band-limited u given by its spectral interpolant.
cplx generator_quadrature(const SpectralInterpolant& u, const LevyModel& model, const std::array<double, 2>& x,
                          const QuadratureOptions& opt = {});
cplx generator_quadrature(const GridFunction& u, const LevyModel& model, std::size_t lattice_index,
                          const QuadratureOptions& opt = {});

enum class Subordination { Fractional, Resolvent };
// Fractional: ∫₀^∞ t^{−κ−1}(1 − e^{−t}) dt.  Resolvent: ∫₀^∞ t^{κ−1} e^{−t} dt.
double subordination_constant(double kappa, Subordination which);
// Γ(1−κ)/κ and Γ(κ).
double subordination_gamma(double kappa, Subordination which);

}  // namespace gensmooth
