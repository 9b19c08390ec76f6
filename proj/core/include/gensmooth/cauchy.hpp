#pragma once

#include <string>
#include <vector>

#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"
#include "gensmooth/probabilistic.hpp"
#include "gensmooth/symbol.hpp"

namespace gensmooth {

// Forcing sampled at the K+1 time nodes, or a single time-constant field.
class Forcing {
 public:
  static Forcing constant(GridFunction f);
  static Forcing nodes(std::vector<GridFunction> f);

  bool is_constant() const { return values_.size() == 1; }
  const GridFunction& at(std::size_t k) const { return values_[is_constant() ? 0 : k]; }
  std::size_t node_count() const { return values_.size(); }
  const Lattice& lattice() const { return values_.front().lattice(); }
  const std::vector<GridFunction>& values() const { return values_; }

 private:
  std::vector<GridFunction> values_;
};

struct SolveResult {
  std::vector<double> times;
  std::vector<GridFunction> u;  // one per stored node, u[0] ≡ 0
  double lambda = 0.0;
  double T = 0.0;
  int K = 0;
  int stride = 1;
  std::string model_id;
  std::size_t clamped = 0;  // multipliers replaced by 0 after overflow
};

// Exponential integrator for ∂_t u = L u − λu + f, u(0) = 0, f linear in time on each step.
SolveResult solve_spectral(const Forcing& f, const SymbolGrid& g, double lambda, double T, int K, int stride = 1);
// Continue from an attained state u0 (used for restart consistency checks).
SolveResult solve_spectral_from(const GridFunction& u0, const Forcing& f, const SymbolGrid& g, double lambda,
                                double T, int K, int stride = 1);

// u(T, x_p) = ∫₀^T e^{−λσ} E f(T−σ, x_p + Z_σ) dσ with uniform σ panels.
McEstimate solve_mc(const Forcing& f, const LevyModel& model, double lambda, double T,
                    const std::vector<std::array<double, 2>>& probes, const McOptions& mc, int sigma_panels = 64);

// sup-norms of (u_{k+1} − u_{k−1})/(2Δt) − (L u_k − λ u_k + f_k) at interior nodes.
std::vector<double> residual(const SolveResult& r, const Forcing& f, const SymbolGrid& g);

// (λ − ψ)^{-1} f̂
GridFunction steady_state(const GridFunction& f, const SymbolGrid& g, double lambda);

}  // namespace gensmooth
