#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"

namespace gensmooth {

struct McOptions {
  std::size_t paths = 100000;
  std::uint64_t seed = 20240601;
  double eps = 1e-2;
  double t_min = 1e-6;
  double t_max = 50.0;
  double panels_per_decade = 3.0;
};

struct McEstimate {
  std::vector<std::array<double, 2>> probes;
  std::vector<cplx> mean;
  std::vector<double> stderr_re, stderr_im;
  std::size_t paths = 0;
  // max over probes and components of |mean − ref| / stderr
  double max_sigma(const std::vector<cplx>& reference) const;
  double mean_stderr() const;
};

// C ∫₀^∞ t^{−1−κ} E[u(x+Z_t) − u(x)] dt over the symmetrized model; κ ∈ (0,1).
McEstimate probabilistic_fractional(const GridFunction& u, const LevyModel& model, double kappa,
                                    const std::vector<std::array<double, 2>>& probes, const McOptions& mc);
// C' ∫₀^∞ t^{κ−1} e^{−at} E u(x+Z_t) dt over the symmetrized model; κ ∈ (0,1).
McEstimate probabilistic_resolvent_power(const GridFunction& u, const LevyModel& model, double a, double kappa,
                                         const std::vector<std::array<double, 2>>& probes, const McOptions& mc);
// ∫₀^∞ e^{−at} E u(x+Z_t) dt over the model itself.
McEstimate resolvent_via_expectation(const GridFunction& u, const LevyModel& model, double a,
                                     const std::vector<std::array<double, 2>>& probes, const McOptions& mc);

// Gauss-Legendre nodes on log panels of [a, b] with weights for dt.
struct TimeRule {
  std::vector<double> t, w;
};
TimeRule log_time_rule(double a, double b, double panels_per_decade);

}  // namespace gensmooth
