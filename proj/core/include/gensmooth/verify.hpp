#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gensmooth/bank.hpp"
#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"
#include "gensmooth/probabilistic.hpp"
#include "gensmooth/report.hpp"
#include "gensmooth/scaling.hpp"
#include "gensmooth/symbol.hpp"

namespace gensmooth {

// Real trigonometric polynomial Σ 2 Re(c e^{i2πξ·x}) with ξ = mode/Λ; a zero
// mode contributes Re c. Sampling on any lattice with the same box gives the
// same function, which is what refinement sweeps rely on.
struct TrigTerm {
  std::array<int, 2> mode{0, 0};
  cplx coef = 0.0;
};

struct TrigFunction {
  std::vector<TrigTerm> terms;
  GridFunction sample(const Lattice& lat) const;
  TrigFunction scaled(double s) const;
};

// count members cycling through bands 0..J−2, three random terms each, with
// J the bank's J_max or the smaller cap j_max when positive.
std::vector<TrigFunction> make_family(const DyadicBank& bank, int count, std::uint64_t seed, int j_max = 0);

struct RegularityConstants {
  double est5 = 0.0;  // sup |u(t)|_{β,∞} / ((λ^{-1} ∧ T)|f|_{β,∞})
  double est1 = 0.0;  // sup |u(t)|_{1+β,∞} / |f|_{β,∞}
  std::size_t used = 0;
};

RegularityConstants regularity_constants(const LevyModel& model, const ScalingFunction& sf,
                                         const std::vector<TrigFunction>& family, const Lattice& lattice, double N,
                                         double beta, double lambda, double T, int K, int stride = 16);

EstimateRecord verify_regularity(const LevyModel& model, const ScalingFunction& sf,
                                 const std::vector<TrigFunction>& family, const Lattice& lattice, double N, double beta,
                                 double lambda, double T, int K, double refinement_tol = 0.25);

struct TimeRegularity {
  double kappa = 0.0;
  std::vector<double> gaps, sup_ratio;  // sup_f |u(T)−u(T−g)|_{κ+β,∞}/|f|_{β,∞}
  std::vector<bool> used;
  double slope = 0.0;
  double constant = 0.0;  // sup_g sup_ratio / g^{1−κ}
};

TimeRegularity time_regularity(const LevyModel& model, const ScalingFunction& sf,
                               const std::vector<TrigFunction>& family, const Lattice& lattice, double N, double beta,
                               double kappa, double lambda, double T, int K);

std::vector<EstimateRecord> verify_time_regularity(const LevyModel& model, const ScalingFunction& sf,
                                                   const std::vector<TrigFunction>& family, const Lattice& lattice,
                                                   double N, double beta, const std::vector<double>& kappas,
                                                   double lambda, double T, int K);

// H_t^{j,κ} = ℱ^{-1}[exp(ψ^{ν̃}(ξ)t) m_κ(ξ) ℱφ̃(ξ)] with ν̃, μ̃ the measures
// rescaled by R = N^{-j}, m_κ the order-κ multiplier of μ̃ and
// ℱφ̃(ξ) = φ(Nξ) + φ(ξ) + φ(ξ/N).
class KernelFamily {
 public:
  KernelFamily(const LevyModel& model, const LevyModel& reference, const ScalingFunction& sf, double N, int j,
               double kappa, const Lattice& kernel_lattice);
  GridFunction at(double t) const;
  // Lattice L¹ norm Σ|H(x_k)|Δx.
  double l1(double t) const;
  double l1_difference(double t, double s) const;

 private:
  Lattice lat_;
  std::vector<cplx> psi_, base_;
};

struct KernelDecay {
  int j = 0;
  double kappa = 0.0;
  std::vector<double> times, l1;
  double C1 = 0.0, C2 = 0.0, r2 = 0.0;
  bool fitted = false;
};

KernelDecay kernel_l1_decay(const LevyModel& model, const LevyModel& reference, const ScalingFunction& sf, double N,
                            int j, double kappa, const std::vector<double>& times, const Lattice& kernel_lattice);

struct KernelLipschitz {
  double constant = 0.0;      // max ∫|H_t − H_s| / (e^{−C₂s}(t−s)) over the pairs
  double gap_exponent = 0.0;  // slope of log ∫|H_{s+g} − H_s| against log g, s fixed
  double s_decay = 0.0;       // decay rate in s at a fixed gap
  Series series;
};

KernelLipschitz kernel_time_lipschitz(const LevyModel& model, const LevyModel& reference, const ScalingFunction& sf,
                                      double N, int j, double kappa,
                                      const std::vector<std::array<double, 2>>& pairs, double C2,
                                      const Lattice& kernel_lattice);

// The five norms of one function at one (β, κ).
struct NormSet {
  double holder = 0.0;         // |u|_β
  double besov = 0.0;          // |u|_{β,∞}
  double operator_norm = 0.0;  // |u|₀ + |L^{ν,κ}u|_{β,∞}
  double resolvent_norm = 0.0; // |(I − L^ν)^κ u|_{β,∞}
  double besov_shift = 0.0;    // |u|_{κ+β,∞}
  double operator_part = 0.0;  // |L^{ν,κ}u|_{β,∞}
};

NormSet norm_set(const GridFunction& u, const SymbolGrid& g, const DyadicBank& bank, const ScalingFunction& sf,
                 double beta, double kappa);

std::vector<EstimateRecord> norm_equivalence_report(const LevyModel& model, const ScalingFunction& sf, double beta,
                                                    const std::vector<double>& kappas,
                                                    const std::vector<TrigFunction>& family, const Lattice& lattice,
                                                    double N, double ratio_bound = 1e3,
                                                    double refinement_tol = 0.25);

EstimateRecord operator_bound_report(const LevyModel& model, const ScalingFunction& sf, double beta, double kappa,
                                     const std::vector<TrigFunction>& family, const Lattice& lattice, double N,
                                     double refinement_tol = 0.25);

struct SuiteOptions {
  Lattice lattice = default_lattice(1);
  Lattice kernel_lattice{1, 64.0, 4096};
  double N = 4.0;
  int j_max = 0;  // optional cap on the bands used by the family and kernel checks
  double beta = 0.5;
  double lambda = 1.0;
  double T = 1.0;
  int K = 256;
  std::vector<double> kappas{0.0, 0.5, 1.0};
  std::vector<int> kernel_j{1, 2, 3};
  std::vector<double> kernel_times{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  double r2_min = 0.98;
  int family_size = 20;
  std::uint64_t family_seed = 7;
  double ratio_bound = 1e3;
  double refinement_tol = 0.25;
  McOptions mc{};
  int probes = 16;
  std::vector<std::string> checks;  // empty: all
};

const std::vector<std::string>& suite_checks();
Lattice default_kernel_lattice(int dim);

// Runs the named checks for operator model ν, reference model μ and scaling w.
EstimateReport run_suite(const LevyModel& model, const LevyModel& reference, const ScalingFunction& sf,
                         const SuiteOptions& opt);

}  // namespace gensmooth
