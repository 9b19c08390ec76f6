#include "gensmooth/probabilistic.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gensmooth/errors.hpp"
#include "gensmooth/operators.hpp"
#include "gensmooth/sampling.hpp"
#include "gensmooth/symbol.hpp"

namespace gensmooth {

TimeRule log_time_rule(double a, double b, double ppd) {
  TimeRule r;
  const GaussRule& g = gauss8();
  const double la = std::log(a), lb = std::log(b);
  const int panels = std::max(1, static_cast<int>(std::ceil((lb - la) / std::log(10.0) * ppd)));
  const double h = (lb - la) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = la + (p + 0.5) * h;
    for (int i = 0; i < 8; ++i) {
      const double t = std::exp(c + 0.5 * h * g.x[i]);
      r.t.push_back(t);
      r.w.push_back(0.5 * h * g.w[i] * t);
    }
  }
  return r;
}

double McEstimate::max_sigma(const std::vector<cplx>& ref) const {
  // Differences at rounding level are not statistical.
  auto ratio = [](double d, double se, double scale) {
    if (d <= 1e-10 * std::max(1.0, scale)) return 0.0;
    return se > 0.0 ? d / se : std::numeric_limits<double>::infinity();
  };
  double m = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) {
    const double scale = std::abs(ref[i]);
    m = std::max(m, ratio(std::abs(mean[i].real() - ref[i].real()), stderr_re[i], scale));
    m = std::max(m, ratio(std::abs(mean[i].imag() - ref[i].imag()), stderr_im[i], scale));
  }
  return m;
}

double McEstimate::mean_stderr() const {
  double s = 0.0;
  for (std::size_t i = 0; i < mean.size(); ++i) s += std::hypot(stderr_re[i], stderr_im[i]);
  return mean.empty() ? 0.0 : s / static_cast<double>(mean.size());
}

namespace {

// Per-path estimator: Σ_i c_i u(x+Z_{t_i}) + c_end u(x+Z_{t_end}) + d(x).
struct PathFunctional {
  std::vector<double> times;
  std::vector<double> coef;
  double end_coef = 0.0;
  std::vector<cplx> offset;  // per probe
};

McEstimate run(const SpectralInterpolant& u, const IncrementSampler& sampler,
               const std::vector<std::array<double, 2>>& probes, const PathFunctional& pf, const McOptions& mc,
               double scale) {
  if (mc.paths < 2) throw SamplingError("Monte Carlo needs at least two paths");
  const std::size_t P = probes.size(), T = pf.times.size();
  const auto& ks = u.wavevectors();
  const std::size_t Mm = ks.size();
  std::vector<cplx> B(P * Mm);
  for (std::size_t p = 0; p < P; ++p)
    for (std::size_t m = 0; m < Mm; ++m)
      B[p * Mm + m] = u.coefficients()[m] * std::exp(cplx(0.0, ks[m][0] * probes[p][0] + ks[m][1] * probes[p][1]));

  constexpr std::size_t block = 1024;
  std::vector<double> blk_sum(4 * P, 0.0);
  std::vector<std::vector<double>> blocks;
  std::vector<cplx> E(Mm), X(P);
  std::vector<cplx> W(Mm);
  for (std::size_t path = 0; path < mc.paths; ++path) {
    RngStream rng(mc.seed, path);
    const std::vector<Point> z = sampler.path(pf.times, rng);
    std::fill(W.begin(), W.end(), cplx(0.0));
    // W_m = Σ_i c_i e^{ik_m·Z_i}; then X_p = Σ_m B_pm W_m.
    for (std::size_t i = 0; i < T; ++i) {
      const double c = pf.coef[i] + (i + 1 == T ? pf.end_coef : 0.0);
      for (std::size_t m = 0; m < Mm; ++m) W[m] += c * std::exp(cplx(0.0, ks[m][0] * z[i][0] + ks[m][1] * z[i][1]));
    }
    for (std::size_t p = 0; p < P; ++p) {
      cplx x = pf.offset[p];
      for (std::size_t m = 0; m < Mm; ++m) x += B[p * Mm + m] * W[m];
      x *= scale;
      blk_sum[4 * p] += x.real();
      blk_sum[4 * p + 1] += x.real() * x.real();
      blk_sum[4 * p + 2] += x.imag();
      blk_sum[4 * p + 3] += x.imag() * x.imag();
    }
    if ((path + 1) % block == 0 || path + 1 == mc.paths) {
      blocks.push_back(blk_sum);
      std::fill(blk_sum.begin(), blk_sum.end(), 0.0);
    }
  }
  McEstimate est;
  est.probes = probes;
  est.paths = mc.paths;
  const double n = static_cast<double>(mc.paths);
  std::vector<double> col(blocks.size());
  auto total = [&](std::size_t k) {
    for (std::size_t b = 0; b < blocks.size(); ++b) col[b] = blocks[b][k];
    return pairwise_sum(col.data(), col.size());
  };
  for (std::size_t p = 0; p < P; ++p) {
    const double sr = total(4 * p), sr2 = total(4 * p + 1), si = total(4 * p + 2), si2 = total(4 * p + 3);
    const double mr = sr / n, mi = si / n;
    const double vr = std::max(0.0, (sr2 - n * mr * mr) / (n - 1.0));
    const double vi = std::max(0.0, (si2 - n * mi * mi) / (n - 1.0));
    if (!std::isfinite(vr) || !std::isfinite(vi))
      throw SamplingError("Monte Carlo variance is not finite; increase the path count");
    est.mean.push_back({mr, mi});
    est.stderr_re.push_back(std::sqrt(vr / n));
    est.stderr_im.push_back(std::sqrt(vi / n));
  }
  return est;
}

void check_u(const GridFunction& u, const LevyModel& model) {
  if (u.lattice().dim != model.dim()) throw DomainError("grid function and model dimensions differ");
}

// Time after which every nonconstant mode of u has decayed below e^{-40} in
// expectation, so later times only see the mean of u. Capped at `cap`.
double mixing_time(const SpectralInterpolant& u, const LevyModel& model, double cap) {
  double kmin = std::numeric_limits<double>::infinity();
  for (const auto& k : u.wavevectors()) {
    const double n = std::hypot(k[0], k[1]);
    if (n > 0.0) kmin = std::min(kmin, n);
  }
  if (!std::isfinite(kmin)) return std::min(cap, 1.0);
  double rate = std::numeric_limits<double>::infinity();
  const double two_pi = 2.0 * std::numbers::pi;
  for (const auto& k : u.wavevectors()) {
    const double n = std::hypot(k[0], k[1]);
    if (n > 0.0 && n <= 2.0 * kmin * (1.0 + 1e-12))
      rate = std::min(rate, -symbol(model, {k[0] / two_pi, k[1] / two_pi}).real());
  }
  return rate > 0.0 ? std::min(cap, 40.0 / rate) : cap;
}

}  // namespace

McEstimate probabilistic_fractional(const GridFunction& u, const LevyModel& model, double kappa,
                                    const std::vector<std::array<double, 2>>& probes, const McOptions& mc) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("probabilistic fractional power needs kappa in (0,1)");
  check_u(u, model);
  const LevyModel sym = symmetrize(model);
  const SpectralInterpolant si(u, 1e-14);
  const IncrementSampler sampler(sym, mc.eps);
  const double tmax = std::max(10.0 * mc.t_min, mixing_time(si, sym, mc.t_max));
  const TimeRule rule = log_time_rule(mc.t_min, tmax, mc.panels_per_decade);
  PathFunctional pf;
  pf.times = rule.t;
  double csum = 0.0;
  for (std::size_t i = 0; i < rule.t.size(); ++i) {
    pf.coef.push_back(rule.w[i] * std::pow(rule.t[i], -1.0 - kappa));
    csum += pf.coef.back();
  }
  pf.end_coef = std::pow(tmax, -kappa) / kappa;
  csum += pf.end_coef;
  // E[u(x+Z_t) − u(x)] ≈ t L u(x) below t_min.
  const double head = std::pow(mc.t_min, 1.0 - kappa) / (1.0 - kappa);
  for (const auto& x : probes) pf.offset.push_back(-csum * si(x[0], x[1]) + head * generator_quadrature(si, sym, x));
  const double C = 1.0 / subordination_constant(kappa, Subordination::Fractional);
  return run(si, sampler, probes, pf, mc, C);
}

McEstimate probabilistic_resolvent_power(const GridFunction& u, const LevyModel& model, double a, double kappa,
                                         const std::vector<std::array<double, 2>>& probes, const McOptions& mc) {
  if (!(a > 0.0)) throw DomainError("resolvent shift a must be positive");
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("probabilistic resolvent power needs kappa in (0,1)");
  check_u(u, model);
  const LevyModel sym = symmetrize(model);
  const SpectralInterpolant si(u, 1e-14);
  const IncrementSampler sampler(sym, mc.eps);
  const double tmax = std::max(10.0 * mc.t_min, mixing_time(si, sym, std::min(mc.t_max, 40.0 / a)));
  const TimeRule rule = log_time_rule(mc.t_min, tmax, mc.panels_per_decade);
  PathFunctional pf;
  pf.times = rule.t;
  for (std::size_t i = 0; i < rule.t.size(); ++i)
    pf.coef.push_back(rule.w[i] * std::pow(rule.t[i], kappa - 1.0) * std::exp(-a * rule.t[i]));
  pf.end_coef = std::pow(a, -kappa) * boost::math::tgamma(kappa, a * tmax);
  const double head = std::pow(a, -kappa) * boost::math::tgamma_lower(kappa, a * mc.t_min);
  for (const auto& x : probes) pf.offset.push_back(head * si(x[0], x[1]));
  const double C = 1.0 / subordination_constant(kappa, Subordination::Resolvent);
  return run(si, sampler, probes, pf, mc, C);
}

McEstimate resolvent_via_expectation(const GridFunction& u, const LevyModel& model, double a,
                                     const std::vector<std::array<double, 2>>& probes, const McOptions& mc) {
  if (!(a > 0.0)) throw DomainError("resolvent shift a must be positive");
  check_u(u, model);
  const SpectralInterpolant si(u, 1e-14);
  const IncrementSampler sampler(model, mc.eps);
  const double tmax = std::max(10.0 * mc.t_min, mixing_time(si, model, std::min(mc.t_max, 40.0 / a)));
  const TimeRule rule = log_time_rule(mc.t_min, tmax, mc.panels_per_decade);
  PathFunctional pf;
  pf.times = rule.t;
  for (std::size_t i = 0; i < rule.t.size(); ++i) pf.coef.push_back(rule.w[i] * std::exp(-a * rule.t[i]));
  pf.end_coef = std::exp(-a * tmax) / a;
  const double head = -std::expm1(-a * mc.t_min) / a;
  for (const auto& x : probes) pf.offset.push_back(head * si(x[0], x[1]));
  return run(si, sampler, probes, pf, mc, 1.0);
}

}  // namespace gensmooth
