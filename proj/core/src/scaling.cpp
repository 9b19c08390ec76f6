#include "gensmooth/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gensmooth/errors.hpp"

namespace gensmooth {

namespace {

void check_arg(double r, const char* what) {
  if (!std::isfinite(r) || !(r > 0.0)) throw DomainError(std::string(what) + " must be positive and finite");
}

}  // namespace

ScalingFunction ScalingFunction::power_law(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("power-law exponent must be positive");
  ScalingFunction sf;
  sf.kind_ = ScalingKind::PowerLaw;
  sf.alpha_ = alpha;
  sf.l_lo_ = sf.l_hi_ = alpha;
  sf.l_c_ = 1.0;
  sf.indices_ = {alpha, alpha, 1.0, 1.0};
  return sf;
}

ScalingFunction ScalingFunction::bernstein(std::shared_ptr<const BernsteinKernel> kernel) {
  ScalingFunction sf;
  sf.kind_ = ScalingKind::BernsteinInduced;
  sf.kernel_ = std::move(kernel);
  sf.j1_ = (*sf.kernel_)(1.0);
  sf.l_lo_ = 2.0 * sf.kernel_->phi().delta1();
  sf.l_hi_ = 2.0 * sf.kernel_->phi().delta2();
  sf.finish();
  return sf;
}

ScalingFunction ScalingFunction::tabulated(std::vector<double> r, std::vector<double> w) {
  if (r.size() != w.size() || r.size() < 4) throw DomainError("scaling table needs >= 4 (r, w) pairs");
  std::vector<double> lr(r.size()), lw(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    check_arg(r[i], "table radius");
    check_arg(w[i], "table value");
    if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("scaling table radii must be strictly increasing");
    lr[i] = std::log(r[i]);
    lw[i] = std::log(w[i]);
  }
  ScalingFunction sf;
  sf.kind_ = ScalingKind::Tabulated;
  sf.table_ = MonotoneCubic(std::move(lr), std::move(lw));
  sf.j1_ = std::exp(sf.table_(0.0));
  auto idx = estimate_indices(sf, default_probe_grid());
  sf.l_lo_ = idx.r2;
  sf.l_hi_ = idx.r1;
  sf.finish();
  return sf;
}

double ScalingFunction::w_raw(double r) const {
  switch (kind_) {
    case ScalingKind::PowerLaw:
      return std::pow(r, alpha_);
    case ScalingKind::BernsteinInduced:
      return j1_ / ((*kernel_)(r)*std::pow(r, kernel_->dim()));
    case ScalingKind::Tabulated:
      return std::exp(table_(std::log(r))) / j1_;
  }
  return 1.0;
}

double ScalingFunction::w(double r) const {
  check_arg(r, "scaling-function argument");
  if (r == 1.0) return 1.0;
  return w_raw(r);
}

double ScalingFunction::l(double eps) const {
  check_arg(eps, "scaling-factor argument");
  if (kind_ == ScalingKind::PowerLaw) return std::pow(eps, alpha_);
  return l_c_ * std::pow(eps, eps <= 1.0 ? l_lo_ : l_hi_);
}

void ScalingFunction::finish() {
  // Prefactor of l: sup over a log grid of w(εr) / (w(r) ε^p).
  const int per_decade = 24;
  const int decades = 18;
  const int n = decades * per_decade + 1;
  std::vector<double> lw(n), lx(n);
  for (int i = 0; i < n; ++i) {
    lx[i] = std::log(10.0) * (-9.0 + static_cast<double>(i) / per_decade);
    lw[i] = std::log(w_raw(std::exp(lx[i])));
  }
  const int mid = 9 * per_decade;
  double best = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int k = -mid; k <= mid; ++k) {
      const int j = i + k;
      if (j < 0 || j >= n) continue;
      const double le = lx[mid + k];
      const double p = le <= 0.0 ? l_lo_ : l_hi_;
      best = std::max(best, lw[j] - lw[i] - p * le);
    }
  }
  l_c_ = std::exp(best) * (1.0 + 1e-9);
  indices_ = estimate_indices(*this, default_probe_grid());
}

std::string ScalingFunction::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ScalingKind::PowerLaw:
      os << "power(alpha=" << alpha_ << ")";
      break;
    case ScalingKind::BernsteinInduced:
      os << "bernstein(kind=" << kernel_->phi().kind() << ", d=" << kernel_->dim() << ")";
      break;
    case ScalingKind::Tabulated:
      os << "table";
      break;
  }
  return os.str();
}

std::vector<double> default_probe_grid() { return log_grid(1e-4, 1e4, 512); }

double eval_w(const ScalingFunction& sf, double r) { return sf.w(r); }
double eval_l(const ScalingFunction& sf, double eps) { return sf.l(eps); }

EnvelopeIndices estimate_indices(const ScalingFunction& sf, const std::vector<double>& grid) {
  if (grid.size() < 8) throw DomainError("probe grid too small");
  if (!(grid.front() <= 1e-2 && grid.back() >= 1e2)) throw DomainError("probe grid must span >= 4 decades around 1");
  std::vector<double> xl, yl, xh, yh;
  std::vector<double> wv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double w = sf.w(x);
    if (!(w > 0.0) || !std::isfinite(w)) throw EstimationError("scaling function not positive/finite", x);
    wv[i] = w;
    if (x < 1.0) {
      xl.push_back(std::log(x));
      yl.push_back(std::log(w));
    } else if (x > 1.0) {
      xh.push_back(std::log(x));
      yh.push_back(std::log(w));
    }
  }
  const double s_lo = fit_line(xl, yl).slope;
  const double s_hi = fit_line(xh, yh).slope;
  EnvelopeIndices e;
  e.r1 = std::max(s_lo, s_hi);
  e.r2 = std::min(s_lo, s_hi);
  e.c0 = std::numeric_limits<double>::infinity();
  e.C0 = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double a = std::pow(x, e.r1), b = std::pow(x, e.r2);
    e.c0 = std::min(e.c0, wv[i] / std::min(a, b));
    e.C0 = std::max(e.C0, wv[i] / std::max(a, b));
  }
  if (!(e.c0 > 0.0) || !std::isfinite(e.C0)) throw EstimationError("envelope infeasible on probe grid", 0.0);
  return e;
}

double gamma_inverse(const ScalingFunction& sf, double x) {
  check_arg(x, "gamma_inverse argument");
  double lo = 1e-12, hi = 1e12;
  if (sf.l(lo) >= x) throw BracketError("x is below inf l on [1e-12, 1e12]");
  if (sf.l(hi) < x) throw BracketError("x is above sup l on [1e-12, 1e12]");
  double a = std::log(lo), b = std::log(hi);
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    const double m = 0.5 * (a + b);
    if (sf.l(std::exp(m)) >= x)
      b = m;
    else
      a = m;
  }
  return std::exp(b);
}

IntegrabilityReport check_beta_integrability(const ScalingFunction& sf, double beta) {
  check_arg(beta, "beta");
  constexpr double t_min = 1e-8, t_max = 1e8;
  IntegrabilityReport rep;
  rep.small_integral = integrate_log([&](double t) { return std::pow(sf.l(t), beta) / t; }, t_min, 1.0, 8.0);
  rep.large_integral = integrate_log([&](double t) { return std::pow(sf.l(t), beta) / (t * t); }, 1.0, t_max, 8.0);
  rep.small_exponent = sf.l_exponent_small();
  rep.large_exponent = sf.l_exponent_large();
  const double p0 = beta * rep.small_exponent;
  const double p1 = beta * rep.large_exponent;
  const double inf = std::numeric_limits<double>::infinity();
  rep.small_tail = p0 > 0.0 ? std::pow(sf.l(t_min), beta) / p0 : inf;
  rep.large_tail = p1 < 1.0 ? std::pow(sf.l(t_max), beta) / (t_max * (1.0 - p1)) : inf;
  if (std::abs(1.0 - p1) < 1e-6 || std::abs(p0) < 1e-6) {
    rep.verdict = Integrability::Marginal;
  } else if (p1 > 1.0 || p0 < 0.0) {
    rep.verdict = Integrability::Fails;
  } else {
    rep.verdict = Integrability::Holds;
  }
  return rep;
}

const char* to_string(HolderRegime r) {
  switch (r) {
    case HolderRegime::Nontrivial:
      return "Nontrivial";
    case HolderRegime::ContainsLipschitz:
      return "ContainsLipschitz";
    case HolderRegime::LipschitzExactly:
      return "LipschitzExactly";
    case HolderRegime::ConstantsOnly:
      return "ConstantsOnly";
  }
  return "?";
}

const char* to_string(Integrability v) {
  switch (v) {
    case Integrability::Holds:
      return "holds";
    case Integrability::Fails:
      return "fails";
    case Integrability::Marginal:
      return "marginal";
  }
  return "?";
}

double estimate_alpha_prime(const ScalingFunction& sf, double r_min) {
  std::vector<double> x, y;
  for (double r : log_grid(r_min, 10.0 * r_min, 16)) {
    x.push_back(std::log(r));
    y.push_back(std::log(sf.w(r)));
  }
  return fit_line(x, y).slope;
}

HolderRegime classify_holder_regime(const ScalingFunction& sf, double beta, double alpha_prime) {
  check_arg(beta, "beta");
  const double inv = 1.0 / beta;
  const double tol = 1e-9 * std::max(1.0, std::abs(alpha_prime));
  if (inv < alpha_prime - tol) return HolderRegime::ConstantsOnly;
  if (inv > alpha_prime + tol) return HolderRegime::ContainsLipschitz;
  // Boundary case: trend of r^{α'}/w(r) toward r → 0.
  std::vector<double> x, y;
  for (double r : log_grid(1e-8, 1e-4, 33)) {
    x.push_back(std::log(r));
    y.push_back(alpha_prime * std::log(r) - std::log(sf.w(r)));
  }
  const LineFit f = fit_line(x, y);
  if (f.slope > 1e-3) return HolderRegime::ContainsLipschitz;
  if (f.slope < -1e-3) return HolderRegime::ConstantsOnly;
  if (f.r2 < 0.5 && std::abs(f.slope) > 1e-6) return HolderRegime::Nontrivial;
  return HolderRegime::LipschitzExactly;
}

}  // namespace gensmooth
