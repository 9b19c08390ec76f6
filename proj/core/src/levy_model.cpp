#include "gensmooth/levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "gensmooth/errors.hpp"

namespace gensmooth {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PowerTail fit_tail(const std::function<double(double)>& rho, double r0, double r1) {
  const double v0 = rho(r0), v1 = rho(r1);
  const double slope = std::log(v1 / v0) / std::log(r1 / r0);
  PowerTail t;
  t.exponent = -slope - 1.0;
  t.coef = v0 * std::pow(r0, 1.0 + t.exponent);
  return t;
}

}  // namespace

double PowerLawRadial::operator()(double r) const { return std::pow(r, -1.0 - alpha_); }

std::string PowerLawRadial::describe() const { return "power(" + fmt(alpha_) + ")"; }

BernsteinRadial::BernsteinRadial(std::shared_ptr<const BernsteinKernel> kernel) : kernel_(std::move(kernel)) {
  auto f = [this](double r) { return (*this)(r); };
  zero_ = fit_tail(f, 1e-10, 1e-9);
  inf_ = fit_tail(f, 1e9, 1e10);
}

double BernsteinRadial::operator()(double r) const {
  const int d = kernel_->dim();
  return (*kernel_)(r) * (d == 1 ? 1.0 : r);
}

std::string BernsteinRadial::describe() const {
  std::string s = "bernstein(" + std::to_string(kernel_->phi().kind());
  for (double p : kernel_->phi().params()) s += "," + fmt(p);
  return s + ";d=" + std::to_string(kernel_->dim()) + ")";
}

TableRadial::TableRadial(std::vector<double> r, std::vector<double> density) : r_(r), d_(density) {
  if (r.size() != density.size() || r.size() < 4) throw DomainError("radial table needs >= 4 (r, density) rows");
  std::vector<double> lr(r.size()), ld(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0) || !(density[i] > 0.0)) throw DomainError("radial table entries must be positive");
    if (i > 0 && !(r[i] > r[i - 1])) throw DomainError("radial table radii must be strictly increasing");
    lr[i] = std::log(r[i]);
    ld[i] = std::log(density[i]);
  }
  table_ = MonotoneCubic(std::move(lr), std::move(ld));
  const double a0 = table_.slope_front(), a1 = table_.slope_back();
  zero_.exponent = -a0 - 1.0;
  zero_.coef = density.front() * std::pow(r.front(), 1.0 + zero_.exponent);
  inf_.exponent = -a1 - 1.0;
  inf_.coef = density.back() * std::pow(r.back(), 1.0 + inf_.exponent);
}

double TableRadial::operator()(double r) const { return std::exp(table_(std::log(r))); }

std::string TableRadial::describe() const {
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < r_.size(); ++i) h ^= fnv1a64(fmt(r_[i]) + ":" + fmt(d_[i])) + i;
  return "table(" + std::to_string(r_.size()) + "," + std::to_string(h) + ")";
}

AngularMeasure AngularMeasure::two_point(double w_plus, double w_minus) {
  if (!(w_plus >= 0.0) || !(w_minus >= 0.0) || !(w_plus + w_minus > 0.0))
    throw DomainError("angular weights must be nonnegative and not all zero");
  AngularMeasure a;
  a.directions = {{1.0, 0.0}, {-1.0, 0.0}};
  a.weights = {w_plus, w_minus};
  return a;
}

AngularMeasure AngularMeasure::circle(const std::vector<double>& sigma) {
  const std::size_t K = sigma.size();
  if (K < 4) throw DomainError("angular table on the circle needs >= 4 angles");
  AngularMeasure a;
  double tot = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    if (!(sigma[k] >= 0.0)) throw DomainError("angular weights must be nonnegative");
    const double th = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(K);
    a.directions.push_back({std::cos(th), std::sin(th)});
    a.weights.push_back(sigma[k] * 2.0 * std::numbers::pi / static_cast<double>(K));
    tot += sigma[k];
  }
  if (!(tot > 0.0)) throw DomainError("angular weights must not all vanish");
  // Exact zeros for the axis directions keep symmetric tables exactly symmetric.
  for (auto& d : a.directions)
    for (auto& c : d)
      if (std::abs(c) < 1e-15) c = 0.0;
  return a;
}

AngularMeasure AngularMeasure::uniform_circle(int K) { return circle(std::vector<double>(K, 1.0)); }

double AngularMeasure::total() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

const char* to_string(DensityKind k) {
  switch (k) {
    case DensityKind::StableLike:
      return "stable";
    case DensityKind::Bernstein:
      return "bernstein";
    case DensityKind::Tabulated:
      return "table";
  }
  return "?";
}

std::string LevyModel::label() const {
  std::ostringstream os;
  os << to_string(kind_) << "(d=" << dim_ << ",alpha=" << fmt(alpha_) << ",radial=" << radial_->describe()
     << ",angular=[";
  for (std::size_t i = 0; i < angular_.weights.size(); ++i) os << (i ? "," : "") << fmt(angular_.weights[i]);
  os << "]";
  if (dilation_ != 1.0 || intensity_ != 1.0) os << ",R=" << fmt(dilation_) << ",c=" << fmt(intensity_);
  os << ")";
  return os.str();
}

std::string LevyModel::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(
                    fnv1a64(label() + ";m=" + fmt(moments_.alpha1) + "," + fmt(moments_.alpha2))));
  return buf;
}

double LevyModel::rho(double r) const { return intensity_ * dilation_ * (*radial_)(dilation_ * r); }

PowerTail LevyModel::tail_zero() const {
  PowerTail t = radial_->near_zero();
  t.coef *= intensity_ * std::pow(dilation_, -t.exponent);
  return t;
}

PowerTail LevyModel::tail_infinity() const {
  PowerTail t = radial_->near_infinity();
  t.coef *= intensity_ * std::pow(dilation_, -t.exponent);
  return t;
}

double LevyModel::chi(double r) const {
  if (alpha_ > 1.0) return 1.0;
  if (alpha_ == 1.0) return r <= 1.0 ? 1.0 : 0.0;
  return 0.0;
}

bool LevyModel::symmetric() const {
  const auto& w = angular_.weights;
  if (dim_ == 1) return w[0] == w[1];
  const std::size_t K = w.size();
  if (K % 2 != 0) return false;
  for (std::size_t k = 0; k < K / 2; ++k)
    if (w[k] != w[k + K / 2]) return false;
  return true;
}

LevyModel LevyModel::scaled(double R, double wR) const {
  if (!(R > 0.0) || !(wR > 0.0)) throw DomainError("scaling parameters must be positive");
  LevyModel m = *this;
  m.dilation_ *= R;
  m.intensity_ *= wR;
  return m;
}

LevyModel LevyModel::with_moments(MomentExponents mo) const {
  LevyModel m = *this;
  m.moments_ = mo;
  return m;
}

LevyModel LevyModel::with_scaling(std::shared_ptr<const ScalingFunction> sf) const {
  LevyModel m = *this;
  m.sf_ = std::move(sf);
  return m;
}

LevyModel LevyModel::with_angular(AngularMeasure a) const {
  if (a.weights.size() != angular_.weights.size() && dim_ == 1)
    throw DomainError("d=1 angular measure needs two weights");
  LevyModel m = *this;
  m.angular_ = std::move(a);
  m.lebesgue_angular_ = false;
  return m;
}

bool LevyModel::has_closed_form() const {
  if (kind_ == DensityKind::StableLike) return true;
  if (kind_ == DensityKind::Bernstein) return lebesgue_angular_;
  return false;
}

MomentExponents default_moments(double order, double lower_index) {
  MomentExponents m;
  if (order < 1.0) {
    m.alpha1 = 0.5 * (order + 1.0);
    m.alpha2 = 0.5 * lower_index;
  } else if (order == 1.0) {
    m.alpha1 = 1.5;
    m.alpha2 = 0.5 * std::min(lower_index, 1.0);
  } else {
    m.alpha1 = 0.5 * (order + 2.0);
    m.alpha2 = 0.5 * (1.0 + std::max(1.0, lower_index));
  }
  return m;
}

LevyModel make_stable(int dim, double alpha, AngularMeasure angular) {
  if (dim != 1 && dim != 2) throw DomainError("dimension must be 1 or 2");
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("stable order must lie in (0,2)");
  if (dim == 1 && angular.weights.size() != 2) throw DomainError("d=1 angular measure needs two weights");
  if (dim == 2 && angular.weights.size() < 4) throw DomainError("d=2 angular measure needs >= 4 angles");
  LevyModel m;
  m.dim_ = dim;
  m.alpha_ = alpha;
  m.kind_ = DensityKind::StableLike;
  m.radial_ = std::make_shared<PowerLawRadial>(alpha);
  m.angular_ = std::move(angular);
  m.moments_ = default_moments(alpha, alpha);
  m.sf_ = std::make_shared<ScalingFunction>(ScalingFunction::power_law(alpha));
  return m;
}

LevyModel make_bernstein(const BernsteinPhi& phi, int dim, int angles) {
  if (dim != 1 && dim != 2) throw DomainError("dimension must be 1 or 2");
  LevyModel m;
  m.dim_ = dim;
  m.alpha_ = 2.0 * phi.delta_infinity();
  m.kind_ = DensityKind::Bernstein;
  m.kernel_ = std::make_shared<BernsteinKernel>(phi, dim);
  m.radial_ = std::make_shared<BernsteinRadial>(m.kernel_);
  m.angular_ = dim == 1 ? AngularMeasure::two_point(1.0, 1.0) : AngularMeasure::uniform_circle(angles);
  m.lebesgue_angular_ = true;
  m.moments_ = default_moments(m.alpha_, 2.0 * phi.delta_zero());
  m.sf_ = std::make_shared<ScalingFunction>(ScalingFunction::bernstein(m.kernel_));
  return m;
}

LevyModel make_tabulated(int dim, double alpha, std::vector<double> r, std::vector<double> density,
                         AngularMeasure angular) {
  if (dim != 1 && dim != 2) throw DomainError("dimension must be 1 or 2");
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("order must lie in (0,2)");
  if (dim == 2)
    for (std::size_t i = 0; i < r.size(); ++i) density[i] *= r[i];
  LevyModel m;
  m.dim_ = dim;
  m.alpha_ = alpha;
  m.kind_ = DensityKind::Tabulated;
  auto table = std::make_shared<TableRadial>(std::move(r), std::move(density));
  m.radial_ = table;
  m.angular_ = std::move(angular);
  m.moments_ = default_moments(alpha, table->near_infinity().exponent);
  return m;
}

double radial_power_integral(const LevyModel& model, double q, double a, double b, double ppd) {
  const double inf = std::numeric_limits<double>::infinity();
  if (!(b > a)) return 0.0;
  double s = 0.0;
  const double lo = kRadialMin, hi = kRadialMax;
  if (a < lo) {
    const PowerTail t = model.tail_zero();
    const double e = q - t.exponent;
    const double x = std::min(b, lo);
    if (a == 0.0 && e <= 0.0) return inf;
    s += t.coef * (e == 0.0 ? std::log(x / a) : (std::pow(x, e) - std::pow(a, e)) / e);
  }
  const double m0 = std::max(a, lo), m1 = std::min(b, hi);
  if (m1 > m0) s += integrate_log([&](double r) { return std::pow(r, q) * model.rho(r); }, m0, m1, ppd);
  if (b > hi) {
    const PowerTail t = model.tail_infinity();
    const double e = q - t.exponent;
    const double x = std::max(a, hi);
    if (std::isinf(b)) {
      if (e >= 0.0) return inf;
      s += -t.coef * std::pow(x, e) / e;
    } else {
      s += t.coef * (e == 0.0 ? std::log(b / x) : (std::pow(b, e) - std::pow(x, e)) / e);
    }
  }
  return s * model.angular().total();
}

double tail_mass(const LevyModel& model, double r, double ppd) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("tail_mass radius must be positive");
  const double v = radial_power_integral(model, 0.0, r, std::numeric_limits<double>::infinity(), ppd);
  if (!std::isfinite(v)) throw IntegrationError("tail mass integral diverged", v);
  return v;
}

double levy_mass(const LevyModel& model) {
  return radial_power_integral(model, 2.0, 0.0, 1.0) +
         radial_power_integral(model, 0.0, 1.0, std::numeric_limits<double>::infinity());
}

ScaledMoments scaled_moments(const LevyModel& model, double R) {
  if (!model.scaling()) throw DomainError("model has no associated scaling function");
  const LevyModel m = model.scaled(R, model.scaling()->w(R));
  ScaledMoments out;
  out.I1 = radial_power_integral(m, model.moments().alpha1, 0.0, 1.0, 8.0);
  out.I2 = radial_power_integral(m, model.moments().alpha2, 1.0, std::numeric_limits<double>::infinity(), 8.0);
  out.small_divergent = !std::isfinite(out.I1);
  out.large_divergent = !std::isfinite(out.I2);
  return out;
}

double directional_second_moment(const LevyModel& model, int directions) {
  const double rad = radial_power_integral(model, 2.0, 0.0, 1.0, 8.0);
  const auto& ang = model.angular();
  double best = std::numeric_limits<double>::infinity();
  const int nd = model.dim() == 1 ? 1 : directions;
  for (int k = 0; k < nd; ++k) {
    const double th = std::numbers::pi * k / nd;
    const double xi0 = model.dim() == 1 ? 1.0 : std::cos(th), xi1 = model.dim() == 1 ? 0.0 : std::sin(th);
    double s = 0.0;
    for (std::size_t i = 0; i < ang.weights.size(); ++i) {
      const double p = xi0 * ang.directions[i][0] + xi1 * ang.directions[i][1];
      s += ang.weights[i] * p * p;
    }
    best = std::min(best, s);
  }
  return best * rad / model.angular().total();
}

double shell_mean_residual(const LevyModel& model) {
  // ν factorizes, so every shell integral of y is (Σ w_θ θ) ∫ r ρ dr.
  const auto& ang = model.angular();
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < ang.weights.size(); ++i) {
    m0 += ang.weights[i] * ang.directions[i][0];
    m1 += ang.weights[i] * ang.directions[i][1];
  }
  return std::hypot(m0, m1) / ang.total();
}

namespace {

bool moments_in_range(double order, const MomentExponents& m, std::string& why) {
  const double a1 = m.alpha1, a2 = m.alpha2;
  bool ok = a1 >= a2;
  if (order < 1.0)
    ok = ok && a1 > 0 && a1 < 1 && a2 > 0 && a2 < 1;
  else if (order > 1.0)
    ok = ok && a1 > 1 && a1 <= 2 && a2 > 1 && a2 <= 2;
  else
    ok = ok && a1 > 1 && a1 <= 2 && a2 >= 0 && a2 < 1;
  if (!ok) why += "moment exponents outside the admissible range; ";
  return ok;
}

}  // namespace

AssumptionReport check_assumption_A(const LevyModel& model, const ScalingFunction& sf, const AssumptionGrids& g) {
  AssumptionReport rep;
  const LevyModel base = model.with_scaling(std::make_shared<ScalingFunction>(sf));

  rep.directional_c0 = std::numeric_limits<double>::infinity();
  rep.moment_N0 = 0.0;
  rep.moment_min = std::numeric_limits<double>::infinity();
  bool divergent = false;
  for (double R : g.R) {
    const LevyModel m = base.scaled(R, sf.w(R));
    rep.directional_c0 = std::min(rep.directional_c0, directional_second_moment(m, g.directions));
    const ScaledMoments sm = scaled_moments(base, R);
    if (sm.small_divergent || sm.large_divergent) divergent = true;
    const double tot = sm.I1 + sm.I2;
    rep.moment_N0 = std::max(rep.moment_N0, tot);
    rep.moment_min = std::min(rep.moment_min, tot);
  }
  rep.clause_i = std::isfinite(rep.directional_c0) && rep.directional_c0 >= g.c0_threshold;

  rep.clause_ii_applicable = model.order() == 1.0;
  rep.alpha1_symmetry_residual = shell_mean_residual(model);
  rep.clause_ii = !rep.clause_ii_applicable || rep.alpha1_symmetry_residual <= g.shell_tolerance;
  if (!rep.clause_ii) rep.notes += "clause (ii): shell means do not vanish; ";

  std::string why;
  const bool range_ok = moments_in_range(model.order(), model.moments(), why);
  rep.notes += why;
  if (divergent) rep.notes += "clause (iii): moment integral diverges (check alpha1/alpha2); ";
  rep.clause_iii = range_ok && !divergent && std::isfinite(rep.moment_N0) &&
                   rep.moment_N0 <= g.moment_ratio_bound * rep.moment_min;

  rep.tail_C0 = 0.0;
  for (double r : g.r) {
    const double sr = tail_mass(model, r);
    constexpr double s_lo = 1e-12;
    double v = integrate_log([&](double s) { return s * tail_mass(model, r * s); }, s_lo, 1.0, 4.0);
    const double p0 = model.tail_zero().exponent;
    v += tail_mass(model, r * s_lo) * s_lo * s_lo / (2.0 - p0);
    rep.tail_C0 = std::max(rep.tail_C0, v / sr);
  }
  rep.clause_iv = std::isfinite(rep.tail_C0) && rep.tail_C0 <= g.tail_bound;

  for (double v : {rep.directional_c0, rep.moment_N0, rep.tail_C0, rep.alpha1_symmetry_residual})
    if (std::isnan(v)) throw DomainError("assumption check produced NaN: model definition error");
  return rep;
}

OrderEstimate order_estimate(const LevyModel& model, const ScalingFunction& sf, double tol) {
  OrderEstimate e;
  std::vector<double> slopes;
  for (double r0 : {1e-8, 1e-7, 1e-6}) {
    std::vector<double> x, y;
    for (double r : log_grid(r0, 10.0 * r0, 9)) {
      x.push_back(-std::log(r));
      y.push_back(std::log(tail_mass(model, r)));
    }
    slopes.push_back(fit_line(x, y).slope);
  }
  e.value = slopes.front();
  e.lo = *std::min_element(slopes.begin(), slopes.end());
  e.hi = *std::max_element(slopes.begin(), slopes.end());
  e.converged = (e.hi - e.lo) <= tol;
  e.sf_index = estimate_alpha_prime(sf);
  e.consistent = std::abs(e.value - e.sf_index) <= tol;
  return e;
}

LevyModel symmetrize(const LevyModel& model) {
  AngularMeasure a = model.angular();
  if (model.symmetric()) return model;
  const std::size_t K = a.weights.size();
  if (model.dim() == 1) {
    const double m = 0.5 * (a.weights[0] + a.weights[1]);
    a.weights = {m, m};
  } else {
    if (K % 2 != 0) throw DomainError("symmetrization on the circle needs an even number of angles");
    std::vector<double> w(K);
    for (std::size_t k = 0; k < K; ++k) w[k] = 0.5 * (a.weights[k] + a.weights[(k + K / 2) % K]);
    a.weights = w;
  }
  return model.with_angular(std::move(a));
}

double small_ball_integral(const LevyModel& model, const std::function<double(double)>& g, double r_min,
                           double ppd) {
  if (!(r_min > 0.0) || r_min >= 1.0) throw DomainError("small ball cutoff must lie in (0,1)");
  return integrate_log([&](double r) { return g(r) * model.rho(r); }, r_min, 1.0, ppd) * model.angular().total();
}

TailScalingBounds tail_scaling_bounds(const LevyModel& model, const ScalingFunction& sf,
                                      const std::vector<double>& grid) {
  TailScalingBounds b{std::numeric_limits<double>::infinity(), 0.0};
  for (double r : grid) {
    const double v = tail_mass(model, r) * sf.w(r);
    b.lo = std::min(b.lo, v);
    b.hi = std::max(b.hi, v);
  }
  return b;
}

}  // namespace gensmooth
