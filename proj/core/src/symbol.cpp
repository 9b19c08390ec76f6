#include "gensmooth/symbol.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gensmooth/errors.hpp"

namespace gensmooth {

namespace {

constexpr double kU0 = 1e-7;
constexpr double kU1 = 2.0 * std::numbers::pi * 32.0;
constexpr double kPanel = std::numbers::pi / 4.0;
const double kInf = std::numeric_limits<double>::infinity();

double cos_minus_one(double u) {
  const double s = std::sin(0.5 * u);
  return -2.0 * s * s;
}

double sin_minus_u(double u) {
  if (std::abs(u) < 0.1) {
    const double u2 = u * u;
    return -u * u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0 * (1.0 - u2 / 72.0)));
  }
  return std::sin(u) - u;
}

// ∫ r^q ρ(r) dr per unit angular weight.
double rpow(const LevyModel& m, double q, double a, double b) {
  return radial_power_integral(m, q, a, b, 8.0) / m.angular().total();
}

template <class F>
double uniform_pieces(F&& f, double a, double b) {
  if (!(b > a)) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / kPanel)));
  return integrate_uniform(f, a, b, panels);
}

}  // namespace

double stable_constant(double alpha) {
  if (alpha == 1.0) return 0.5 * std::numbers::pi;
  return boost::math::tgamma(1.0 - alpha) * std::cos(0.5 * std::numbers::pi * alpha) / alpha;
}

double stable_odd_constant(double alpha) {
  if (alpha == 1.0) return 1.0 - std::numbers::egamma;
  return -boost::math::tgamma(-alpha) * std::sin(0.5 * std::numbers::pi * alpha);
}

RadialSymbol radial_symbol_closed(const LevyModel& model, double k) {
  if (model.kind() != DensityKind::StableLike) throw DomainError("closed-form radial symbol needs a power-law model");
  if (k == 0.0) return {};
  const double a = model.order();
  const double c = model.intensity() * std::pow(model.dilation(), -a);
  RadialSymbol s;
  s.A = -c * std::pow(k, a) * stable_constant(a);
  s.B = a == 1.0 ? c * k * (1.0 - std::numbers::egamma - std::log(k)) : c * std::pow(k, a) * stable_odd_constant(a);
  return s;
}

RadialSymbol radial_symbol_quadrature(const LevyModel& model, double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("radial symbol needs a finite k >= 0");
  if (k == 0.0) return {};
  const double alpha = model.order();
  auto g = [&](double u) { return model.rho(u / k) / k; };
  // χ(u/k) on the u axis.
  const double brk = alpha > 1.0 ? kInf : (alpha == 1.0 ? k : 0.0);
  auto odd = [&](double u) { return (u <= brk ? sin_minus_u(u) : std::sin(u)) * g(u); };
  auto even = [&](double u) { return cos_minus_one(u) * g(u); };

  RadialSymbol s;
  // Taylor region [0, u0].
  s.A = -0.5 * k * k * rpow(model, 2.0, 0.0, kU0 / k);
  {
    const double c1 = std::min(brk, kU0);
    if (c1 > 0.0) s.B += -k * k * k / 6.0 * rpow(model, 3.0, 0.0, c1 / k);
    if (c1 < kU0) s.B += k * rpow(model, 1.0, c1 / k, kU0 / k);
  }
  // Log panels on [u0, 1] and uniform panels on [1, U1], split at the χ breakpoint.
  s.A += integrate_log(even, kU0, 1.0, 4.0) + uniform_pieces(even, 1.0, kU1);
  auto odd_on = [&](double a, double b, bool logp) {
    auto one = [&](double x, double y) { return logp ? integrate_log(odd, x, y, 4.0) : uniform_pieces(odd, x, y); };
    if (brk > a && brk < b) return one(a, brk) + one(brk, b);
    return one(a, b);
  };
  s.B += odd_on(kU0, 1.0, true) + odd_on(1.0, kU1, false);
  // Asymptotic tail on [U1, ∞); U1 is a multiple of 2π.
  const double h = 1e-3 * kU1;
  const double g0 = g(kU1), gp = g(kU1 + h), gm = g(kU1 - h);
  const double d1 = (gp - gm) / (2.0 * h), d2 = (gp - 2.0 * g0 + gm) / (h * h);
  s.A += -d1 - rpow(model, 0.0, kU1 / k, kInf);
  s.B += g0 - d2;
  if (brk > kU1) s.B -= k * rpow(model, 1.0, kU1 / k, brk == kInf ? kInf : brk / k);
  return s;
}

namespace {

// A and B tabulated on a log k grid, for lattices with many distinct directions.
class RadialTable {
 public:
  RadialTable(const LevyModel& model, double k_max, bool closed) {
    const double k_lo = 1e-6;
    const std::size_t n = static_cast<std::size_t>(std::ceil(40.0 * std::log10(k_max / k_lo))) + 1;
    std::vector<double> lk, la, rb;
    for (double k : log_grid(k_lo, k_max, n)) {
      const RadialSymbol s = closed ? radial_symbol_closed(model, k) : radial_symbol_quadrature(model, k);
      lk.push_back(std::log(k));
      la.push_back(std::log(-s.A));
      rb.push_back(s.B / -s.A);
    }
    k_lo_ = k_lo;
    la_ = MonotoneCubic(lk, la);
    rb_ = MonotoneCubic(lk, rb);
    front_slope_ = (la[1] - la[0]) / (lk[1] - lk[0]);
    la0_ = la[0];
    rb0_ = rb[0];
    rb_slope_ = (rb[1] - rb[0]) / (lk[1] - lk[0]);
  }

  RadialSymbol operator()(double k) const {
    if (k == 0.0) return {};
    const double lk = std::log(k);
    double la, rb;
    if (k < k_lo_) {
      const double dl = lk - std::log(k_lo_);
      la = la0_ + front_slope_ * dl;
      rb = rb0_ + rb_slope_ * dl;
    } else {
      la = la_(lk);
      rb = rb_(lk);
    }
    const double A = -std::exp(la);
    return {A, -A * rb};
  }

 private:
  double k_lo_;
  MonotoneCubic la_, rb_;
  double front_slope_, la0_, rb0_, rb_slope_;
};

bool use_closed(const LevyModel& m, SymbolMethod method) {
  if (method == SymbolMethod::ClosedForm) {
    if (!m.has_closed_form()) throw DomainError("model has no closed-form symbol");
    return true;
  }
  return method == SymbolMethod::Auto && m.has_closed_form();
}

cplx bernstein_closed(const LevyModel& m, double xi2) {
  const double R = m.dilation();
  const double s = 4.0 * std::numbers::pi * std::numbers::pi * xi2 / (R * R);
  return -m.intensity() * m.kernel()->phi()(s);
}

template <class Radial>
cplx assemble(const LevyModel& m, const std::array<double, 2>& xi, Radial&& radial) {
  const auto& ang = m.angular();
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < ang.weights.size(); ++i) {
    const double w = ang.weights[i];
    if (w == 0.0) continue;
    const double p = 2.0 * std::numbers::pi * (xi[0] * ang.directions[i][0] + xi[1] * ang.directions[i][1]);
    if (p == 0.0) continue;
    const RadialSymbol s = radial(std::abs(p));
    re += w * s.A;
    im += w * (p > 0.0 ? s.B : -s.B);
  }
  if (m.symmetric()) im = 0.0;
  return {re, im};
}

}  // namespace

cplx symbol(const LevyModel& model, const std::array<double, 2>& xi, SymbolMethod method) {
  if (xi[0] == 0.0 && xi[1] == 0.0) return 0.0;
  const bool closed = use_closed(model, method);
  if (closed && model.kind() == DensityKind::Bernstein) return bernstein_closed(model, xi[0] * xi[0] + xi[1] * xi[1]);
  if (closed) return assemble(model, xi, [&](double k) { return radial_symbol_closed(model, k); });
  return assemble(model, xi, [&](double k) { return radial_symbol_quadrature(model, k); });
}

SymbolGrid make_symbol_grid(const LevyModel& model, const Lattice& lattice, SymbolMethod method) {
  lattice.validate();
  if (lattice.dim != model.dim()) throw DomainError("lattice and model dimensions differ");
  SymbolGrid g;
  g.lattice = lattice;
  g.model_id = model.hash();
  g.values.resize(lattice.size());
  const bool closed = use_closed(model, method);
  if (closed && model.kind() == DensityKind::Bernstein) {
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      const auto xi = lattice.xi(i);
      g.values[i] = bernstein_closed(model, xi[0] * xi[0] + xi[1] * xi[1]);
    }
    return g;
  }
  if (lattice.dim == 1) {
    // ψ depends on |ξ| and its sign only; evaluate each |m| once.
    const int M = lattice.points;
    for (int k = 0; k < M; ++k) {
      const int m = lattice.mode(k);
      if (m < 0 && -m < M / 2) continue;
      const std::array<double, 2> xi{lattice.frequency(k), 0.0};
      const double kk = 2.0 * std::numbers::pi * std::abs(xi[0]);
      const RadialSymbol s = closed ? radial_symbol_closed(model, kk) : radial_symbol_quadrature(model, kk);
      auto fixed = [&](double) { return s; };
      g.values[k] = assemble(model, xi, fixed);
      if (m > 0) g.values[M - k] = assemble(model, {-xi[0], 0.0}, fixed);
    }
    return g;
  }
  const double kmax = 2.0 * std::numbers::pi * lattice.nyquist() * std::sqrt(2.0) * 1.01;
  const RadialTable table(model, kmax, closed);
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] = assemble(model, lattice.xi(i), table);
  return g;
}

SymbolGrid fractional_symbol(const SymbolGrid& g, double kappa) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) throw DomainError("fractional order must lie in [0,1]");
  SymbolGrid out = g;
  if (kappa == 1.0) return out;
  for (auto& v : out.values) v = kappa == 0.0 ? 1.0 : -std::pow(std::max(0.0, -v.real()), kappa);
  return out;
}

SymbolGrid resolvent_symbol(const SymbolGrid& g, double a, double kappa, int sign) {
  if (!(a > 0.0)) throw DomainError("resolvent shift a must be positive");
  if (!(kappa > 0.0 && kappa < 2.0)) throw DomainError("resolvent power must lie in (0,2)");
  if (sign != 1 && sign != -1) throw DomainError("resolvent sign must be +1 or -1");
  SymbolGrid out = g;
  for (auto& v : out.values) v = std::pow(a - v.real(), sign * kappa);
  return out;
}

SymbolBounds check_symbol_bounds(const SymbolGrid& g, const ScalingFunction& sf) {
  SymbolBounds b{kInf, 0.0};
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const auto xi = g.lattice.xi(i);
    const double n = std::hypot(xi[0], xi[1]);
    if (n == 0.0) continue;
    const double v = -g.values[i].real();
    if (!(v > 0.0)) throw DomainError("degenerate model: -Re psi vanishes at a nonzero frequency");
    const double r = v * sf.w(1.0 / n);
    b.c = std::min(b.c, r);
    b.C = std::max(b.C, r);
  }
  return b;
}

double symbol_scaling_residual(const LevyModel& model, const ScalingFunction& sf, double N, int j,
                               const std::vector<std::array<double, 2>>& xis, SymbolMethod method) {
  const double R = std::pow(N, -j);
  const double wR = sf.w(R);
  const LevyModel scaled = model.scaled(R, wR);
  double worst = 0.0;
  for (const auto& xi : xis) {
    const cplx lhs = symbol(model, xi, method);
    const cplx rhs = symbol(scaled, {R * xi[0], R * xi[1]}, method) / wR;
    if (lhs == 0.0) continue;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }
  return worst;
}

AppendixMoments appendix_moments(const LevyModel& model, const ScalingFunction& sf, const std::vector<double>& Rs) {
  AppendixMoments out;
  out.min = kInf;
  const double a = model.order();
  out.weight = a < 1.0 ? "|y|^1 ^ 1" : (a == 1.0 ? "|y|^2 ^ 1" : "|y|^2 ^ |y|");
  for (double R : Rs) {
    const LevyModel m = model.scaled(R, sf.w(R));
    double v;
    if (a < 1.0)
      v = radial_power_integral(m, 1.0, 0.0, 1.0, 8.0) + radial_power_integral(m, 0.0, 1.0, kInf, 8.0);
    else if (a == 1.0)
      v = radial_power_integral(m, 2.0, 0.0, 1.0, 8.0) + radial_power_integral(m, 0.0, 1.0, kInf, 8.0);
    else
      v = radial_power_integral(m, 2.0, 0.0, 1.0, 8.0) + radial_power_integral(m, 1.0, 1.0, kInf, 8.0);
    out.N2 = std::max(out.N2, v);
    out.min = std::min(out.min, v);
  }
  return out;
}

std::vector<double> real_part(const SymbolGrid& g) {
  std::vector<double> r(g.values.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = g.values[i].real();
  return r;
}

}  // namespace gensmooth
