#include "gensmooth/operators.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gensmooth/errors.hpp"

namespace gensmooth {

namespace {

void check_grid(const GridFunction& u, const SymbolGrid& g) {
  if (u.lattice() != g.lattice) throw DomainError("grid function and symbol lattices differ");
}

}  // namespace

GridFunction apply_generator(const GridFunction& u, const SymbolGrid& g) {
  check_grid(u, g);
  return apply_multiplier(u, g.values);
}

std::vector<cplx> fractional_multiplier(const SymbolGrid& g, double kappa) {
  if (!(kappa >= 0.0 && kappa < 2.0)) throw DomainError("fractional order must lie in [0,2)");
  if (kappa <= 1.0) return fractional_symbol(g, kappa).values;
  const std::vector<cplx> half = fractional_symbol(g, 0.5 * kappa).values;
  std::vector<cplx> m(half.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = -(half[i] * half[i]);
  return m;
}

GridFunction apply_fractional(const GridFunction& u, const SymbolGrid& g, double kappa) {
  check_grid(u, g);
  if (kappa <= 1.0) return apply_multiplier(u, fractional_multiplier(g, kappa));
  const std::vector<cplx> half = fractional_symbol(g, 0.5 * kappa).values;
  GridFunction v = apply_multiplier(apply_multiplier(u, half), half);
  v *= -1.0;
  return v;
}

std::vector<cplx> resolvent_multiplier(const SymbolGrid& g, double a, double kappa, int sign) {
  if (!(a > 0.0)) throw DomainError("resolvent shift a must be positive");
  if (kappa == 1.0) {
    if (sign != 1 && sign != -1) throw DomainError("resolvent sign must be +1 or -1");
    std::vector<cplx> m(g.values.size());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = sign > 0 ? a - g.values[i] : 1.0 / (a - g.values[i]);
    return m;
  }
  return resolvent_symbol(g, a, kappa, sign).values;
}

GridFunction apply_resolvent_power(const GridFunction& u, const SymbolGrid& g, double a, double kappa, int sign) {
  check_grid(u, g);
  if (kappa > 1.0 && kappa < 2.0) {
    const std::vector<cplx> half = resolvent_symbol(g, a, 0.5 * kappa, sign).values;
    return apply_multiplier(apply_multiplier(u, half), half);
  }
  return apply_multiplier(u, resolvent_multiplier(g, a, kappa, sign));
}

GridFunction apply(const GridFunction& u, const SymbolGrid& g, const OperatorSpec& op) {
  switch (op.form) {
    case OperatorForm::Generator:
      return apply_generator(u, g);
    case OperatorForm::FractionalPower:
      return apply_fractional(u, g, op.kappa);
    case OperatorForm::ResolventPower:
      return apply_resolvent_power(u, g, op.a, op.kappa, op.sign);
  }
  return u;
}

namespace {

// Directional derivative (θ·∇)^n u at x.
cplx directional(const SpectralInterpolant& u, const std::array<double, 2>& x, const std::array<double, 2>& th,
                 int n) {
  cplx s = 0.0;
  for (int a = 0; a <= n; ++a) {
    const double binom = std::tgamma(n + 1.0) / (std::tgamma(a + 1.0) * std::tgamma(n - a + 1.0));
    const double c = binom * std::pow(th[0], a) * std::pow(th[1], n - a);
    if (c != 0.0) s += c * u.derivative(x[0], x[1], a, n - a);
  }
  return s;
}

// ∫_R^∞ e^{iqr} ρ(r) dr by repeated integration by parts with local power-law derivatives.
cplx oscillatory_tail(const LevyModel& m, double q, double R) {
  const double r0 = m.rho(R);
  const double p = -std::log(m.rho(R * 1.001) / m.rho(R / 1.001)) / std::log(1.001 * 1.001) - 1.0;
  const cplx iq(0.0, q);
  cplx sum = 0.0, term_pow = 1.0 / iq;
  double deriv = r0;
  for (int n = 0; n < 4; ++n) {
    sum += (n % 2 == 0 ? 1.0 : -1.0) * deriv * term_pow;
    deriv *= (-1.0 - p - n) / R;
    term_pow /= iq;
  }
  return -std::exp(cplx(0.0, q * R)) * sum;
}

}  // namespace

cplx generator_quadrature(const SpectralInterpolant& u, const LevyModel& model, const std::array<double, 2>& x,
                          const QuadratureOptions& opt) {
  const auto& ks = u.wavevectors();
  const auto& cs = u.coefficients();
  double kmax = 0.0;
  for (const auto& k : ks) kmax = std::max(kmax, std::hypot(k[0], k[1]));
  if (kmax == 0.0) return 0.0;
  const double rT = opt.taylor_scale / kmax;
  // Log panels resolve the singularity; past r_osc the integrand oscillates
  // and gets uniform panels of a quarter period.
  const double r_osc = std::min(1.0, 8.0 / kmax);
  const int osc_panels = std::max(8, static_cast<int>(std::ceil((1.0 - r_osc) * 4.0 * kmax / std::numbers::pi)));
  const double inf = std::numeric_limits<double>::infinity();
  const double W = model.angular().total();
  auto rpow = [&](double q, double a, double b) { return radial_power_integral(model, q, a, b, 8.0) / W; };
  const double alpha = model.order();
  const cplx u0 = u(x[0], x[1]);
  const double tail0 = rpow(0.0, 1.0, inf);
  const double tail1 = alpha > 1.0 ? rpow(1.0, 1.0, inf) : 0.0;

  const auto& ang = model.angular();
  cplx total = 0.0;
  for (std::size_t i = 0; i < ang.weights.size(); ++i) {
    const double w = ang.weights[i];
    if (w == 0.0) continue;
    const auto th = ang.directions[i];
    const cplx D1 = directional(u, x, th, 1), D2 = directional(u, x, th, 2), D3 = directional(u, x, th, 3);
    // χ = 1 on [0, rT] unless α < 1.
    cplx s = 0.5 * D2 * rpow(2.0, 0.0, rT) + D3 / 6.0 * rpow(3.0, 0.0, rT);
    if (alpha < 1.0) s += D1 * rpow(1.0, 0.0, rT);

    auto f = [&](double r) {
      const cplx v = u(x[0] + r * th[0], x[1] + r * th[1]) - u0 - model.chi(r) * r * D1;
      return v * model.rho(r);
    };
    s += integrate_log(f, rT, r_osc, opt.panels_per_decade);
    if (r_osc < 1.0) s += integrate_uniform(f, r_osc, 1.0, osc_panels);

    // r > 1 mode by mode: ∫_1^∞ e^{iqr}ρ dr, log panels up to qR ≈ 50, then
    // an asymptotic tail.
    s -= u0 * tail0 + D1 * tail1;
    for (std::size_t m = 0; m < ks.size(); ++m) {
      const double q = ks[m][0] * th[0] + ks[m][1] * th[1];
      const cplx base = cs[m] * std::exp(cplx(0.0, ks[m][0] * x[0] + ks[m][1] * x[1]));
      if (std::abs(q) < 1e-14) {
        s += base * tail0;
        continue;
      }
      const double R1 = std::max(1.0, 50.0 / std::abs(q));
      cplx t = integrate_log([&](double r) { return std::exp(cplx(0.0, q * r)) * model.rho(r); }, 1.0, R1, 16.0);
      t += oscillatory_tail(model, q, R1);
      s += base * t;
    }
    total += w * s;
  }
  return total;
}

cplx generator_quadrature(const GridFunction& u, const LevyModel& model, std::size_t lattice_index,
                          const QuadratureOptions& opt) {
  const SpectralInterpolant s(u);
  return generator_quadrature(s, model, u.lattice().x(lattice_index), opt);
}

double subordination_gamma(double kappa, Subordination which) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("subordination order must lie in (0,1)");
  return which == Subordination::Fractional ? boost::math::tgamma(1.0 - kappa) / kappa : boost::math::tgamma(kappa);
}

double subordination_constant(double kappa, Subordination which) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw DomainError("subordination order must lie in (0,1)");
  const double a = 1e-10, b = 1e3;
  if (which == Subordination::Fractional) {
    const double mid =
        integrate_log([&](double t) { return std::pow(t, -kappa - 1.0) * -std::expm1(-t); }, a, b, 16.0);
    const double head = std::pow(a, 1.0 - kappa) / (1.0 - kappa) - std::pow(a, 2.0 - kappa) / (2.0 * (2.0 - kappa));
    return head + mid + std::pow(b, -kappa) / kappa;
  }
  const double mid = integrate_log([&](double t) { return std::pow(t, kappa - 1.0) * std::exp(-t); }, a, b, 16.0);
  const double head = std::pow(a, kappa) / kappa - std::pow(a, kappa + 1.0) / (kappa + 1.0);
  return head + mid;
}

}  // namespace gensmooth
