#include "gensmooth/bernstein.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gensmooth/errors.hpp"

namespace gensmooth {

using C = std::complex<double>;

namespace {

void require_open_unit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0))
    throw DomainError(std::string("Bernstein parameter ") + name + " must lie in (0,1)");
}

// ln cosh z for Re z >= 0 without overflow.
C log_cosh(C z) { return z + std::log(1.0 + std::exp(-2.0 * z)) - std::log(2.0); }

}  // namespace

BernsteinPhi::BernsteinPhi(int kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {
  switch (kind_) {
    case 1:
      if (params_.empty()) throw DomainError("Bernstein kind 1 needs at least one exponent");
      for (double a : params_) require_open_unit(a, "alpha_i");
      break;
    case 2:
      if (params_.size() != 2) throw DomainError("Bernstein kind 2 needs (alpha, beta)");
      require_open_unit(params_[0], "alpha");
      require_open_unit(params_[1], "beta");
      break;
    case 3:
      if (params_.size() != 2) throw DomainError("Bernstein kind 3 needs (alpha, beta)");
      require_open_unit(params_[0], "alpha");
      if (!(params_[1] > 0.0 && params_[1] < 1.0 - params_[0]))
        throw DomainError("Bernstein kind 3 needs beta in (0, 1-alpha)");
      break;
    case 4:
      if (params_.size() != 1) throw DomainError("Bernstein kind 4 needs (alpha)");
      require_open_unit(params_[0], "alpha");
      break;
    default:
      throw DomainError("Bernstein kind must be 1..4");
  }
}

double BernsteinPhi::operator()(double r) const {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("Bernstein argument must be finite and >= 0");
  if (r == 0.0) return 0.0;
  switch (kind_) {
    case 1: {
      double s = 0.0;
      for (double a : params_) s += std::pow(r, a);
      return s;
    }
    case 2:
      return std::pow(r + std::pow(r, params_[0]), params_[1]);
    case 3:
      return std::pow(r, params_[0]) * std::pow(std::log1p(r), params_[1]);
    default:
      return std::pow(log_cosh(C(std::sqrt(r), 0.0)).real(), params_[0]);
  }
}

C BernsteinPhi::derivative(C s) const {
  switch (kind_) {
    case 1: {
      C d = 0.0;
      for (double a : params_) d += a * std::pow(s, a - 1.0);
      return d;
    }
    case 2: {
      const double a = params_[0], b = params_[1];
      return b * std::pow(s + std::pow(s, a), b - 1.0) * (1.0 + a * std::pow(s, a - 1.0));
    }
    case 3: {
      const double a = params_[0], b = params_[1];
      const C L = std::log(1.0 + s);
      return a * std::pow(s, a - 1.0) * std::pow(L, b) + std::pow(s, a) * b * std::pow(L, b - 1.0) / (1.0 + s);
    }
    default: {
      const double a = params_[0];
      const C z = std::sqrt(s);
      return a * std::pow(log_cosh(z), a - 1.0) * std::tanh(z) / (2.0 * z);
    }
  }
}

double BernsteinPhi::delta1() const {
  switch (kind_) {
    case 1:
      return *std::min_element(params_.begin(), params_.end());
    case 2:
      return params_[0] * params_[1];
    case 3:
      return params_[0];
    default:
      return 0.5 * params_[0];
  }
}

double BernsteinPhi::delta2() const {
  switch (kind_) {
    case 1:
      return *std::max_element(params_.begin(), params_.end());
    case 2:
      return params_[1];
    case 3:
      return params_[0] + params_[1];
    default:
      return params_[0];
  }
}

double BernsteinPhi::delta_infinity() const {
  switch (kind_) {
    case 1:
      return *std::max_element(params_.begin(), params_.end());
    case 2:
      return params_[1];
    case 3:
      return params_[0];
    default:
      return 0.5 * params_[0];
  }
}

double BernsteinPhi::delta_zero() const {
  switch (kind_) {
    case 1:
      return *std::min_element(params_.begin(), params_.end());
    case 2:
      return params_[0] * params_[1];
    case 3:
      return params_[0] + params_[1];
    default:
      return params_[0];
  }
}

double talbot_inverse(const std::function<C(C)>& F, double t, int nodes) {
  const double M = nodes;
  const double r = 2.0 * M / (5.0 * t);
  double sum = 0.5 * (F(C(r, 0.0)) * std::exp(r * t)).real();
  for (int k = 1; k < nodes; ++k) {
    const double th = k * std::numbers::pi / M;
    const double cot = std::cos(th) / std::sin(th);
    const C S(r * th * cot, r * th);
    const double sigma = th + (th * cot - 1.0) * cot;
    sum += (std::exp(t * S) * F(S) * C(1.0, sigma)).real();
  }
  return r / M * sum;
}

double BernsteinPhi::levy_density(double t) const {
  if (!(t > 0.0)) throw DomainError("Levy density argument must be positive");
  if (kind_ == 1) {
    double s = 0.0;
    for (double a : params_) s += a / std::tgamma(1.0 - a) * std::pow(t, -1.0 - a);
    return s;
  }
  return talbot_inverse([this](C s) { return derivative(s); }, t) / t;
}

namespace {
constexpr double kLogTMin = -30.0 * 2.302585092994046;
constexpr double kLogTMax = 30.0 * 2.302585092994046;
constexpr int kTPerDecade = 20;
constexpr double kRMin = 1e-10, kRMax = 1e10;
constexpr int kRPerDecade = 16;
}  // namespace

BernsteinKernel::BernsteinKernel(BernsteinPhi phi, int dim) : phi_(std::move(phi)), dim_(dim) {
  if (dim_ != 1 && dim_ != 2) throw DomainError("dimension must be 1 or 2");
  const int n = static_cast<int>(std::lround(60.0 * kTPerDecade)) + 1;
  log_t_.resize(n);
  tlambda_.resize(n);
  for (int i = 0; i < n; ++i) {
    log_t_[i] = kLogTMin + (kLogTMax - kLogTMin) * i / (n - 1);
    const double t = std::exp(log_t_[i]);
    tlambda_[i] = t * phi_.levy_density(t);
  }
  // t·λ(t) ≈ c t^{-p} at both ends.
  auto fit = [&](int i0, int i1, double& c, double& p) {
    const double slope = (std::log(tlambda_[i1]) - std::log(tlambda_[i0])) / (log_t_[i1] - log_t_[i0]);
    p = -slope;
    c = tlambda_[i0] * std::exp(p * log_t_[i0]);
  };
  fit(0, 4, small_c_, small_p_);
  fit(n - 5, n - 1, large_c_, large_p_);

  std::vector<double> lr, lj;
  const int nr = static_cast<int>(std::lround(std::log10(kRMax / kRMin) * kRPerDecade)) + 1;
  for (int i = 0; i < nr; ++i) {
    const double r = kRMin * std::pow(10.0, static_cast<double>(i) / kRPerDecade);
    lr.push_back(std::log(r));
    lj.push_back(std::log(direct(r)));
  }
  log_j_ = MonotoneCubic(std::move(lr), std::move(lj));
}

double BernsteinKernel::direct(double r) const {
  if (!(r > 0.0)) throw DomainError("kernel radius must be positive");
  const double q = r * r / 4.0;
  const double hd = 0.5 * dim_;
  const double pref = std::pow(4.0 * std::numbers::pi, -hd);
  const std::size_t n = log_t_.size();
  const double h = log_t_[1] - log_t_[0];
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = std::exp(log_t_[i]);
    const double wgt = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    s += wgt * std::pow(t, -hd) * std::exp(-q / t) * tlambda_[i];
  }
  s *= h;
  const double t0 = std::exp(log_t_.front()), t1 = std::exp(log_t_.back());
  // ∫ t^{-d/2-1-p} e^{-q/t} dt over the tails in closed form.
  const double a0 = hd + small_p_, a1 = hd + large_p_;
  double tail0 = small_c_ * std::pow(q, -a0) * boost::math::tgamma(a0, q / t0);
  double tail1 = large_c_ * std::pow(q, -a1) * boost::math::tgamma_lower(a1, q / t1);
  return pref * (s + tail0 + tail1);
}

double BernsteinKernel::operator()(double r) const {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("kernel radius must be positive and finite");
  return std::exp(log_j_(std::log(r)));
}

}  // namespace gensmooth
