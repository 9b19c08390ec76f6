#include "gensmooth/numerics.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <stdexcept>

namespace gensmooth {

const GaussRule& gauss8() {
  static const GaussRule rule = [] {
    using G = boost::math::quadrature::gauss<double, 8>;
    GaussRule r{};
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    for (int i = 0; i < 4; ++i) {
      r.x[i] = -a[3 - i];
      r.w[i] = w[3 - i];
      r.x[7 - i] = a[3 - i];
      r.w[7 - i] = w[3 - i];
    }
    return r;
  }();
  return rule;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("fit_line needs >= 2 paired points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxx > 0 ? sxy / sxx : 0.0;
  f.intercept = my - f.slope * mx;
  f.r2 = (sxx > 0 && syy > 0) ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double a = std::log(lo), b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = n == 1 ? lo : std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  if (n > 1) {
    g.front() = lo;
    g.back() = hi;
  }
  return g;
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.size() < 4)
    throw std::invalid_argument("monotone interpolation needs >= 4 paired points");
  x0_ = x.front();
  x1_ = x.back();
  y0_ = y.front();
  y1_ = y.back();
  s0_ = (y[1] - y[0]) / (x[1] - x[0]);
  const std::size_t n = x.size();
  s1_ = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  impl_ = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(std::move(x),
                                                                                   std::move(y));
}

double MonotoneCubic::operator()(double x) const {
  if (x <= x0_) return y0_ + s0_ * (x - x0_);
  if (x >= x1_) return y1_ + s1_ * (x - x1_);
  return (*impl_)(x);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double pairwise_sum(const double* v, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

namespace {
std::complex<double> phi_series(std::complex<double> z, int k) {
  // Σ_{n≥0} z^n/(n+k)!
  double fact = 1.0;
  for (int i = 2; i <= k; ++i) fact *= i;
  std::complex<double> term = 1.0 / fact, sum = term;
  for (int n = 1; n < 30; ++n) {
    term *= z / static_cast<double>(n + k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}
}  // namespace

std::complex<double> phi1(std::complex<double> z) {
  if (std::abs(z) < 0.5) return phi_series(z, 1);
  return (std::exp(z) - 1.0) / z;
}

std::complex<double> phi2(std::complex<double> z) {
  if (std::abs(z) < 1.0) return phi_series(z, 2);
  return (std::exp(z) - 1.0 - z) / (z * z);
}

}  // namespace gensmooth
