#pragma once

#include <array>
#include <complex>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string_view>
#include <type_traits>
#include <vector>

// pchip in this Boost release calls isnan unqualified.
namespace boost::math::interpolators {
using std::isnan;
}
#include <boost/math/interpolators/pchip.hpp>

namespace gensmooth {

// 8-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::array<double, 8> x;
  std::array<double, 8> w;
};
const GaussRule& gauss8();

// Composite Gauss-Legendre on `panels` equal panels of [a, b]. Works for any
// integrand whose values form a vector space over double (double, complex).
template <class F, class R = std::invoke_result_t<F&, double>>
R integrate_uniform(F&& f, double a, double b, int panels) {
  const GaussRule& g = gauss8();
  const double h = (b - a) / panels;
  R total{};
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h;
    R s{};
    for (int i = 0; i < 8; ++i) s += g.w[i] * f(c + 0.5 * h * g.x[i]);
    total += 0.5 * h * s;
  }
  return total;
}

// Composite Gauss-Legendre of f(r) dr over [a, b], panels equally spaced in
// log r.
template <class F, class R = std::invoke_result_t<F&, double>>
R integrate_log(F&& f, double a, double b, double panels_per_decade = 4.0) {
  if (!(b > a) || !(a > 0.0)) return R{};
  const GaussRule& g = gauss8();
  const double la = std::log(a), lb = std::log(b);
  const int panels =
      std::max(1, static_cast<int>(std::ceil((lb - la) / std::log(10.0) * panels_per_decade)));
  const double h = (lb - la) / panels;
  R total{};
  for (int p = 0; p < panels; ++p) {
    const double c = la + (p + 0.5) * h;
    R s{};
    for (int i = 0; i < 8; ++i) {
      const double r = std::exp(c + 0.5 * h * g.x[i]);
      s += g.w[i] * f(r) * r;
    }
    total += 0.5 * h * s;
  }
  return total;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> log_grid(double lo, double hi, std::size_t n);

// Monotone cubic (PCHIP) interpolant, extended linearly past both ends.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;
  double x_front() const { return x0_; }
  double x_back() const { return x1_; }
  double slope_front() const { return s0_; }
  double slope_back() const { return s1_; }
  bool empty() const { return !impl_; }

 private:
  std::shared_ptr<boost::math::interpolators::pchip<std::vector<double>>> impl_;
  double x0_ = 0, x1_ = 0, y0_ = 0, y1_ = 0, s0_ = 0, s1_ = 0;
};

double pairwise_sum(const double* v, std::size_t n);

std::uint64_t fnv1a64(std::string_view bytes);

// φ_k(z) = Σ_n z^n / (n+k)!, the exponential-integrator functions.
std::complex<double> phi1(std::complex<double> z);
std::complex<double> phi2(std::complex<double> z);

}  // namespace gensmooth
