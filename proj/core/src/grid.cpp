#include "gensmooth/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gensmooth/errors.hpp"

namespace gensmooth {

std::size_t Lattice::size() const {
  const auto m = static_cast<std::size_t>(points);
  return dim == 1 ? m : m * m;
}

std::array<int, 2> Lattice::modes(std::size_t flat) const {
  if (dim == 1) return {mode(static_cast<int>(flat)), 0};
  const auto m = static_cast<std::size_t>(points);
  return {mode(static_cast<int>(flat / m)), mode(static_cast<int>(flat % m))};
}

std::array<double, 2> Lattice::xi(std::size_t flat) const {
  auto m = modes(flat);
  return {m[0] / box, m[1] / box};
}

std::array<double, 2> Lattice::x(std::size_t flat) const {
  if (dim == 1) return {coord(static_cast<int>(flat)), 0.0};
  const auto m = static_cast<std::size_t>(points);
  return {coord(static_cast<int>(flat / m)), coord(static_cast<int>(flat % m))};
}

void Lattice::validate() const {
  if (dim != 1 && dim != 2) throw ConfigError("lattice.dim", 0, "dimension must be 1 or 2");
  if (!(box > 0.0) || !std::isfinite(box)) throw ConfigError("lattice.box", 0, "box size must be positive");
  if (points < 4 || (points & (points - 1)) != 0)
    throw ConfigError("lattice.points", 0, "points per dimension must be a power of two >= 4");
}

Lattice default_lattice(int dim) {
  Lattice l;
  l.dim = dim;
  l.box = 2.0;
  l.points = dim == 1 ? 4096 : 512;
  return l;
}

GridFunction::GridFunction(const Lattice& lat) : lat_(lat), v_(lat.size(), cplx(0.0, 0.0)) {}

GridFunction::GridFunction(const Lattice& lat, std::vector<cplx> values) : lat_(lat), v_(std::move(values)) {
  if (v_.size() != lat_.size()) throw std::invalid_argument("value count does not match lattice");
}

GridFunction GridFunction::sample(const Lattice& lat, const std::function<cplx(double, double)>& f) {
  GridFunction g(lat);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto p = lat.x(i);
    g.v_[i] = f(p[0], p[1]);
  }
  return g;
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (const auto& z : v_) m = std::max(m, std::abs(z));
  return m;
}

void GridFunction::combine(const GridFunction& o, double sign) {
  if (!spectrum_ || !o.spectrum_) {
    spectrum_.reset();
    return;
  }
  auto sp = std::make_shared<std::vector<cplx>>(*spectrum_);
  for (std::size_t i = 0; i < sp->size(); ++i) (*sp)[i] += sign * (*o.spectrum_)[i];
  spectrum_ = std::move(sp);
}

GridFunction& GridFunction::operator+=(const GridFunction& o) {
  if (o.lat_ != lat_) throw std::invalid_argument("lattice mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  combine(o, 1.0);
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& o) {
  if (o.lat_ != lat_) throw std::invalid_argument("lattice mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  combine(o, -1.0);
  return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
  for (auto& z : v_) z *= s;
  if (spectrum_) {
    auto sp = std::make_shared<std::vector<cplx>>(*spectrum_);
    for (auto& z : *sp) z *= s;
    spectrum_ = std::move(sp);
  }
  return *this;
}

GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
GridFunction operator*(cplx s, GridFunction a) { return a *= s; }

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// Plans are created once per shape; fftw_execute_dft is reentrant.
PlanPair plans_for(const Lattice& lat) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(lat.dim, lat.points);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> buf(lat.size());
  auto* p = reinterpret_cast<fftw_complex*>(buf.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  PlanPair pp;
  if (lat.dim == 1) {
    pp.fwd = fftw_plan_dft_1d(lat.points, p, p, FFTW_FORWARD, flags);
    pp.bwd = fftw_plan_dft_1d(lat.points, p, p, FFTW_BACKWARD, flags);
  } else {
    pp.fwd = fftw_plan_dft_2d(lat.points, lat.points, p, p, FFTW_FORWARD, flags);
    pp.bwd = fftw_plan_dft_2d(lat.points, lat.points, p, p, FFTW_BACKWARD, flags);
  }
  cache.emplace(key, pp);
  return pp;
}

void execute(fftw_plan plan, std::vector<cplx>& data) {
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, p, p);
}

}  // namespace

std::vector<cplx> forward(const GridFunction& u) {
  if (u.spectrum()) return *u.spectrum();
  std::vector<cplx> s = u.values();
  execute(plans_for(u.lattice()).fwd, s);
  return s;
}

GridFunction inverse(const Lattice& lat, std::vector<cplx> spectrum) {
  if (spectrum.size() != lat.size()) throw std::invalid_argument("spectrum size does not match lattice");
  auto kept = std::make_shared<const std::vector<cplx>>(spectrum);
  execute(plans_for(lat).bwd, spectrum);
  const double scale = 1.0 / static_cast<double>(lat.size());
  for (auto& z : spectrum) z *= scale;
  GridFunction g(lat, std::move(spectrum));
  g.spectrum_ = std::move(kept);
  return g;
}

GridFunction apply_multiplier(const GridFunction& u, const std::vector<cplx>& m) {
  auto s = forward(u);
  if (m.size() != s.size()) throw std::invalid_argument("multiplier size does not match lattice");
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= m[i];
  return inverse(u.lattice(), std::move(s));
}

GridFunction apply_multiplier(const GridFunction& u, const std::vector<double>& m) {
  auto s = forward(u);
  if (m.size() != s.size()) throw std::invalid_argument("multiplier size does not match lattice");
  for (std::size_t i = 0; i < s.size(); ++i) s[i] *= m[i];
  return inverse(u.lattice(), std::move(s));
}

SpectralInterpolant::SpectralInterpolant(const Lattice& lat, const std::vector<cplx>& spectrum, double drop)
    : lat_(lat) {
  double peak = 0.0;
  for (const auto& z : spectrum) peak = std::max(peak, std::abs(z));
  const double n = static_cast<double>(lat.size());
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (std::abs(spectrum[i]) <= drop * peak || peak == 0.0) continue;
    auto m = lat.modes(i);
    // x_k starts at -Λ/2, so the coefficient picks up (-1)^(m1+m2).
    const double sign = ((m[0] + m[1]) % 2 == 0) ? 1.0 : -1.0;
    cplx c = spectrum[i] / n * sign;
    if (m[0] == 0 && m[1] == 0) mean_ = c;
    coef_.push_back(c);
    k_.push_back({two_pi * m[0] / lat.box, two_pi * m[1] / lat.box});
  }
}

SpectralInterpolant::SpectralInterpolant(const GridFunction& u, double drop)
    : SpectralInterpolant(u.lattice(), forward(u), drop) {}

cplx SpectralInterpolant::operator()(double x, double y) const {
  cplx s = 0.0;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    const double ph = k_[i][0] * x + k_[i][1] * y;
    s += coef_[i] * cplx(std::cos(ph), std::sin(ph));
  }
  return s;
}

cplx SpectralInterpolant::derivative(double x, double y, int dx, int dy) const {
  cplx s = 0.0;
  const cplx I(0.0, 1.0);
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    const double ph = k_[i][0] * x + k_[i][1] * y;
    cplx f = coef_[i] * cplx(std::cos(ph), std::sin(ph));
    for (int a = 0; a < dx; ++a) f *= I * k_[i][0];
    for (int b = 0; b < dy; ++b) f *= I * k_[i][1];
    s += f;
  }
  return s;
}

}  // namespace gensmooth
