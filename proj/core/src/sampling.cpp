#include "gensmooth/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gensmooth/errors.hpp"

namespace gensmooth {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

std::uint64_t RngStream::next() {
  if (counter_ == ~0ULL) throw SamplingError("random stream exhausted");
  return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double RngStream::uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u = uniform(), v = uniform();
  const double m = std::sqrt(-2.0 * std::log(u));
  spare_ = m * std::sin(2.0 * std::numbers::pi * v);
  has_spare_ = true;
  return m * std::cos(2.0 * std::numbers::pi * v);
}

IncrementSampler::IncrementSampler(const LevyModel& model, double eps) : dim_(model.dim()), eps_(eps) {
  if (!(eps >= kRadialMin && eps <= 1.0)) throw SamplingError("eps must lie in [1e-8, 1]");
  const double inf = std::numeric_limits<double>::infinity();
  const auto& ang = model.angular();
  const double W = ang.total();

  rate_ = tail_mass(model, eps, 8.0);
  double acc = 0.0;
  Point mtheta{0.0, 0.0};
  std::array<double, 4> second{0, 0, 0, 0};
  for (std::size_t i = 0; i < ang.weights.size(); ++i) {
    if (ang.weights[i] <= 0.0) continue;
    acc += ang.weights[i];
    dirs_.push_back(ang.directions[i]);
    dir_cdf_.push_back(acc / W);
    for (int a = 0; a < 2; ++a) {
      mtheta[a] += ang.weights[i] * ang.directions[i][a];
      for (int b = 0; b < 2; ++b) second[2 * a + b] += ang.weights[i] * ang.directions[i][a] * ang.directions[i][b];
    }
  }
  dir_cdf_.back() = 1.0;

  // radial_power_integral already multiplies by W.
  const double r2_small = radial_power_integral(model, 2.0, 0.0, eps, 8.0) / W;
  for (int k = 0; k < 4; ++k) cov_[k] = second[k] * r2_small;
  chol_[0] = std::sqrt(cov_[0]);
  if (dim_ == 2) {
    chol_[1] = chol_[0] > 0.0 ? cov_[2] / chol_[0] : 0.0;
    chol_[2] = std::sqrt(std::max(0.0, cov_[3] - chol_[1] * chol_[1]));
  }

  double m1 = 0.0;
  const double alpha = model.order();
  if (alpha > 1.0)
    m1 = -radial_power_integral(model, 1.0, eps, inf, 8.0) / W;
  else if (alpha == 1.0)
    m1 = -radial_power_integral(model, 1.0, eps, 1.0, 8.0) / W;
  else
    m1 = radial_power_integral(model, 1.0, 0.0, eps, 8.0) / W;
  if (!std::isfinite(m1)) throw SamplingError("compensator integral diverges for this model");
  for (int a = 0; a < 2; ++a) drift_[a] = mtheta[a] * m1;
  if (std::abs(mtheta[0]) + std::abs(mtheta[1]) < 1e-14 * W) drift_ = {0.0, 0.0};

  pareto_ = model.kind() == DensityKind::StableLike;
  if (pareto_) {
    pareto_alpha_ = alpha;
    return;
  }
  const double s0 = rate_;
  std::vector<double> x, y;
  table_end_ = kRadialMax;
  for (double r : log_grid(eps, kRadialMax, static_cast<std::size_t>(std::ceil(24.0 * std::log10(kRadialMax / eps))) + 1)) {
    const double s = tail_mass(model, r, 8.0);
    const double v = -std::log(s / s0);
    if (!x.empty() && !(v > x.back())) continue;
    x.push_back(v);
    y.push_back(std::log(r));
  }
  if (x.size() < 4) throw SamplingError("tail mass table for jump sampling is degenerate");
  inverse_ = MonotoneCubic(std::move(x), std::move(y));
  far_ = model.tail_infinity();
  far_total_ = tail_mass(model, kRadialMax, 8.0) / s0;
}

double IncrementSampler::jump_radius(RngStream& rng) const {
  const double u = rng.uniform();
  if (pareto_) return eps_ * std::pow(u, -1.0 / pareto_alpha_);
  if (u < far_total_) {
    // ς(r)/ς(eps) = far_total · (r/rmax)^{-p} beyond the table.
    return table_end_ * std::pow(u / far_total_, -1.0 / far_.exponent);
  }
  return std::exp(inverse_(-std::log(u)));
}

Point IncrementSampler::jump(RngStream& rng) const {
  const double r = jump_radius(rng);
  std::size_t k = 0;
  if (dirs_.size() > 1) {
    const double u = rng.uniform();
    k = static_cast<std::size_t>(std::lower_bound(dir_cdf_.begin(), dir_cdf_.end(), u) - dir_cdf_.begin());
    k = std::min(k, dirs_.size() - 1);
  }
  return {r * dirs_[k][0], r * dirs_[k][1]};
}

Point IncrementSampler::gaussian(double dt, RngStream& rng) const {
  const double s = std::sqrt(dt);
  if (dim_ == 1) return {s * chol_[0] * rng.normal(), 0.0};
  const double g0 = rng.normal(), g1 = rng.normal();
  return {s * chol_[0] * g0, s * (chol_[1] * g0 + chol_[2] * g1)};
}

Point IncrementSampler::sample(double t, RngStream& rng) const {
  if (!(t > 0.0)) throw DomainError("increment time must be positive");
  return path({t}, rng).front();
}

std::vector<Point> IncrementSampler::path(const std::vector<double>& times, RngStream& rng) const {
  std::vector<Point> out;
  out.reserve(times.size());
  Point z{0.0, 0.0};
  double now = 0.0;
  double next_jump = rate_ > 0.0 ? rng.exponential() / rate_ : std::numeric_limits<double>::infinity();
  for (double t : times) {
    if (!(t >= now)) throw DomainError("path times must be nondecreasing and positive");
    while (next_jump <= t) {
      const Point j = jump(rng);
      z[0] += j[0];
      z[1] += j[1];
      next_jump += rng.exponential() / rate_;
    }
    const double dt = t - now;
    if (dt > 0.0) {
      const Point g = gaussian(dt, rng);
      z[0] += g[0] + dt * drift_[0];
      z[1] += g[1] + dt * drift_[1];
    }
    now = t;
    out.push_back(z);
  }
  return out;
}

Point sample_increment(const LevyModel& model, double t, double eps, RngStream& rng) {
  return IncrementSampler(model, eps).sample(t, rng);
}

}  // namespace gensmooth
