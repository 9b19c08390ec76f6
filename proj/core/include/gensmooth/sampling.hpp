#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "gensmooth/levy_model.hpp"

namespace gensmooth {

using Point = std::array<double, 2>;

// Counter-based stream: the n-th draw depends only on (seed, stream, n).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  // Uniform on the open interval (0,1).
  double uniform();
  double normal();
  double exponential() { return -std::log(uniform()); }
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

// Jumps larger than eps are compound Poisson, the rest are replaced by a
// Gaussian with the same covariance; the drift reproduces the χ convention.
class IncrementSampler {
 public:
  IncrementSampler(const LevyModel& model, double eps);

  Point sample(double t, RngStream& rng) const;
  // Positions Z_{t_i} along one path, times sorted ascending and positive.
  std::vector<Point> path(const std::vector<double>& times, RngStream& rng) const;

  double eps() const { return eps_; }
  double jump_rate() const { return rate_; }
  const Point& drift() const { return drift_; }
  // Small-jump covariance per unit time (row-major 2x2).
  const std::array<double, 4>& covariance() const { return cov_; }
  int dim() const { return dim_; }

 private:
  double jump_radius(RngStream& rng) const;
  Point jump(RngStream& rng) const;
  Point gaussian(double dt, RngStream& rng) const;

  int dim_;
  double eps_;
  double rate_;
  Point drift_{0.0, 0.0};
  std::array<double, 4> cov_{0, 0, 0, 0};
  std::array<double, 3> chol_{0, 0, 0};
  std::vector<Point> dirs_;
  std::vector<double> dir_cdf_;
  bool pareto_;
  double pareto_alpha_ = 1.0;
  MonotoneCubic inverse_;  // -ln(ς/ς(eps)) -> ln r
  double table_end_ = 0.0;
  PowerTail far_;
  double far_total_ = 0.0;
};

Point sample_increment(const LevyModel& model, double t, double eps, RngStream& rng);

}  // namespace gensmooth
