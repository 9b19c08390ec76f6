#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace gensmooth {

using cplx = std::complex<double>;

// Periodic box [-Λ/2, Λ/2)^d sampled with M points per dimension.
struct Lattice {
  int dim = 1;
  double box = 2.0;
  int points = 4096;

  std::size_t size() const;
  double spacing() const { return box / points; }
  double coord(int k) const { return -0.5 * box + k * spacing(); }
  // Signed mode number of FFT index k, in [-M/2, M/2).
  int mode(int k) const { return k < points / 2 ? k : k - points; }
  double frequency(int k) const { return mode(k) / box; }
  double nyquist() const { return points / (2.0 * box); }
  // Frequency vector of a flat spectral index.
  std::array<double, 2> xi(std::size_t flat) const;
  std::array<int, 2> modes(std::size_t flat) const;
  std::array<double, 2> x(std::size_t flat) const;
  void validate() const;

  bool operator==(const Lattice& o) const {
    return dim == o.dim && box == o.box && points == o.points;
  }
  bool operator!=(const Lattice& o) const { return !(*this == o); }
};

Lattice default_lattice(int dim);

class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(const Lattice& lat);
  GridFunction(const Lattice& lat, std::vector<cplx> values);

  static GridFunction sample(const Lattice& lat, const std::function<cplx(double, double)>& f);

  const Lattice& lattice() const { return lat_; }
  // Mutable access drops the spectrum kept from inverse().
  std::vector<cplx>& values() {
    spectrum_.reset();
    return v_;
  }
  const std::vector<cplx>& values() const { return v_; }
  cplx& operator[](std::size_t i) {
    spectrum_.reset();
    return v_[i];
  }
  const cplx& operator[](std::size_t i) const { return v_[i]; }
  std::size_t size() const { return v_.size(); }

  double sup_norm() const;
  GridFunction& operator+=(const GridFunction& o);
  GridFunction& operator-=(const GridFunction& o);
  GridFunction& operator*=(cplx s);

  // Exact spectrum when the values came from inverse(), else null.
  const std::vector<cplx>* spectrum() const { return spectrum_.get(); }

 private:
  friend GridFunction inverse(const Lattice& lat, std::vector<cplx> spectrum);
  void combine(const GridFunction& o, double sign);

  Lattice lat_;
  std::vector<cplx> v_;
  std::shared_ptr<const std::vector<cplx>> spectrum_;
};

GridFunction operator-(GridFunction a, const GridFunction& b);
GridFunction operator+(GridFunction a, const GridFunction& b);
GridFunction operator*(cplx s, GridFunction a);

// Unnormalized forward DFT (kernel e^{-i2π k m/M}) and its exact inverse.
// forward() returns the kept spectrum of an inverse() result without
// transforming again, so multiplier chains do not pick up round-trip noise.
std::vector<cplx> forward(const GridFunction& u);
GridFunction inverse(const Lattice& lat, std::vector<cplx> spectrum);

// ℱ^{-1}[m ℱu] for a multiplier given per flat spectral index.
GridFunction apply_multiplier(const GridFunction& u, const std::vector<cplx>& m);
GridFunction apply_multiplier(const GridFunction& u, const std::vector<double>& m);

// Band-limited evaluation at arbitrary points from a spectrum.
class SpectralInterpolant {
 public:
  SpectralInterpolant() = default;
  SpectralInterpolant(const Lattice& lat, const std::vector<cplx>& spectrum, double drop = 1e-15);
  explicit SpectralInterpolant(const GridFunction& u, double drop = 1e-15);

  cplx operator()(double x, double y = 0.0) const;
  // Value and gradient/Hessian (spectral differentiation).
  cplx derivative(double x, double y, int dx, int dy) const;
  std::size_t terms() const { return coef_.size(); }
  const std::vector<cplx>& coefficients() const { return coef_; }
  const std::vector<std::array<double, 2>>& wavevectors() const { return k_; }
  cplx mean() const { return mean_; }

 private:
  Lattice lat_;
  std::vector<cplx> coef_;
  std::vector<std::array<double, 2>> k_;  // 2π ξ
  cplx mean_ = 0.0;
};

}  // namespace gensmooth
