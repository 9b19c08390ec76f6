#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "gensmooth/numerics.hpp"

namespace gensmooth {

// Bernstein functions of the four supported families:
//   1: Σ r^{α_i}            params = {α_1, ..., α_n}
//   2: (r + r^α)^β          params = {α, β}
//   3: r^α (ln(1+r))^β      params = {α, β}, β < 1 - α
//   4: (ln cosh √r)^α       params = {α}
class BernsteinPhi {
 public:
  BernsteinPhi(int kind, std::vector<double> params);

  int kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }

  double operator()(double r) const;
  std::complex<double> derivative(std::complex<double> s) const;

  // Exponents of the two-sided ratio bound (R/r)^{δ1} ≲ φ(R)/φ(r) ≲ (R/r)^{δ2}.
  double delta1() const;
  double delta2() const;
  // Growth exponent of φ at infinity; the induced jump measure has order 2×this.
  double delta_infinity() const;
  double delta_zero() const;

  // Density of the Lévy measure Λ(dt) of φ.
  double levy_density(double t) const;

 private:
  int kind_;
  std::vector<double> params_;
};

// Numerical inverse Laplace transform on the fixed Talbot contour.
double talbot_inverse(const std::function<std::complex<double>(std::complex<double>)>& F, double t,
                      int nodes = 24);

// Subordinated heat kernel j(r) = ∫ (4πt)^{-d/2} e^{-r²/4t} Λ(dt), tabulated in
// log-log coordinates.
class BernsteinKernel {
 public:
  BernsteinKernel(BernsteinPhi phi, int dim);

  double operator()(double r) const;
  // Direct quadrature of j at r (the table is built from this).
  double direct(double r) const;

  const BernsteinPhi& phi() const { return phi_; }
  int dim() const { return dim_; }

 private:
  BernsteinPhi phi_;
  int dim_;
  std::vector<double> log_t_, tlambda_;
  double small_c_ = 0, small_p_ = 0, large_c_ = 0, large_p_ = 0;
  MonotoneCubic log_j_;
};

}  // namespace gensmooth
