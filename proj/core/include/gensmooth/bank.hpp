#pragma once

#include <vector>

#include "gensmooth/grid.hpp"

namespace gensmooth {

// η = 1 on |ξ| ≤ 1, η = 0 on |ξ| ≥ N, smooth exp(-1/x) transition.
double lp_cutoff(double s, double N);
// φ(ξ) = η(ξ) − η(Nξ), supported in 1/N ≤ |ξ| ≤ N.
double lp_bump(double s, double N);

struct DyadicBank {
  double N = 4.0;
  int J_max = 0;
  Lattice lattice;
  std::vector<std::vector<double>> phi;    // ℱφ_j per flat spectral index
  std::vector<std::vector<double>> tilde;  // ℱφ̃_j
  std::vector<double> kernel_l1;           // ℓ¹ norm of the discrete convolution weights of φ_j

  int bands() const { return J_max + 1; }
};

DyadicBank build_bank(double N, const Lattice& lattice);

GridFunction project(const GridFunction& u, const DyadicBank& bank, int j);
GridFunction project_tilde(const GridFunction& u, const DyadicBank& bank, int j);
// All bands from one forward transform.
std::vector<GridFunction> decompose(const GridFunction& u, const DyadicBank& bank);
std::vector<double> band_sup_norms(const GridFunction& u, const DyadicBank& bank);

// Σ_{j ≤ n+2} u∗φ_j
GridFunction smooth_approx(const GridFunction& u, const DyadicBank& bank, int n);

}  // namespace gensmooth
