#include "gensmooth/bank.hpp"

#include <cmath>
#include <string>

#include "gensmooth/errors.hpp"

namespace gensmooth {

namespace {

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x), b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

void check_band(const DyadicBank& bank, int j) {
  if (j < 0 || j > bank.J_max)
    throw DomainError("band index " + std::to_string(j) + " outside 0.." + std::to_string(bank.J_max));
}

void check_lattice(const GridFunction& u, const DyadicBank& bank) {
  if (u.lattice() != bank.lattice) throw DomainError("grid function lattice differs from the bank lattice");
}

}  // namespace

double lp_cutoff(double s, double N) { return smooth_step((N - s) / (N - 1.0)); }

double lp_bump(double s, double N) { return lp_cutoff(s, N) - lp_cutoff(N * s, N); }

DyadicBank build_bank(double N, const Lattice& lattice) {
  lattice.validate();
  if (!(N > 3.0)) throw ConfigError("bank.N", 0, "base N must exceed 3");
  const double nyq = lattice.nyquist();
  if (nyq < N * N) throw ConfigError("lattice.points", 0, "lattice too coarse: Nyquist below N^2");
  DyadicBank b;
  b.N = N;
  b.lattice = lattice;
  b.J_max = 0;
  while (std::pow(N, b.J_max + 2) <= nyq * (1.0 + 1e-12)) ++b.J_max;
  const std::size_t n = lattice.size();
  b.phi.assign(b.J_max + 1, std::vector<double>(n, 0.0));
  b.tilde.assign(b.J_max + 1, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    const auto xi = lattice.xi(i);
    const double s = std::hypot(xi[0], xi[1]);
    b.phi[0][i] = lp_cutoff(s, N);
    b.tilde[0][i] = b.phi[0][i] + lp_bump(s / N, N);
    for (int j = 1; j <= b.J_max; ++j) {
      const double sj = s * std::pow(N, -j);
      b.phi[j][i] = lp_bump(sj, N);
      b.tilde[j][i] = lp_bump(N * sj, N) + lp_bump(sj, N) + lp_bump(sj / N, N);
    }
  }
  // Discrete convolution weights of each band; their ℓ¹ sum bounds |u∗φ_j|₀/|u|₀ on the lattice.
  for (int j = 0; j <= b.J_max; ++j) {
    const GridFunction k = inverse(lattice, std::vector<cplx>(b.phi[j].begin(), b.phi[j].end()));
    double s = 0.0;
    for (const auto& v : k.values()) s += std::abs(v);
    b.kernel_l1.push_back(s);
  }
  return b;
}

GridFunction project(const GridFunction& u, const DyadicBank& bank, int j) {
  check_band(bank, j);
  check_lattice(u, bank);
  return apply_multiplier(u, bank.phi[j]);
}

GridFunction project_tilde(const GridFunction& u, const DyadicBank& bank, int j) {
  check_band(bank, j);
  check_lattice(u, bank);
  return apply_multiplier(u, bank.tilde[j]);
}

std::vector<GridFunction> decompose(const GridFunction& u, const DyadicBank& bank) {
  check_lattice(u, bank);
  const std::vector<cplx> spec = forward(u);
  std::vector<GridFunction> out;
  out.reserve(bank.bands());
  for (int j = 0; j <= bank.J_max; ++j) {
    std::vector<cplx> s(spec.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = spec[i] * bank.phi[j][i];
    out.push_back(inverse(bank.lattice, std::move(s)));
  }
  return out;
}

std::vector<double> band_sup_norms(const GridFunction& u, const DyadicBank& bank) {
  std::vector<double> out;
  for (const auto& b : decompose(u, bank)) out.push_back(b.sup_norm());
  return out;
}

GridFunction smooth_approx(const GridFunction& u, const DyadicBank& bank, int n) {
  if (n < 0 || n + 2 > bank.J_max)
    throw DomainError("smooth_approx needs 0 <= n and n+2 <= J_max = " + std::to_string(bank.J_max));
  check_lattice(u, bank);
  std::vector<double> m(bank.lattice.size(), 0.0);
  for (int j = 0; j <= n + 2; ++j)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += bank.phi[j][i];
  return apply_multiplier(u, m);
}

}  // namespace gensmooth
