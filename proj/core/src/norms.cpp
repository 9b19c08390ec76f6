#include "gensmooth/norms.hpp"

#include <algorithm>
#include <cmath>

#include "gensmooth/errors.hpp"

namespace gensmooth {

double besov_norm_from_bands(const std::vector<double>& band_sup, const DyadicBank& bank, const ScalingFunction& sf,
                             double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  double n = 0.0;
  for (std::size_t j = 0; j < band_sup.size(); ++j)
    n = std::max(n, std::pow(sf.w(std::pow(bank.N, -static_cast<double>(j))), -beta) * band_sup[j]);
  return n;
}

double besov_norm(const GridFunction& u, const DyadicBank& bank, const ScalingFunction& sf, double beta) {
  return besov_norm_from_bands(band_sup_norms(u, bank), bank, sf, beta);
}

namespace {

double shifted_sup(const GridFunction& u, int s0, int s1) {
  const Lattice& lat = u.lattice();
  const int M = lat.points;
  const auto& v = u.values();
  double m = 0.0;
  if (lat.dim == 1) {
    for (int k = 0; k < M; ++k) m = std::max(m, std::abs(v[(k + s0) % M] - v[k]));
    return m;
  }
  for (int a = 0; a < M; ++a) {
    const std::size_t ra = static_cast<std::size_t>(a) * M;
    const std::size_t rb = static_cast<std::size_t>((a + s0 + M) % M) * M;
    for (int b = 0; b < M; ++b) m = std::max(m, std::abs(v[rb + (b + s1 + M) % M] - v[ra + b]));
  }
  return m;
}

}  // namespace

HolderNorm holder_norm(const GridFunction& u, const ScalingFunction& sf, double beta, std::size_t max_shifts) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
  const Lattice& lat = u.lattice();
  const int M = lat.points;
  const double h = lat.spacing();
  HolderNorm out;
  out.sup = u.sup_norm();
  out.regime = classify_holder_regime(sf, beta, estimate_alpha_prime(sf));
  out.converged = out.regime != HolderRegime::ConstantsOnly;

  // ±h give the same periodic sup, so only half of the shifts are needed.
  std::vector<std::array<int, 2>> shifts;
  if (lat.dim == 1) {
    for (int k = 1; k <= M / 2; ++k) shifts.push_back({k, 0});
  } else {
    const int R = M / 2;
    for (int a = 0; a <= R; ++a)
      for (int b = -R; b <= R; ++b) {
        if (a == 0 && b <= 0) continue;
        if (a * a + b * b <= R * R) shifts.push_back({a, b});
      }
    std::sort(shifts.begin(), shifts.end(), [](const auto& x, const auto& y) {
      return x[0] * x[0] + x[1] * x[1] < y[0] * y[0] + y[1] * y[1];
    });
    if (shifts.size() > max_shifts) {
      const std::size_t keep = max_shifts / 2;
      std::vector<std::array<int, 2>> sub(shifts.begin(), shifts.begin() + keep);
      const double stride = static_cast<double>(shifts.size() - keep) / static_cast<double>(max_shifts - keep);
      for (std::size_t i = 0; i < max_shifts - keep; ++i)
        sub.push_back(shifts[keep + static_cast<std::size_t>(i * stride)]);
      shifts.swap(sub);
    }
  }
  for (const auto& s : shifts) {
    const double len = h * std::hypot(static_cast<double>(s[0]), static_cast<double>(s[1]));
    const double q = shifted_sup(u, s[0], s[1]) / std::pow(sf.w(len), beta);
    if (q > out.seminorm) {
      out.seminorm = q;
      out.worst_shift = len;
    }
  }
  out.shifts = shifts.size();
  out.value = out.sup + out.seminorm;
  return out;
}

double reconstruction_constant(const DyadicBank& bank, const ScalingFunction& sf, double beta) {
  double c = 0.0;
  for (int j = 0; j <= bank.J_max; ++j) c += std::pow(sf.w(std::pow(bank.N, -j)), beta);
  return c;
}

InterpolationResult interpolation_check(const GridFunction& u, const DyadicBank& bank, const ScalingFunction& sf,
                                        double beta_lo, double beta_hi, double eps) {
  if (!(beta_lo > 0.0 && beta_lo < beta_hi)) throw DomainError("interpolation needs 0 < beta_lo < beta_hi");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("interpolation eps must lie in (0,1)");
  const std::vector<double> bands = band_sup_norms(u, bank);
  InterpolationResult r;
  const double theta = beta_lo / beta_hi;
  // x^θ y^{1−θ} ≤ θδx + (1−θ)δ^{−θ/(1−θ)} y with θδ = ε.
  const double delta = eps / theta;
  const double cy = (1.0 - theta) * std::pow(delta, -theta / (1.0 - theta));
  const double kmax = *std::max_element(bank.kernel_l1.begin(), bank.kernel_l1.end());
  r.C_eps = cy * kmax;
  r.lhs = besov_norm_from_bands(bands, bank, sf, beta_lo);
  r.rhs = eps * besov_norm_from_bands(bands, bank, sf, beta_hi) + r.C_eps * u.sup_norm();
  r.slack = r.rhs - r.lhs;
  r.pass = r.lhs <= r.rhs * (1.0 + 1e-12) + 1e-300;
  return r;
}

}  // namespace gensmooth
