#include "gensmooth/cauchy.hpp"

#include <algorithm>
#include <cmath>

#include "gensmooth/errors.hpp"
#include "gensmooth/numerics.hpp"
#include "gensmooth/sampling.hpp"

namespace gensmooth {

Forcing Forcing::constant(GridFunction f) {
  Forcing F;
  F.values_.push_back(std::move(f));
  return F;
}

Forcing Forcing::nodes(std::vector<GridFunction> f) {
  if (f.empty()) throw DomainError("forcing needs at least one node");
  for (const auto& v : f)
    if (v.lattice() != f.front().lattice()) throw DomainError("forcing nodes live on different lattices");
  Forcing F;
  F.values_ = std::move(f);
  return F;
}

SolveResult solve_spectral_from(const GridFunction& u0, const Forcing& f, const SymbolGrid& g, double lambda,
                                double T, int K, int stride) {
  if (!(lambda >= 0.0)) throw DomainError("lambda must be nonnegative");
  if (!(T > 0.0) || K < 1) throw DomainError("need T > 0 and K >= 1");
  if (stride < 1 || K % stride != 0) throw DomainError("storage stride must divide K");
  if (f.lattice() != g.lattice || u0.lattice() != g.lattice)
    throw DomainError("forcing, state and symbol lattices differ");
  if (!f.is_constant() && f.node_count() != static_cast<std::size_t>(K) + 1)
    throw DomainError("forcing must have K+1 nodes or be time-constant");

  const double h = T / K;
  const std::size_t n = g.values.size();
  std::vector<cplx> E(n), Wa(n), Wb(n);
  SolveResult res;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx z = (g.values[i] - lambda) * h;
    E[i] = std::exp(z);
    const cplx p1 = phi1(z), p2 = phi2(z);
    Wa[i] = h * (p1 - p2);
    Wb[i] = h * p2;
    if (!std::isfinite(std::abs(E[i])) || !std::isfinite(std::abs(Wa[i])) || !std::isfinite(std::abs(Wb[i]))) {
      E[i] = 0.0;
      Wa[i] = Wb[i] = 0.0;
      ++res.clamped;
    }
  }
  res.lambda = lambda;
  res.T = T;
  res.K = K;
  res.stride = stride;
  res.model_id = g.model_id;
  std::vector<cplx> uh = forward(u0);
  std::vector<cplx> fk = forward(f.at(0)), fk1;
  res.times.push_back(0.0);
  res.u.push_back(u0);
  for (int k = 0; k < K; ++k) {
    fk1 = f.is_constant() ? fk : forward(f.at(k + 1));
    for (std::size_t i = 0; i < n; ++i) uh[i] = E[i] * uh[i] + Wa[i] * fk[i] + Wb[i] * fk1[i];
    fk.swap(fk1);
    if ((k + 1) % stride == 0) {
      res.times.push_back(h * (k + 1));
      res.u.push_back(inverse(g.lattice, uh));
    }
  }
  return res;
}

SolveResult solve_spectral(const Forcing& f, const SymbolGrid& g, double lambda, double T, int K, int stride) {
  return solve_spectral_from(GridFunction(g.lattice), f, g, lambda, T, K, stride);
}

McEstimate solve_mc(const Forcing& f, const LevyModel& model, double lambda, double T,
                    const std::vector<std::array<double, 2>>& probes, const McOptions& mc, int sigma_panels) {
  if (!(lambda >= 0.0) || !(T > 0.0)) throw DomainError("need lambda >= 0 and T > 0");
  if (mc.paths < 2) throw SamplingError("Monte Carlo needs at least two paths");
  const IncrementSampler sampler(model, mc.eps);
  const std::size_t nodes = f.node_count();
  std::vector<SpectralInterpolant> fi;
  for (const auto& v : f.values()) fi.emplace_back(v, 1e-14);

  // σ quadrature on [0, T]; f(T − σ) interpolated linearly between forcing nodes.
  const GaussRule& gr = gauss8();
  std::vector<double> sig, wt;
  const double hp = T / sigma_panels;
  for (int p = 0; p < sigma_panels; ++p)
    for (int i = 0; i < 8; ++i) {
      sig.push_back(hp * (p + 0.5 + 0.5 * gr.x[i]));
      wt.push_back(0.5 * hp * gr.w[i] * std::exp(-lambda * sig.back()));
    }
  std::vector<std::size_t> lo(sig.size());
  std::vector<double> frac(sig.size(), 0.0);
  if (nodes > 1) {
    const double dt = T / static_cast<double>(nodes - 1);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const double s = (T - sig[i]) / dt;
      lo[i] = std::min(nodes - 2, static_cast<std::size_t>(std::floor(s)));
      frac[i] = s - static_cast<double>(lo[i]);
    }
  }
  const std::size_t P = probes.size();
  std::vector<double> blk(4 * P, 0.0);
  std::vector<std::vector<double>> blocks;
  for (std::size_t path = 0; path < mc.paths; ++path) {
    RngStream rng(mc.seed, path);
    const std::vector<Point> z = sampler.path(sig, rng);
    for (std::size_t p = 0; p < P; ++p) {
      cplx x = 0.0;
      for (std::size_t i = 0; i < sig.size(); ++i) {
        const double a = probes[p][0] + z[i][0], b = probes[p][1] + z[i][1];
        cplx v;
        if (nodes == 1)
          v = fi[0](a, b);
        else
          v = (1.0 - frac[i]) * fi[lo[i]](a, b) + frac[i] * fi[lo[i] + 1](a, b);
        x += wt[i] * v;
      }
      blk[4 * p] += x.real();
      blk[4 * p + 1] += x.real() * x.real();
      blk[4 * p + 2] += x.imag();
      blk[4 * p + 3] += x.imag() * x.imag();
    }
    if ((path + 1) % 1024 == 0 || path + 1 == mc.paths) {
      blocks.push_back(blk);
      std::fill(blk.begin(), blk.end(), 0.0);
    }
  }
  McEstimate est;
  est.probes = probes;
  est.paths = mc.paths;
  const double n = static_cast<double>(mc.paths);
  std::vector<double> col(blocks.size());
  auto total = [&](std::size_t k) {
    for (std::size_t b = 0; b < blocks.size(); ++b) col[b] = blocks[b][k];
    return pairwise_sum(col.data(), col.size());
  };
  for (std::size_t p = 0; p < P; ++p) {
    const double mr = total(4 * p) / n, mi = total(4 * p + 2) / n;
    const double vr = std::max(0.0, (total(4 * p + 1) - n * mr * mr) / (n - 1.0));
    const double vi = std::max(0.0, (total(4 * p + 3) - n * mi * mi) / (n - 1.0));
    if (!std::isfinite(vr) || !std::isfinite(vi)) throw SamplingError("Monte Carlo variance is not finite");
    est.mean.push_back({mr, mi});
    est.stderr_re.push_back(std::sqrt(vr / n));
    est.stderr_im.push_back(std::sqrt(vi / n));
  }
  return est;
}

std::vector<double> residual(const SolveResult& r, const Forcing& f, const SymbolGrid& g) {
  if (r.K < 4) throw DomainError("residual needs K >= 4");
  const double h = r.T / r.K * r.stride;
  std::vector<double> out;
  for (std::size_t k = 1; k + 1 < r.u.size(); ++k) {
    GridFunction d = r.u[k + 1] - r.u[k - 1];
    d *= 1.0 / (2.0 * h);
    GridFunction rhs = apply_multiplier(r.u[k], g.values);
    GridFunction lu = r.u[k];
    lu *= r.lambda;
    rhs -= lu;
    rhs += f.at(k * r.stride);
    d -= rhs;
    out.push_back(d.sup_norm());
  }
  return out;
}

GridFunction steady_state(const GridFunction& f, const SymbolGrid& g, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("steady state needs lambda > 0");
  if (f.lattice() != g.lattice) throw DomainError("forcing and symbol lattices differ");
  std::vector<cplx> m(g.values.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = 1.0 / (lambda - g.values[i]);
  return apply_multiplier(f, m);
}

}  // namespace gensmooth
