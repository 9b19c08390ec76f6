// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <path to gensmooth_cli>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gensmooth/bank.hpp"
#include "gensmooth/cauchy.hpp"
#include "gensmooth/io.hpp"
#include "gensmooth/levy_model.hpp"
#include "gensmooth/operators.hpp"
#include "gensmooth/probabilistic.hpp"
#include "gensmooth/symbol.hpp"
#include "gensmooth/verify.hpp"
#include "oracles.hpp"

using namespace gensmooth;
namespace fs = std::filesystem;

namespace {

// Tolerances, fixed here and nowhere else.
constexpr double kPartitionTol = 1e-12;
constexpr double kReconstructionTol = 1e-8;
constexpr double kSymbolRelTol = 1e-3;
constexpr double kSymbolRatioMax = 10.0;
constexpr double kTailC0Tol = 1e-6;
constexpr double kShellResidualTol = 1e-10;
constexpr double kSubordinationTol = 1e-8;
constexpr double kIdentityTol = 1e-10;
constexpr double kEigenTol = 1e-12;
constexpr double kSigmaMax = 3.0;
constexpr std::size_t kPaths = 100000;
constexpr double kHalvingTol = 0.2;
constexpr double kDuhamelTol = 1e-6;
constexpr double kResidualRatio = 4.0;
constexpr double kResidualRatioTol = 0.3;
constexpr double kRefinementTol = 0.25;
constexpr double kSlopeSlack = 0.1;
constexpr double kR2Min = 0.98;
constexpr double kBandIndependenceTol = 1e-6;
constexpr double kRatioSpreadMax = 1e3;

constexpr double kN = 4.0;
const Lattice kSmall{1, 2.0, 256};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

LevyModel stable1(double alpha) { return make_stable(1, alpha, AngularMeasure::two_point(1.0, 1.0)); }

std::vector<LevyModel> default_models() {
  return {stable1(0.5), stable1(1.0), stable1(1.5), make_bernstein(BernsteinPhi(2, {0.5, 0.5}), 1)};
}

GridFunction profile(const Lattice& lat) {
  return GridFunction::sample(lat, [&](double x, double) {
    const double k = 2 * M_PI / lat.box;
    return cplx(0.5 + 0.5 * std::cos(2 * k * x) + 0.3 * std::sin(6 * k * x) + 0.1 * std::cos(40 * k * x));
  });
}

GridFunction mode(const Lattice& lat, int k) {
  return GridFunction::sample(lat, [&](double x, double) { return std::exp(cplx(0, 2 * M_PI * k * x / lat.box)); });
}

std::vector<std::array<double, 2>> probes(const Lattice& lat, int n) {
  std::vector<std::array<double, 2>> p;
  for (int i = 0; i < n; ++i) p.push_back({lat.coord(i * lat.points / n + 5), 0.0});
  return p;
}

std::vector<cplx> at(const GridFunction& u, const std::vector<std::array<double, 2>>& p) {
  SpectralInterpolant s(u);
  std::vector<cplx> out;
  for (const auto& x : p) out.push_back(s(x[0], x[1]));
  return out;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// 1. Partition of unity and reconstruction.
void partition(Outcome& o) {
  const DyadicBank b = build_bank(kN, default_lattice(1));
  double worst = 0.0;
  for (std::size_t i = 0; i < b.lattice.size(); ++i) {
    if (std::abs(b.lattice.xi(i)[0]) > std::pow(kN, b.J_max)) continue;
    double s = 0.0;
    for (int j = 0; j <= b.J_max; ++j) s += b.phi[j][i];
    worst = std::max(worst, std::abs(s - 1.0));
  }
  std::mt19937_64 rng(11);
  const int top = static_cast<int>(std::pow(kN, b.J_max) * b.lattice.box);
  std::uniform_int_distribution<int> M(-top, top);
  std::normal_distribution<double> Z;
  double rec = 0.0;
  for (int f = 0; f < 20; ++f) {
    TrigFunction t;
    for (int k = 0; k < 6; ++k) t.terms.push_back({{M(rng), 0}, cplx(Z(rng), Z(rng))});
    const GridFunction u = t.sample(b.lattice);
    GridFunction s(b.lattice);
    for (const auto& p : decompose(u, b)) s += p;
    rec = std::max(rec, (s - u).sup_norm());
  }
  o.detail << "max|sum phi_j - 1|=" << worst << " reconstruction=" << rec;
  o.require(worst <= kPartitionTol, "partition");
  o.require(rec <= kReconstructionTol, "reconstruction");
}

// 2. Quadrature symbol against the closed form with the oracle constant.
void symbol_oracle(Outcome& o) {
  const Lattice lat = default_lattice(1);
  for (double a : {0.5, 1.0, 1.5}) {
    const double c = oracle::stable_constant(a);
    const SymbolGrid q = make_symbol_grid(stable1(a), lat, SymbolMethod::Quadrature);
    double worst = 0.0;
    for (std::size_t k = 1; k < lat.size(); ++k) {
      const double ref = -2.0 * c * std::pow(2 * M_PI * std::abs(lat.xi(k)[0]), a);
      worst = std::max(worst, std::abs(q.values[k] - ref) / std::abs(ref));
    }
    o.detail << " alpha=" << a << ":" << worst;
    o.require(worst <= kSymbolRelTol, "alpha=" + std::to_string(a));
  }
}

// 3. Two-sided symbol bound.
void symbol_bounds(Outcome& o) {
  for (const auto& m : default_models()) {
    const SymbolBounds b = check_symbol_bounds(make_symbol_grid(m, default_lattice(1)), *m.scaling());
    o.detail << " " << m.label() << ":" << b.ratio();
    o.require(b.c > 0.0 && b.ratio() <= kSymbolRatioMax, m.label());
  }
}

// 4. Assumption clauses.
void assumption(Outcome& o) {
  for (const auto& m : default_models()) {
    const AssumptionReport r = check_assumption_A(m, *m.scaling());
    o.detail << " " << m.label() << ":N0=" << r.moment_N0 << ",C0=" << r.tail_C0;
    o.require(r.clause_iii && r.clause_iv && std::isfinite(r.moment_N0) && std::isfinite(r.tail_C0), m.label());
    if (m.kind() == DensityKind::StableLike)
      o.require(std::abs(r.tail_C0 - 1.0 / (2.0 - m.order())) <= kTailC0Tol, "C0 " + m.label());
  }
  const AssumptionReport r = check_assumption_A(stable1(1.0), ScalingFunction::power_law(1.0));
  o.detail << " shell_residual(alpha=1)=" << r.alpha1_symmetry_residual;
  o.require(r.clause_ii_applicable && r.alpha1_symmetry_residual <= kShellResidualTol, "clause ii");
}

// 5. Subordination constants.
void subordination(Outcome& o) {
  for (double k : {0.25, 0.5, 0.75}) {
    const double q = subordination_constant(k, Subordination::Fractional);
    const double ref = std::tgamma(1.0 - k) / k;
    o.detail << " kappa=" << k << ":" << std::abs(q - ref);
    o.require(std::abs(q - ref) <= kSubordinationTol * ref, "gamma kappa=" + std::to_string(k));
    o.require(std::abs(oracle::fractional_subordination(k) - ref) <= kSubordinationTol * ref, "oracle");
  }
  const double h = subordination_constant(0.5, Subordination::Fractional);
  o.require(std::abs(h - 2 * std::sqrt(M_PI)) <= kSubordinationTol, "2 sqrt(pi)");
}

// 6. Operator identities.
void identities(Outcome& o) {
  const Lattice lat = default_lattice(1);
  const GridFunction u = profile(lat);
  double round = 0.0, half = 0.0, eigen = 0.0;
  for (const auto& m : default_models()) {
    const SymbolGrid g = make_symbol_grid(m, lat);
    for (double k : {0.3, 0.5, 1.0, 1.5}) {
      const GridFunction v = apply_resolvent_power(apply_resolvent_power(u, g, 1.0, k, -1), g, 1.0, k, 1);
      round = std::max(round, (v - u).sup_norm() / u.sup_norm());
    }
    const GridFunction hh = apply_fractional(apply_fractional(u, g, 0.5), g, 0.5);
    const GridFunction full = apply_fractional(u, g, 1.0);
    half = std::max(half, (hh + full).sup_norm() / full.sup_norm());
    for (int k : {1, 7, 100}) {
      std::vector<cplx> delta(lat.size());
      delta[k] = static_cast<double>(lat.size());
      const GridFunction e = inverse(lat, delta);
      eigen = std::max(eigen, (apply_generator(e, g) - g.values[k] * e).sup_norm() / std::abs(g.values[k]));
    }
  }
  o.detail << "resolvent round trip=" << round << " half*half+full=" << half << " eigen=" << eigen;
  o.require(round <= kIdentityTol, "resolvent");
  o.require(half <= kIdentityTol, "half powers");
  o.require(eigen <= kEigenTol, "eigenrelation");
}

// 7. Probabilistic representations.
void representations(Outcome& o) {
  const GridFunction u = profile(kSmall);
  const auto p = probes(kSmall, 16);
  McOptions big, small;
  big.paths = kPaths;
  small.paths = kPaths / 4;
  struct Case {
    std::string name;
    std::function<McEstimate(const McOptions&)> run;
    std::vector<cplx> ref;
  };
  const LevyModel m15 = stable1(1.5), m10 = stable1(1.0), m05 = stable1(0.5);
  std::vector<Case> cases{
      {"fractional", [&](const McOptions& mc) { return probabilistic_fractional(u, m15, 0.5, p, mc); },
       at(apply_fractional(u, make_symbol_grid(m15, kSmall), 0.5), p)},
      {"resolvent_power",
       [&](const McOptions& mc) { return probabilistic_resolvent_power(u, m10, 1.0, 0.5, p, mc); },
       at(apply_resolvent_power(u, make_symbol_grid(m10, kSmall), 1.0, 0.5, -1), p)},
      {"expectation", [&](const McOptions& mc) { return resolvent_via_expectation(u, m05, 1.0, p, mc); },
       at(apply_resolvent_power(u, make_symbol_grid(m05, kSmall), 1.0, 1.0, -1), p)},
  };
  for (const auto& c : cases) {
    const McEstimate a = c.run(big);
    const McEstimate b = c.run(small);
    const double sig = a.max_sigma(c.ref);
    const double ratio = b.mean_stderr() / a.mean_stderr();
    o.detail << " " << c.name << ":sigma=" << sig << ",halving=" << ratio;
    o.require(sig <= kSigmaMax, c.name + " sigma");
    o.require(std::abs(ratio - 2.0) <= kHalvingTol * 2.0, c.name + " halving");
  }
}

// 8. Solver.
void solver(Outcome& o) {
  double err = 0.0;
  for (double a : {0.5, 1.0, 1.5}) {
    const SymbolGrid g = make_symbol_grid(stable1(a), kSmall);
    for (int k : {1, 3, 20}) {
      const GridFunction f = mode(kSmall, k);
      const SolveResult r = solve_spectral(Forcing::constant(f), g, 1.0, 1.0, 256, 8);
      for (std::size_t n = 0; n < r.u.size(); ++n)
        err = std::max(err, (r.u[n] - oracle::duhamel_mode(g.values[k] - 1.0, r.times[n]) * f).sup_norm());
    }
  }
  const SymbolGrid g = make_symbol_grid(stable1(0.5), kSmall);
  const GridFunction f0 = mode(kSmall, 3);
  auto forcing = [&](int K) {
    std::vector<GridFunction> nodes;
    for (int k = 0; k <= K; ++k) nodes.push_back(cplx(std::sin(3.0 * k / K)) * f0);
    return Forcing::nodes(std::move(nodes));
  };
  const Forcing a = forcing(256), b = forcing(512);
  const double ratio =
      max_of(residual(solve_spectral(a, g, 1.0, 1.0, 256), a, g)) / max_of(residual(solve_spectral(b, g, 1.0, 1.0, 512), b, g));
  const SolveResult z = solve_spectral(Forcing::constant(GridFunction(kSmall)), g, 1.0, 1.0, 256);
  double zero = 0.0;
  for (const auto& u : z.u) zero = std::max(zero, u.sup_norm());
  o.detail << "duhamel=" << err << " residual ratio=" << ratio << " homogeneous=" << zero;
  o.require(err <= kDuhamelTol, "duhamel");
  o.require(std::abs(ratio - kResidualRatio) <= kResidualRatioTol * kResidualRatio, "residual order");
  o.require(zero == 0.0, "homogeneous");
}

// 9. Regularity estimates.
void regularity(Outcome& o) {
  const Lattice lat = default_lattice(1);
  const auto family = make_family(build_bank(kN, lat), 20, 7);
  for (const auto& m : default_models()) {
    const EstimateRecord r = verify_regularity(m, *m.scaling(), family, lat, kN, 0.5, 1.0, 1.0, 256, kRefinementTol);
    o.detail << " " << m.label() << ":drift=" << r.constant("drift_sup") << "/" << r.constant("drift_gain");
    o.require(r.pass, "regularity " + m.label());
    for (const auto& t : verify_time_regularity(m, *m.scaling(), family, lat, kN, 0.5, {0.0, 0.5, 1.0}, 1.0, 1.0, 256)) {
      o.detail << "," << t.name.substr(t.name.find('=') + 1) << ":" << t.exponent("slope");
      const double kappa = std::stod(t.name.substr(t.name.find('=') + 1));
      o.require(std::isfinite(t.constant("C")) && t.exponent("slope") >= (1.0 - kappa) - kSlopeSlack, t.name);
    }
  }
}

// 10. Kernel decay.
void kernel_decay(Outcome& o) {
  const Lattice kl = default_kernel_lattice(1);
  std::vector<double> times;
  for (int t = 1; t <= 16; ++t) times.push_back(t);
  for (const auto& m : default_models()) {
    const LevyModel ref = stable1(m.order());
    double worst_r2 = 1.0;
    for (double kappa : {0.0, 0.5, 1.0}) {
      std::vector<KernelDecay> curves;
      for (int j : {1, 2, 3}) {
        curves.push_back(kernel_l1_decay(m, ref, *m.scaling(), kN, j, kappa, times, kl));
        const auto& c = curves.back();
        worst_r2 = std::min(worst_r2, c.fitted ? c.r2 : 0.0);
        o.require(c.fitted && c.r2 >= kR2Min && c.C2 > 0.0,
                  m.label() + " j=" + std::to_string(j) + " kappa=" + std::to_string(kappa));
      }
      if (m.kind() == DensityKind::StableLike) {
        double gap = 0.0;
        for (const auto& c : curves)
          for (std::size_t i = 0; i < times.size(); ++i)
            gap = std::max(gap, std::abs(c.l1[i] - curves[0].l1[i]) / curves[0].l1[i]);
        o.require(gap <= kBandIndependenceTol, "j-independence " + m.label());
        if (kappa == 1.0) o.detail << " " << m.label() << ":j-gap=" << gap;
      }
    }
    o.detail << " " << m.label() << ":minR2=" << worst_r2;
  }
}

// 11. Norm equivalence.
void norm_equivalence(Outcome& o) {
  const Lattice lat = default_lattice(1);
  const auto family = make_family(build_bank(kN, lat), 20, 7);
  for (const auto& m : default_models()) {
    const IntegrabilityReport asl = check_beta_integrability(*m.scaling(), 0.5);
    o.require(asl.verdict == Integrability::Holds, "integrability " + m.label());
    const auto recs = norm_equivalence_report(m, *m.scaling(), 0.5, {0.0, 0.5, 1.0}, family, lat, kN,
                                              kRatioSpreadMax, kRefinementTol);
    double spread = 0.0;
    for (const auto& r : recs) {
      for (const auto& [k, v] : r.constants)
        if (k.size() > 7 && k.compare(k.size() - 7, 7, "_spread") == 0) spread = std::max(spread, v);
      o.require(r.pass, r.name + " " + m.label());
    }
    o.detail << " " << m.label() << ":max spread=" << spread;
  }
}

// 12. Determinism of the command-line tool.
std::string tree_bytes(const fs::path& root) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(root))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string all;
  for (const auto& f : files) all += fs::relative(f, root).string() + '\0' + read_file(f.string()) + '\0';
  return all;
}

void determinism(Outcome& o, const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / "gensmooth_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string data = GENSMOOTH_TEST_DATA;
  save_grid_function(profile(kSmall), (dir / "f.bin").string());
  const std::vector<std::string> runs{
      "check --config " + data + "/stable.ini",
      "norms --config " + data + "/stable.ini " + (dir / "f.bin").string() + " --beta 0.25,0.5",
      "solve --config " + data + "/stable.ini " + (dir / "f.bin").string(),
      "verify --config " + data + "/verify_small.ini",
  };
  for (std::size_t i = 0; i < runs.size(); ++i) {
    std::string bytes[2];
    int codes[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
      const std::string cmd = "\"" + cli + "\" " + runs[i] + " --out " + out.string() + " --quiet";
      codes[rep] = std::system(cmd.c_str());
      bytes[rep] = fs::exists(out) ? tree_bytes(out) : std::string();
    }
    const std::string name = runs[i].substr(0, runs[i].find(' '));
    o.detail << " " << name << ":" << bytes[0].size() << "B";
    o.require(codes[0] == 0 && codes[1] == 0, name + " exit");
    o.require(!bytes[0].empty() && bytes[0] == bytes[1], name + " bytes");
  }
  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <gensmooth_cli>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"partition_of_unity", partition},
      {"symbol_oracle", symbol_oracle},
      {"symbol_bounds", symbol_bounds},
      {"assumption_A", assumption},
      {"subordination_constants", subordination},
      {"operator_identities", identities},
      {"probabilistic_representations", representations},
      {"solver", solver},
      {"regularity_estimates", regularity},
      {"kernel_decay", kernel_decay},
      {"norm_equivalence", norm_equivalence},
      {"determinism", [&](Outcome& o) { determinism(o, cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    failed += !o.pass;
    std::printf("%s %2zu %s:%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
