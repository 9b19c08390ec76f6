#include "gensmooth/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "json.hpp"

#include "gensmooth/cauchy.hpp"
#include "gensmooth/errors.hpp"
#include "gensmooth/io.hpp"
#include "gensmooth/norms.hpp"
#include "gensmooth/report.hpp"

namespace gensmooth {

namespace {

using json = nlohmann::ordered_json;

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

json lattice_json(const Lattice& lat) { return {{"dim", lat.dim}, {"box", lat.box}, {"points", lat.points}}; }

json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string file_stem(const std::string& name) {
  std::string s;
  for (char ch : name) s += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '.' || ch == '-') ? ch : '_';
  return s;
}

void write_normalized(const RunConfig& c, const std::string& out_dir) {
  write_file_atomic(join_path(out_dir, "config.normalized.ini"), normalize(c));
}

}  // namespace

int cmd_check(const RunConfig& c, const std::string& out_dir, std::ostream& log) {
  const LevyModel model = build_model(c);
  const ScalingFunction sf = build_scaling(c, model);
  const AssumptionReport a = check_assumption_A(model, sf);
  json j;
  j["config_hash"] = config_hash(c);
  j["model"] = {{"label", model.label()}, {"hash", model.hash()}, {"order", model.order()}};
  j["scaling"] = {{"description", sf.describe()}, {"r1", number(sf.r1())}, {"r2", number(sf.r2())}};
  j["clauses"] = {
      {"i", {{"pass", a.clause_i}, {"proxy", true}, {"directional_c0", number(a.directional_c0)}}},
      {"ii",
       {{"pass", a.clause_ii},
        {"applicable", a.clause_ii_applicable},
        {"residual", number(a.alpha1_symmetry_residual)}}},
      {"iii", {{"pass", a.clause_iii}, {"N0", number(a.moment_N0)}, {"min", number(a.moment_min)}}},
      {"iv", {{"pass", a.clause_iv}, {"C0", number(a.tail_C0)}}},
  };
  j["all_pass"] = a.all_pass();
  if (!a.notes.empty()) j["notes"] = a.notes;
  write_normalized(c, out_dir);
  write_file_atomic(join_path(out_dir, "check.json"), j.dump(2) + "\n");
  const std::pair<const char*, bool> clauses[] = {
      {"(i)", a.clause_i}, {"(ii)", a.clause_ii}, {"(iii)", a.clause_iii}, {"(iv)", a.clause_iv}};
  for (const auto& [name, ok] : clauses) log << "clause " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
  return a.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_norms(const RunConfig& c, const std::string& input, const std::vector<double>& betas,
              const std::string& out_dir, std::ostream& log) {
  const GridFunction u = load_grid_function(input);
  if (u.lattice() != c.lattice) throw ConfigError("lattice", c.line_of("lattice"), "input lattice differs from config");
  const LevyModel model = build_model(c);
  const ScalingFunction sf = build_scaling(c, model);
  const DyadicBank bank = build_bank(c.N, c.lattice);
  std::vector<double> bs = betas.empty() ? std::vector<double>{c.beta} : betas;
  std::sort(bs.begin(), bs.end());
  const double alpha_prime = estimate_alpha_prime(sf);
  std::ostringstream os;
  for (double b : bs) {
    if (!(b > 0.0)) throw ConfigError("beta", 0, "beta values must be positive");
    const HolderRegime r = classify_holder_regime(sf, b, alpha_prime);
    if (r == HolderRegime::ConstantsOnly) {
      os << "# warning: beta=" << format_double(b) << " is in the constants-only regime; the Holder norm grows with "
         << "refinement\n";
      log << "warning: beta=" << b << " is in the constants-only regime\n";
    }
  }
  os << "beta,norm,value\n";
  for (double b : bs) {
    const HolderNorm h = holder_norm(u, sf, b);
    os << format_double(b) << ",besov," << format_double(besov_norm(u, bank, sf, b)) << "\n";
    os << format_double(b) << ",holder," << format_double(h.value) << "\n";
    os << format_double(b) << ",sup," << format_double(u.sup_norm()) << "\n";
  }
  write_normalized(c, out_dir);
  write_file_atomic(join_path(out_dir, "norms.csv"), os.str());
  return kExitPass;
}

int cmd_solve(const RunConfig& c, const std::vector<std::string>& inputs, const std::string& out_dir,
              std::ostream& log) {
  if (inputs.empty()) throw ConfigError("input", 0, "solve needs at least one forcing file");
  if (inputs.size() != 1 && inputs.size() != static_cast<std::size_t>(c.K) + 1)
    throw ConfigError("solver.k", c.line_of("solver.k"), "expected 1 or K+1 forcing files");
  std::vector<GridFunction> f;
  for (const auto& p : inputs) {
    f.push_back(load_grid_function(p));
    if (f.back().lattice() != c.lattice)
      throw ConfigError("lattice", c.line_of("lattice"), "forcing lattice differs from config: " + p);
  }
  const LevyModel model = build_model(c);
  const SymbolGrid g = make_symbol_grid(model, c.lattice);
  const Forcing F = f.size() == 1 ? Forcing::constant(f[0]) : Forcing::nodes(std::move(f));
  const SolveResult r = solve_spectral(F, g, c.lambda, c.T, c.K, c.store_every);
  if (r.clamped) log << "warning: " << r.clamped << " overflowing multipliers clamped to 0\n";
  json files = json::array();
  for (std::size_t k = 0; k < r.u.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof name, "u_%05zu.bin", k * static_cast<std::size_t>(c.store_every));
    const std::string bytes = encode_binary(r.u[k]);
    write_file_atomic(join_path(join_path(out_dir, "nodes"), name), bytes);
    files.push_back({{"file", std::string("nodes/") + name}, {"time", r.times[k]}, {"checksum", checksum(bytes)}});
  }
  json m;
  m["config_hash"] = config_hash(c);
  m["model_hash"] = model.hash();
  m["model"] = model.label();
  m["lattice"] = lattice_json(c.lattice);
  m["lambda"] = c.lambda;
  m["T"] = c.T;
  m["K"] = c.K;
  m["store_every"] = c.store_every;
  m["clamped"] = r.clamped;
  m["times"] = r.times;
  m["files"] = std::move(files);
  write_normalized(c, out_dir);
  write_file_atomic(join_path(out_dir, "manifest.json"), m.dump(2) + "\n");
  return kExitPass;
}

int cmd_verify(const RunConfig& c, const std::string& out_dir, std::ostream& log) {
  const LevyModel model = build_model(c);
  const LevyModel reference = build_reference(c, model);
  const ScalingFunction sf = build_scaling(c, model);
  EstimateReport rep = run_suite(model, reference, sf, suite_options(c));
  rep.config_hash = config_hash(c);
  write_normalized(c, out_dir);
  write_file_atomic(join_path(out_dir, "report.json"), rep.to_json());
  write_file_atomic(join_path(out_dir, "report.csv"), rep.to_csv());
  for (const auto& rec : rep.records) {
    if (rec.series.rows.empty()) continue;
    write_file_atomic(join_path(join_path(out_dir, "series"), file_stem(rec.name) + ".csv"), series_csv(rec.series));
  }
  for (const auto& rec : rep.records) log << (rec.pass ? "PASS " : "FAIL ") << rec.name << "\n";
  return rep.all_pass() ? kExitPass : kExitCheckFailure;
}

int run_command(const std::string& name, const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  std::ostringstream sink;
  std::ostream& log = opt.quiet ? sink : out;
  try {
    if (opt.config_path.empty()) throw ConfigError("--config", 0, "a config file is required");
    RunConfig c = load_config(opt.config_path);
    const std::string out_dir = opt.out_dir.empty() ? c.output_dir : opt.out_dir;
    if (opt.seed) c.seed = *opt.seed;
    if (!opt.checks.empty()) {
      for (const auto& k : opt.checks)
        if (std::find(suite_checks().begin(), suite_checks().end(), k) == suite_checks().end())
          throw ConfigError("--checks", 0, "unknown check '" + k + "'");
      c.checks = opt.checks;
    }
    if (name == "check") return cmd_check(c, out_dir, log);
    if (name == "norms") {
      if (opt.inputs.size() != 1) throw ConfigError("input", 0, "norms needs exactly one function file");
      return cmd_norms(c, opt.inputs[0], opt.betas, out_dir, log);
    }
    if (name == "solve") return cmd_solve(c, opt.inputs, out_dir, log);
    if (name == "verify") return cmd_verify(c, out_dir, log);
    throw ConfigError("command", 0, "unknown command '" + name + "'");
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gensmooth
