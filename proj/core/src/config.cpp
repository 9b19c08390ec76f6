#include "gensmooth/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <memory>
#include <sstream>

#include "gensmooth/errors.hpp"
#include "gensmooth/io.hpp"
#include "gensmooth/report.hpp"

namespace gensmooth {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(v);
  while (std::getline(is, cur, ',')) {
    cur = trim(cur);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

const std::map<std::string, std::vector<std::string>>& schema() {
  static const std::map<std::string, std::vector<std::string>> s{
      {"lattice", {"dim", "box", "points"}},
      {"bank", {"n", "j_max"}},
      {"model",
       {"kind", "alpha", "angular", "angles", "phi_family", "phi_params", "radial_csv", "intensity", "dilation"}},
      {"reference",
       {"kind", "alpha", "angular", "angles", "phi_family", "phi_params", "radial_csv", "intensity", "dilation"}},
      {"scaling", {"kind", "alpha", "phi_family", "phi_params", "path"}},
      {"solver", {"lambda", "t", "k", "store_every"}},
      {"mc", {"seed", "paths", "eps", "probes"}},
      {"checks",
       {"run", "beta", "kappas", "family_size", "family_seed", "ratio_bound", "refinement_tol", "r2_min", "kernel_j",
        "kernel_box", "kernel_points", "kernel_times"}},
      {"output", {"dir"}},
  };
  return s;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, Section>& raw, std::map<std::string, int>& lines)
      : raw_(raw), lines_(lines) {}

  bool has(const std::string& sec, const std::string& key) const {
    auto s = raw_.find(sec);
    return s != raw_.end() && s->second.count(key);
  }

  const Entry* entry(const std::string& sec, const std::string& key) {
    auto s = raw_.find(sec);
    if (s == raw_.end()) return nullptr;
    auto e = s->second.find(key);
    if (e == s->second.end()) return nullptr;
    e->second.used = true;
    lines_[sec + "." + key] = e->second.line;
    return &e->second;
  }

  double number(const std::string& sec, const std::string& key, double def, bool required = false) {
    const Entry* e = entry(sec, key);
    if (!e) {
      if (required) throw ConfigError(sec + "." + key, section_line(sec), "required field is missing");
      return def;
    }
    return parse_double(e->value, sec + "." + key, e->line);
  }

  long long integer(const std::string& sec, const std::string& key, long long def, bool required = false) {
    const Entry* e = entry(sec, key);
    if (!e) {
      if (required) throw ConfigError(sec + "." + key, section_line(sec), "required field is missing");
      return def;
    }
    return parse_int(e->value, sec + "." + key, e->line);
  }

  std::uint64_t unsigned64(const std::string& sec, const std::string& key, std::uint64_t def) {
    const Entry* e = entry(sec, key);
    if (!e) return def;
    std::uint64_t v = 0;
    const std::string& s = e->value;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size())
      throw ConfigError(sec + "." + key, e->line, "expected an unsigned 64-bit integer");
    return v;
  }

  std::string text(const std::string& sec, const std::string& key, const std::string& def, bool required = false) {
    const Entry* e = entry(sec, key);
    if (!e) {
      if (required) throw ConfigError(sec + "." + key, section_line(sec), "required field is missing");
      return def;
    }
    return e->value;
  }

  std::vector<double> numbers(const std::string& sec, const std::string& key, std::vector<double> def,
                              bool required = false) {
    const Entry* e = entry(sec, key);
    if (!e) {
      if (required) throw ConfigError(sec + "." + key, section_line(sec), "required field is missing");
      return def;
    }
    std::vector<double> out;
    for (const auto& item : split_list(e->value)) out.push_back(parse_double(item, sec + "." + key, e->line));
    return out;
  }

  std::vector<int> integers(const std::string& sec, const std::string& key, std::vector<int> def) {
    const Entry* e = entry(sec, key);
    if (!e) return def;
    std::vector<int> out;
    for (const auto& item : split_list(e->value))
      out.push_back(static_cast<int>(parse_int(item, sec + "." + key, e->line)));
    return out;
  }

  void finish() const {
    for (const auto& [sec, entries] : raw_)
      for (const auto& [key, e] : entries)
        if (!e.used) throw ConfigError(sec + "." + key, e.line, "field does not apply here");
  }

  int section_line(const std::string& sec) const {
    auto it = lines_.find(sec);
    return it == lines_.end() ? 0 : it->second;
  }

 private:
  static double parse_double(const std::string& s, const std::string& field, int line) {
    double v = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v))
      throw ConfigError(field, line, "expected a finite number, got '" + s + "'");
    return v;
  }
  static long long parse_int(const std::string& s, const std::string& field, int line) {
    long long v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size())
      throw ConfigError(field, line, "expected an integer, got '" + s + "'");
    return v;
  }

  std::map<std::string, Section>& raw_;
  std::map<std::string, int>& lines_;
};

void require(bool ok, const RunConfig& c, const std::string& field, const std::string& what) {
  if (!ok) throw ConfigError(field, c.line_of(field), what);
}

ModelSpec read_model(Reader& rd, const std::string& sec, bool reference) {
  ModelSpec m;
  m.kind = rd.text(sec, "kind", reference ? "auto" : "", !reference);
  if (m.kind == "auto") {
    if (!reference) throw ConfigError(sec + ".kind", rd.section_line(sec), "auto is only valid for the reference");
    return m;
  }
  if (m.kind == "stable" || m.kind == "table") {
    m.alpha = rd.number(sec, "alpha", 0.0, true);
    m.angular = rd.numbers(sec, "angular", {});
    m.angles = static_cast<int>(rd.integer(sec, "angles", 64));
    if (m.kind == "table") m.radial_csv = rd.text(sec, "radial_csv", "", true);
  } else if (m.kind == "bernstein") {
    m.phi_family = static_cast<int>(rd.integer(sec, "phi_family", 0, true));
    m.phi_params = rd.numbers(sec, "phi_params", {}, true);
    m.angles = static_cast<int>(rd.integer(sec, "angles", 64));
  } else {
    throw ConfigError(sec + ".kind", rd.section_line(sec), "unknown kind '" + m.kind + "'");
  }
  m.intensity = rd.number(sec, "intensity", 1.0);
  m.dilation = rd.number(sec, "dilation", 1.0);
  return m;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

void emit_model(std::ostringstream& os, const std::string& sec, const ModelSpec& m) {
  os << "[" << sec << "]\n";
  os << "kind = " << m.kind << "\n";
  if (m.kind == "auto") return;
  if (m.kind == "bernstein") {
    os << "phi_family = " << m.phi_family << "\n";
    os << "phi_params = " << join(m.phi_params) << "\n";
  } else {
    os << "alpha = " << format_double(m.alpha) << "\n";
    if (!m.angular.empty()) os << "angular = " << join(m.angular) << "\n";
    if (m.kind == "table") os << "radial_csv = " << m.radial_csv << "\n";
  }
  os << "angles = " << m.angles << "\n";
  os << "intensity = " << format_double(m.intensity) << "\n";
  os << "dilation = " << format_double(m.dilation) << "\n";
}

AngularMeasure angular_of(const ModelSpec& m, int dim) {
  if (dim == 1) {
    if (m.angular.empty()) return AngularMeasure::two_point(1.0, 1.0);
    if (m.angular.size() != 2) throw DomainError("d=1 angular weights need exactly two entries");
    return AngularMeasure::two_point(m.angular[0], m.angular[1]);
  }
  if (m.angular.empty()) return AngularMeasure::uniform_circle(m.angles);
  return AngularMeasure::circle(m.angular);
}

LevyModel model_from(const ModelSpec& m, int dim, const std::string& sec, const RunConfig& c) {
  try {
    LevyModel out = [&] {
      if (m.kind == "stable") return make_stable(dim, m.alpha, angular_of(m, dim));
      if (m.kind == "bernstein") return make_bernstein(BernsteinPhi(m.phi_family, m.phi_params), dim, m.angles);
      std::vector<double> r, d;
      for (const auto& [x, y] : read_pairs_csv(m.radial_csv)) {
        r.push_back(x);
        d.push_back(y);
      }
      return make_tabulated(dim, m.alpha, std::move(r), std::move(d), angular_of(m, dim));
    }();
    if (m.intensity != 1.0 || m.dilation != 1.0) {
      // ν(B) = c ν_base(R B) is the rescaling with wR = c and R = dilation.
      out = out.scaled(m.dilation, m.intensity);
    }
    return out;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(sec, c.line_of(sec + ".kind"), e.what());
  }
}

}  // namespace

int RunConfig::line_of(const std::string& field) const {
  auto it = lines.find(field);
  return it == lines.end() ? 0 : it->second;
}

RunConfig parse_config(const std::string& text) {
  std::map<std::string, Section> raw;
  RunConfig c;
  std::istringstream is(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string s = line;
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((s[i] == '#' || s[i] == ';') && (i == 0 || std::isspace(static_cast<unsigned char>(s[i - 1])))) {
        s.resize(i);
        break;
      }
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError("", lineno, "unterminated section header");
      section = trim(std::string_view(s).substr(1, s.size() - 2));
      if (!schema().count(section)) throw ConfigError(section, lineno, "unknown section");
      if (raw.count(section)) throw ConfigError(section, lineno, "section appears twice");
      raw[section];
      c.lines[section] = lineno;
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ConfigError(section, lineno, "expected key = value");
    if (section.empty()) throw ConfigError("", lineno, "key outside any section");
    std::string key = trim(std::string_view(s).substr(0, eq));
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) { return std::tolower(ch); });
    const auto& keys = schema().at(section);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(section + "." + key, lineno, "unknown field");
    if (raw[section].count(key)) throw ConfigError(section + "." + key, lineno, "field appears twice");
    raw[section][key] = Entry{trim(std::string_view(s).substr(eq + 1)), lineno, false};
  }

  Reader rd(raw, c.lines);
  const int dim = static_cast<int>(rd.integer("lattice", "dim", 1));
  c.lattice = default_lattice(dim == 2 ? 2 : 1);
  c.lattice.dim = dim;
  c.lattice.box = rd.number("lattice", "box", c.lattice.box);
  c.lattice.points = static_cast<int>(rd.integer("lattice", "points", c.lattice.points));
  try {
    c.lattice.validate();
  } catch (const std::exception& e) {
    throw ConfigError("lattice", c.line_of("lattice"), e.what());
  }
  c.N = rd.number("bank", "n", 4.0);
  c.j_max = static_cast<int>(rd.integer("bank", "j_max", 0));

  if (!raw.count("model")) throw ConfigError("model", 0, "section is missing");
  c.model = read_model(rd, "model", false);
  c.reference = read_model(rd, "reference", true);

  c.scaling.kind = rd.text("scaling", "kind", "model");
  if (c.scaling.kind == "power") {
    c.scaling.alpha = rd.number("scaling", "alpha", 0.0, true);
  } else if (c.scaling.kind == "bernstein") {
    c.scaling.phi_family = static_cast<int>(rd.integer("scaling", "phi_family", 0, true));
    c.scaling.phi_params = rd.numbers("scaling", "phi_params", {}, true);
  } else if (c.scaling.kind == "table") {
    c.scaling.path = rd.text("scaling", "path", "", true);
  } else if (c.scaling.kind != "model") {
    throw ConfigError("scaling.kind", c.line_of("scaling.kind"), "unknown kind '" + c.scaling.kind + "'");
  }

  c.lambda = rd.number("solver", "lambda", 1.0);
  c.T = rd.number("solver", "t", 1.0);
  c.K = static_cast<int>(rd.integer("solver", "k", 256));
  c.store_every = static_cast<int>(rd.integer("solver", "store_every", 16));

  c.seed = rd.unsigned64("mc", "seed", 20240601);
  const long long paths = rd.integer("mc", "paths", 100000);
  c.eps = rd.number("mc", "eps", 1e-2);
  c.probes = static_cast<int>(rd.integer("mc", "probes", 16));

  const std::string run = rd.text("checks", "run", "all");
  c.checks.clear();
  if (run != "all") c.checks = split_list(run);
  c.beta = rd.number("checks", "beta", 0.5);
  c.kappas = rd.numbers("checks", "kappas", c.kappas);
  c.family_size = static_cast<int>(rd.integer("checks", "family_size", 20));
  c.family_seed = rd.unsigned64("checks", "family_seed", 7);
  c.ratio_bound = rd.number("checks", "ratio_bound", 1e3);
  c.refinement_tol = rd.number("checks", "refinement_tol", 0.25);
  c.r2_min = rd.number("checks", "r2_min", 0.98);
  c.kernel_j = rd.integers("checks", "kernel_j", c.kernel_j);
  c.kernel_lattice = default_kernel_lattice(c.lattice.dim);
  c.kernel_lattice.box = rd.number("checks", "kernel_box", c.kernel_lattice.box);
  c.kernel_lattice.points = static_cast<int>(rd.integer("checks", "kernel_points", c.kernel_lattice.points));
  c.kernel_times = rd.numbers("checks", "kernel_times", c.kernel_times);
  c.output_dir = rd.text("output", "dir", "out");
  rd.finish();

  require(c.N > 3.0, c, "bank.n", "N must exceed 3");
  require(c.j_max >= 0, c, "bank.j_max", "must be nonnegative");
  require(c.lambda >= 0.0, c, "solver.lambda", "must be nonnegative");
  require(c.T > 0.0, c, "solver.t", "must be positive");
  require(c.K >= 4, c, "solver.k", "must be at least 4");
  require(c.store_every >= 1 && c.K % c.store_every == 0, c, "solver.store_every", "must divide K");
  require(paths >= 2, c, "mc.paths", "at least two paths are needed");
  c.paths = static_cast<std::size_t>(paths);
  require(c.eps >= 1e-8 && c.eps <= 1.0, c, "mc.eps", "must lie in [1e-8, 1]");
  require(c.probes >= 1, c, "mc.probes", "must be positive");
  require(c.beta > 0.0, c, "checks.beta", "must be positive");
  require(!c.kappas.empty(), c, "checks.kappas", "needs at least one value");
  for (double k : c.kappas) require(k >= 0.0 && k <= 1.0, c, "checks.kappas", "values must lie in [0, 1]");
  require(c.family_size >= 1, c, "checks.family_size", "must be positive");
  require(c.ratio_bound > 1.0, c, "checks.ratio_bound", "must exceed 1");
  require(c.refinement_tol > 0.0, c, "checks.refinement_tol", "must be positive");
  require(!c.kernel_j.empty(), c, "checks.kernel_j", "needs at least one band");
  for (int j : c.kernel_j) require(j >= 0, c, "checks.kernel_j", "bands must be nonnegative");
  require(c.kernel_times.size() >= 3, c, "checks.kernel_times", "needs at least three times");
  for (const auto& name : c.checks)
    require(std::find(suite_checks().begin(), suite_checks().end(), name) != suite_checks().end(), c, "checks.run",
            "unknown check '" + name + "'");
  c.kernel_lattice.dim = c.lattice.dim;
  try {
    c.kernel_lattice.validate();
  } catch (const std::exception& e) {
    throw ConfigError("checks.kernel_points", c.line_of("checks.kernel_points"), e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  try {
    RunConfig c = parse_config(read_file(path));
    // Relative data paths resolve against the config file's directory.
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    auto fix = [&](std::string& p) {
      if (!p.empty() && std::filesystem::path(p).is_relative()) p = (base / p).lexically_normal().string();
    };
    fix(c.model.radial_csv);
    fix(c.reference.radial_csv);
    fix(c.scaling.path);
    return c;
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.field(), e.line(), e.message());
  }
}

std::string normalize(const RunConfig& c) {
  std::ostringstream os;
  os << "[lattice]\ndim = " << c.lattice.dim << "\nbox = " << format_double(c.lattice.box)
     << "\npoints = " << c.lattice.points << "\n\n";
  os << "[bank]\nn = " << format_double(c.N) << "\nj_max = " << c.j_max << "\n\n";
  emit_model(os, "model", c.model);
  os << "\n";
  emit_model(os, "reference", c.reference);
  os << "\n[scaling]\nkind = " << c.scaling.kind << "\n";
  if (c.scaling.kind == "power") os << "alpha = " << format_double(c.scaling.alpha) << "\n";
  if (c.scaling.kind == "bernstein")
    os << "phi_family = " << c.scaling.phi_family << "\nphi_params = " << join(c.scaling.phi_params) << "\n";
  if (c.scaling.kind == "table") os << "path = " << c.scaling.path << "\n";
  os << "\n[solver]\nlambda = " << format_double(c.lambda) << "\nt = " << format_double(c.T) << "\nk = " << c.K
     << "\nstore_every = " << c.store_every << "\n\n";
  os << "[mc]\nseed = " << c.seed << "\npaths = " << c.paths << "\neps = " << format_double(c.eps)
     << "\nprobes = " << c.probes << "\n\n";
  os << "[checks]\nrun = ";
  if (c.checks.empty()) os << "all";
  for (std::size_t i = 0; i < c.checks.size(); ++i) os << (i ? ", " : "") << c.checks[i];
  os << "\nbeta = " << format_double(c.beta) << "\nkappas = " << join(c.kappas)
     << "\nfamily_size = " << c.family_size << "\nfamily_seed = " << c.family_seed
     << "\nratio_bound = " << format_double(c.ratio_bound) << "\nrefinement_tol = " << format_double(c.refinement_tol)
     << "\nr2_min = " << format_double(c.r2_min) << "\nkernel_j = " << join(c.kernel_j)
     << "\nkernel_box = " << format_double(c.kernel_lattice.box) << "\nkernel_points = " << c.kernel_lattice.points
     << "\nkernel_times = " << join(c.kernel_times) << "\n\n";
  os << "[output]\ndir = " << c.output_dir << "\n";
  return os.str();
}

std::string config_hash(const RunConfig& c) { return checksum(normalize(c)); }

LevyModel build_model(const RunConfig& c) { return model_from(c.model, c.lattice.dim, "model", c); }

LevyModel build_reference(const RunConfig& c, const LevyModel& model) {
  if (c.reference.kind != "auto") return model_from(c.reference, c.lattice.dim, "reference", c);
  try {
    const AngularMeasure a =
        c.lattice.dim == 1 ? AngularMeasure::two_point(1.0, 1.0) : AngularMeasure::uniform_circle(64);
    return make_stable(c.lattice.dim, model.order(), a);
  } catch (const std::exception& e) {
    throw ConfigError("reference.kind", c.line_of("reference.kind"), e.what());
  }
}

ScalingFunction build_scaling(const RunConfig& c, const LevyModel& model) {
  const std::string field = "scaling.kind";
  try {
    if (c.scaling.kind == "model") {
      if (!model.scaling()) throw ConfigError(field, c.line_of(field), "this model kind needs an explicit scaling");
      return *model.scaling();
    }
    if (c.scaling.kind == "power") return ScalingFunction::power_law(c.scaling.alpha);
    if (c.scaling.kind == "bernstein") {
      const int dim = c.lattice.dim;
      return ScalingFunction::bernstein(
          std::make_shared<BernsteinKernel>(BernsteinPhi(c.scaling.phi_family, c.scaling.phi_params), dim));
    }
    std::vector<double> r, w;
    for (const auto& [x, y] : read_pairs_csv(c.scaling.path)) {
      r.push_back(x);
      w.push_back(y);
    }
    return ScalingFunction::tabulated(std::move(r), std::move(w));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("scaling", c.line_of(field), e.what());
  }
}

SuiteOptions suite_options(const RunConfig& c) {
  SuiteOptions o;
  o.lattice = c.lattice;
  o.kernel_lattice = c.kernel_lattice;
  o.N = c.N;
  o.j_max = c.j_max;
  o.beta = c.beta;
  o.lambda = c.lambda;
  o.T = c.T;
  o.K = c.K;
  o.kappas = c.kappas;
  o.kernel_j = c.kernel_j;
  o.kernel_times = c.kernel_times;
  o.r2_min = c.r2_min;
  o.family_size = c.family_size;
  o.family_seed = c.family_seed;
  o.ratio_bound = c.ratio_bound;
  o.refinement_tol = c.refinement_tol;
  o.mc.paths = c.paths;
  o.mc.seed = c.seed;
  o.mc.eps = c.eps;
  o.probes = c.probes;
  o.checks = c.checks;
  return o;
}

}  // namespace gensmooth
