#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "gensmooth/config.hpp"
#include "gensmooth/errors.hpp"
#include "gensmooth/io.hpp"

using namespace gensmooth;

namespace {

const std::string kData = GENSMOOTH_TEST_DATA;

ConfigError parse_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return ConfigError("", 0, "");
}

}  // namespace

TEST(Config, DefaultsAreExplicitInNormalizedForm) {
  const RunConfig c = parse_config("[model]\nkind = stable\nalpha = 0.5\n");
  EXPECT_EQ(c.lattice.points, default_lattice(1).points);
  EXPECT_EQ(c.seed, 20240601u);
  EXPECT_EQ(c.paths, 100000u);
  EXPECT_EQ(c.reference.kind, "auto");
  const std::string n = normalize(c);
  for (const char* key : {"points = ", "seed = 20240601", "paths = 100000", "eps = 0.01", "kappas = 0, 0.5, 1",
                          "run = all", "kind = auto", "store_every = 16", "kernel_points = 4096"})
    EXPECT_NE(n.find(key), std::string::npos) << key;
}

TEST(Config, NormalizationRoundTripsAndIsIdempotent) {
  const std::string texts[] = {
      "[model]\nkind = stable\nalpha = 0.5\n",
      "[lattice]\ndim = 2\n[model]\nkind = stable\nalpha = 1.5\nangles = 32\n[checks]\nrun = regularity, kernel_decay\n",
      "[model]\nkind = bernstein\nphi_family = 2\nphi_params = 0.5, 0.5\n[scaling]\nkind = bernstein\n"
      "phi_family = 2\nphi_params = 0.5, 0.5\n[reference]\nkind = stable\nalpha = 1\n",
      "[model]\nkind = stable\nalpha = 1.2\nangular = 3, 1\nintensity = 2\n[mc]\nseed = 18446744073709551615\n"
      "[solver]\nlambda = 0\nt = 2.5\nk = 128\nstore_every = 32\n",
  };
  for (const auto& t : texts) {
    const RunConfig a = parse_config(t);
    const std::string na = normalize(a);
    const RunConfig b = parse_config(na);
    EXPECT_EQ(normalize(b), na) << t;
    EXPECT_EQ(config_hash(a), config_hash(b));
  }
}

TEST(Config, CommentsCaseAndWhitespace) {
  const RunConfig c = parse_config("# header\n[model]   \n  KIND = stable ; trailing\nalpha=0.75\n\n[mc]\nseed = 5 # x\n");
  EXPECT_EQ(c.model.kind, "stable");
  EXPECT_DOUBLE_EQ(c.model.alpha, 0.75);
  EXPECT_EQ(c.seed, 5u);
}

TEST(Config, ErrorsNameFieldAndLine) {
  auto e = parse_error("[lattice]\ndim = 1\n\n[model]\nkind = stable\n");
  EXPECT_EQ(e.field(), "model.alpha");
  EXPECT_EQ(e.line(), 4);

  e = parse_error("[model]\nkind = stable\nalpha = half\n");
  EXPECT_EQ(e.field(), "model.alpha");
  EXPECT_EQ(e.line(), 3);
  EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\ncolour = red\n");
  EXPECT_EQ(e.field(), "model.colour");
  EXPECT_EQ(e.line(), 4);

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\nalpha = 0.6\n");
  EXPECT_EQ(e.line(), 4);

  e = parse_error("[modle]\n");
  EXPECT_EQ(e.line(), 1);

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\nphi_family = 1\n");
  EXPECT_EQ(e.field(), "model.phi_family");

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\n[solver]\nk = 100\nstore_every = 16\n");
  EXPECT_EQ(e.field(), "solver.store_every");
  EXPECT_EQ(e.line(), 6);

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\n[checks]\nrun = regularity, nonsense\n");
  EXPECT_EQ(e.field(), "checks.run");
  EXPECT_EQ(e.line(), 5);

  e = parse_error("[model]\nkind = auto\n");
  EXPECT_EQ(e.field(), "model.kind");

  e = parse_error("[lattice]\ndim = 3\n[model]\nkind = stable\nalpha = 0.5\n");
  EXPECT_EQ(e.field(), "lattice");

  e = parse_error("[model]\nkind = stable\nalpha = 0.5\n[mc]\nseed = -1\n");
  EXPECT_EQ(e.field(), "mc.seed");

  e = parse_error("kind = stable\n");
  EXPECT_EQ(e.line(), 1);

  e = parse_error("[lattice]\ndim = 1\n");
  EXPECT_EQ(e.field(), "model");

  EXPECT_THROW(parse_config("[model]\nkind = stable\nalpha = 0.5\n[checks]\nkappas = 0.5, 1.5\n"), ConfigError);
  EXPECT_THROW(parse_config("[model]\nkind = stable\nalpha = 0.5\n[mc]\neps = 0\n"), ConfigError);
  EXPECT_THROW(parse_config("[model]\nkind = stable\nalpha = 0.5\n[solver]\nlambda = -1\n"), ConfigError);
}

TEST(Config, LoadReportsPathFieldAndLine) {
  try {
    load_config(kData + "/missing_alpha.ini");
    FAIL();
  } catch (const ConfigError& e) {
    const std::string w = e.what();
    EXPECT_NE(w.find("missing_alpha.ini"), std::string::npos) << w;
    EXPECT_NE(w.find("model.alpha"), std::string::npos) << w;
    EXPECT_NE(w.find("line 4"), std::string::npos) << w;
    EXPECT_EQ(w.find("line 4", w.find("line 4") + 1), std::string::npos) << w;
  }
}

TEST(Config, BuildsModelsAndScalings) {
  const RunConfig s = load_config(kData + "/stable.ini");
  const LevyModel m = build_model(s);
  EXPECT_DOUBLE_EQ(m.order(), 0.5);
  EXPECT_NEAR(build_scaling(s, m).w(0.25), 0.5, 1e-15);
  const LevyModel ref = build_reference(s, m);
  EXPECT_EQ(ref.hash(), m.hash());

  RunConfig b = parse_config("[model]\nkind = bernstein\nphi_family = 1\nphi_params = 0.5\n");
  const double wm = build_scaling(b, build_model(b)).w(0.5);
  b = parse_config("[model]\nkind = bernstein\nphi_family = 1\nphi_params = 0.5\n[scaling]\nkind = bernstein\n"
                   "phi_family = 1\nphi_params = 0.5\n");
  EXPECT_NEAR(build_scaling(b, build_model(b)).w(0.5), wm, 1e-12);

  const RunConfig bad = parse_config("[model]\nkind = stable\nalpha = 2.5\n");
  EXPECT_THROW(build_model(bad), ConfigError);
}

TEST(Config, TableModelResolvesRelativePaths) {
  const auto dir = std::filesystem::temp_directory_path() / "gensmooth_config_table";
  std::filesystem::create_directories(dir);
  write_file_atomic((dir / "radial.csv").string(), read_file(kData + "/radial_stable08.csv"));
  write_file_atomic((dir / "w.csv").string(), read_file(kData + "/scaling_power08.csv"));
  write_file_atomic((dir / "table.ini").string(),
                    "[model]\nkind = table\nalpha = 0.8\nradial_csv = radial.csv\n[scaling]\nkind = table\npath = w.csv\n");
  write_file_atomic((dir / "bare.ini").string(), "[model]\nkind = table\nalpha = 0.8\nradial_csv = radial.csv\n");
  const RunConfig bare = load_config((dir / "bare.ini").string());
  EXPECT_THROW(build_scaling(bare, build_model(bare)), ConfigError);
  const RunConfig c = load_config((dir / "table.ini").string());
  EXPECT_TRUE(std::filesystem::path(c.model.radial_csv).is_absolute());
  const LevyModel m = build_model(c);
  EXPECT_DOUBLE_EQ(m.order(), 0.8);
  EXPECT_NEAR(build_scaling(c, m).w(0.01), std::pow(0.01, 0.8), 1e-3 * std::pow(0.01, 0.8));
  std::filesystem::remove_all(dir);
}

TEST(Config, SuiteOptionsCarryFields) {
  const RunConfig c = load_config(kData + "/verify_small.ini");
  const SuiteOptions o = suite_options(c);
  EXPECT_EQ(o.checks.size(), 3u);
  EXPECT_EQ(o.kernel_lattice.points, 1024);
  EXPECT_EQ(o.kernel_j, (std::vector<int>{1, 2}));
  EXPECT_EQ(o.mc.paths, 2000u);
  EXPECT_EQ(o.probes, 4);
  EXPECT_EQ(o.family_size, 6);
  EXPECT_EQ(o.K, 64);
}

TEST(Config, HashTracksContent) {
  const RunConfig a = parse_config("[model]\nkind = stable\nalpha = 0.5\n");
  const RunConfig b = parse_config("[model]\nkind = stable\nalpha = 0.5\n[mc]\nseed = 1\n");
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
}
