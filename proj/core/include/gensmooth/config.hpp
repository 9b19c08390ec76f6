#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gensmooth/grid.hpp"
#include "gensmooth/levy_model.hpp"
#include "gensmooth/scaling.hpp"
#include "gensmooth/verify.hpp"

namespace gensmooth {

struct ModelSpec {
  std::string kind;             // stable | bernstein | table; the reference also accepts auto
  double alpha = 0.0;           // stable, table
  std::vector<double> angular;  // d=1: (w+, w−); d=2: σ at K uniform angles
  int angles = 64;              // d=2 uniform circle when angular is empty
  int phi_family = 0;           // bernstein
  std::vector<double> phi_params;
  std::string radial_csv;       // table: (r, density) rows
  double intensity = 1.0;
  double dilation = 1.0;
};

inline ModelSpec auto_reference() {
  ModelSpec m;
  m.kind = "auto";
  return m;
}

struct ScalingSpec {
  std::string kind = "model";  // model | power | bernstein | table
  double alpha = 0.0;
  int phi_family = 0;
  std::vector<double> phi_params;
  std::string path;
};

struct RunConfig {
  Lattice lattice = default_lattice(1);
  double N = 4.0;
  int j_max = 0;  // 0: as many bands as the lattice resolves

  ModelSpec model;
  ModelSpec reference = auto_reference();
  ScalingSpec scaling;

  double lambda = 1.0;
  double T = 1.0;
  int K = 256;
  int store_every = 16;

  std::uint64_t seed = 20240601;
  std::size_t paths = 100000;
  double eps = 1e-2;
  int probes = 16;

  double beta = 0.5;
  std::vector<double> kappas{0.0, 0.5, 1.0};
  int family_size = 20;
  std::uint64_t family_seed = 7;
  double ratio_bound = 1e3;
  double refinement_tol = 0.25;
  double r2_min = 0.98;
  std::vector<int> kernel_j{1, 2, 3};
  Lattice kernel_lattice = default_kernel_lattice(1);
  std::vector<double> kernel_times{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<std::string> checks;  // empty: all

  std::string output_dir = "out";

  // Source line of each "section.key", for diagnostics after parsing.
  std::map<std::string, int> lines;
  int line_of(const std::string& field) const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
// Every field written explicitly; parse_config(normalize(c)) normalizes to the same text.
std::string normalize(const RunConfig& c);
std::string config_hash(const RunConfig& c);

LevyModel build_model(const RunConfig& c);
LevyModel build_reference(const RunConfig& c, const LevyModel& model);
ScalingFunction build_scaling(const RunConfig& c, const LevyModel& model);
SuiteOptions suite_options(const RunConfig& c);

}  // namespace gensmooth
