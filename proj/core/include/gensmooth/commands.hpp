#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gensmooth/config.hpp"

namespace gensmooth {

enum ExitCode : int { kExitPass = 0, kExitCheckFailure = 1, kExitUsage = 2 };

struct CommandOptions {
  std::string config_path;
  std::string out_dir;  // overrides [output] dir when set
  std::optional<std::uint64_t> seed;
  std::vector<std::string> checks;
  bool quiet = false;
  std::vector<std::string> inputs;  // norms: one function file; solve: 1 or K+1 forcing files
  std::vector<double> betas;        // norms; defaults to [checks] beta
};

// Each writes into out_dir and returns an ExitCode; errors propagate as exceptions.
int cmd_check(const RunConfig& c, const std::string& out_dir, std::ostream& log);
int cmd_norms(const RunConfig& c, const std::string& input, const std::vector<double>& betas,
              const std::string& out_dir, std::ostream& log);
int cmd_solve(const RunConfig& c, const std::vector<std::string>& inputs, const std::string& out_dir,
              std::ostream& log);
int cmd_verify(const RunConfig& c, const std::string& out_dir, std::ostream& log);

// Loads the config, applies overrides, dispatches, and maps errors to exit code 2.
int run_command(const std::string& name, const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace gensmooth
