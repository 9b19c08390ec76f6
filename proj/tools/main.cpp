#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gensmooth/commands.hpp"

int main(int argc, char** argv) {
  gensmooth::CommandOptions opt;
  CLI::App app{"Regularity and representation checks for nonlocal operators of Levy type"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&opt](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "Run configuration (INI)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", opt.out_dir, "Output directory (overrides [output] dir)");
    sub->add_option("--seed", opt.seed, "Monte Carlo seed (overrides [mc] seed)");
    sub->add_option("--checks", opt.checks, "Comma-separated subset of checks")->delimiter(',');
    sub->add_flag("--quiet", opt.quiet, "Suppress progress lines");
  };

  auto* check = app.add_subcommand("check", "Check the model assumptions");
  common(check);
  auto* norms = app.add_subcommand("norms", "Norms of a stored grid function");
  common(norms);
  norms->add_option("input", opt.inputs, "Grid function file (.csv or binary)")->required()->expected(1);
  norms->add_option("--beta", opt.betas, "Comma-separated beta values")->delimiter(',');
  auto* solve = app.add_subcommand("solve", "Solve the Cauchy problem for stored forcing");
  common(solve);
  solve->add_option("forcing", opt.inputs, "One time-constant file or K+1 node files")->required();
  auto* verify = app.add_subcommand("verify", "Run the estimate suite");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gensmooth::kExitUsage;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  return gensmooth::run_command(name, opt, std::cout, std::cerr);
}
