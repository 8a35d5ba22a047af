#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "bdsim/common.hpp"
#include "bdsim/kernels/mode_kernels.hpp"
#include "commands.hpp"

using namespace bdsim;

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral simulator for the damped 2D Boussinesq system"};
  app.require_subcommand(1);

  cli::CommonOptions opts;
  if (const char* env = std::getenv("BDSIM_OUT_DIR")) {
    opts.out_dir = env;
  } else {
    opts.out_dir = ".";
  }
  std::string kernels = "auto";
  app.add_option("--out-dir", opts.out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", opts.seed, "override the config seed");
  app.add_option("--threads", opts.threads, "worker threads for sweeps");
  app.add_option("--kernels", kernels, "mode-kernel set: scalar|avx2|auto");

  std::string config_path;
  std::vector<double> amplitudes;
  int lattice_bound = 64;
  double t_max = 50.0;
  int t_count = 24;
  bool inject_wrong_sign = false;
  int seeds = 20;
  int grid_n = 64;
  int sobolev_s = 5;

  auto* sim = app.add_subcommand("simulate", "integrate the nonlinear system");
  sim->add_option("--config", config_path, "run configuration file")->required();

  auto* sweep = app.add_subcommand("sweep", "amplitude sweep of simulate runs");
  sweep->add_option("--config", config_path, "base configuration file")->required();
  sweep->add_option("--amplitudes", amplitudes, "amplitude list")->required()->delimiter(',');

  auto* decay = app.add_subcommand("decay", "linear-decay study and kernel tabulation");
  decay->add_option("--config", config_path, "run configuration file")->required();
  decay->add_option("--lattice-bound", lattice_bound, "kernel tabulation bound");

  auto* kern = app.add_subcommand("kernels", "tabulate and certify the semigroup kernels");
  kern->add_option("--lattice-bound", lattice_bound, "integer lattice bound");
  kern->add_option("--t-max", t_max, "largest time sample");
  kern->add_option("--t-count", t_count, "number of time samples");
  kern->add_flag("--inject-wrong-sign-m2", inject_wrong_sign,
                 "test hook: corrupt the sign of m2");

  auto* ident = app.add_subcommand("identities", "cancellation-identity battery");
  ident->add_option("--seeds", seeds, "number of random states");
  ident->add_option("--grid-n", grid_n, "grid size");
  ident->add_option("--sobolev-s", sobolev_s, "Sobolev index");

  for (CLI::App* sub : {sim, sweep, decay, kern, ident}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfigError;
  }

  opts.seed_set = seed_opt->count() > 0;

  try {
    kernels::select_kernels(kernels);
    if (sim->parsed()) return cli::cmd_simulate(config_path, opts);
    if (sweep->parsed()) return cli::cmd_sweep(config_path, opts, amplitudes);
    if (decay->parsed()) return cli::cmd_decay(config_path, opts, lattice_bound);
    if (kern->parsed()) {
      return cli::cmd_kernels(opts, lattice_bound, t_max, t_count, inject_wrong_sign);
    }
    if (ident->parsed()) return cli::cmd_identities(opts, seeds, grid_n, sobolev_s);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfigError;
  } catch (const InvalidInput& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitSuiteFailure;
  }
  return cli::kExitConfigError;
}
