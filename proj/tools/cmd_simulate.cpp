#include <filesystem>
#include <iostream>

#include "bdsim/io/config_file.hpp"
#include "bdsim/io/manifest.hpp"
#include "bdsim/io/snapshot.hpp"
#include "bdsim/solver/simulate.hpp"
#include "commands.hpp"
#include "run_output.hpp"

namespace bdsim::cli {

namespace fs = std::filesystem;

int run_one_simulation(io::RunConfig rc, const CommonOptions& opts,
                       const fs::path& dir, solver::SimulationResult* result_out) {
  if (opts.seed_set) {
    rc.init.seed = opts.seed;
    rc.effective["seed"] = std::to_string(opts.seed);
  }
  fs::create_directories(dir);

  io::RunManifest manifest;
  manifest.config = rc.effective;
  manifest.code_version = kVersion;
  manifest.seed = rc.init.seed;
  manifest.started_at = io::utc_timestamp();
  manifest.ledger_schema = kLedgerSchema;

  const int snap_stride = rc.snapshot_stride;
  std::vector<std::string> snapshot_files;
  solver::StepHook hook;
  if (snap_stride > 0) {
    fs::create_directories(dir / "snapshots");
    hook = [&](const solver::FlowState& state, std::uint64_t step) {
      if (step % static_cast<std::uint64_t>(snap_stride) != 0) return;
      char name[64];
      std::snprintf(name, sizeof(name), "snapshots/snap_%08llu.bdsf",
                    static_cast<unsigned long long>(step));
      const fs::path p = dir / name;
      io::write_snapshot(p.string(), {&state.omega, &state.theta},
                         io::kFlagRealFields | io::kFlagMeanZero);
      snapshot_files.push_back(name);
    };
  }

  solver::SimulationResult result = solver::simulate(rc.solver, rc.init, hook);

  write_ledger_csv_file((dir / "ledger.csv").string(), result.ledger);
  manifest.outputs.push_back("ledger.csv");
  for (const auto& s : snapshot_files) manifest.outputs.push_back(s);
  manifest.finished_at = io::utc_timestamp();
  if (result.status == solver::RunStatus::integration_failure) {
    manifest.status = "integration_failure";
    manifest.failure_time = result.failure_time;
  } else if (result.ledger.any_resolution_flagged()) {
    manifest.status = "resolution_flagged";
  } else {
    manifest.status = "completed";
  }
  manifest.outputs.push_back("manifest.json");
  io::write_manifest((dir / "manifest.json").string(), manifest);

  if (result_out) *result_out = std::move(result);
  return manifest.status == "integration_failure" ? kExitIntegrationFailure : kExitOk;
}

int cmd_simulate(const std::string& config_path, const CommonOptions& opts) {
  const io::RunConfig rc = io::load_run_config(config_path);
  const int code = run_one_simulation(rc, opts, fs::path(opts.out_dir), nullptr);
  if (code == kExitIntegrationFailure) {
    std::cerr << "integration failure; partial ledger written\n";
  }
  return code;
}

}  // namespace bdsim::cli
