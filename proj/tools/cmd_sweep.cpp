#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "bdsim/io/config_file.hpp"
#include "bdsim/solver/simulate.hpp"
#include "commands.hpp"
#include "run_output.hpp"

namespace bdsim::cli {

namespace fs = std::filesystem;

int run_one_simulation(io::RunConfig rc, const CommonOptions& opts,
                       const fs::path& dir, solver::SimulationResult* result_out);

namespace {

struct SweepRow {
  double epsilon = 0.0;
  double a0 = 0.0;
  double sup_a = 0.0;
  double a1_t = 0.0;
  std::string status;
};

SweepRow run_member(io::RunConfig rc, const CommonOptions& opts, const fs::path& dir) {
  SweepRow row;
  row.epsilon = rc.init.amplitude;
  solver::SimulationResult result;
  const int code = run_one_simulation(std::move(rc), opts, dir, &result);
  row.status = code == kExitOk ? "completed" : "integration_failure";
  if (!result.ledger.empty()) {
    row.a0 = result.ledger.rows().front().A_sup;
    row.sup_a = result.ledger.back().A_sup;
    row.a1_t = result.ledger.back().A1_run;
  }
  return row;
}

}  // namespace

int cmd_sweep(const std::string& config_path, const CommonOptions& opts,
              const std::vector<double>& amplitudes) {
  if (amplitudes.empty()) throw ConfigError("sweep: empty amplitude list");
  const io::RunConfig base = io::load_run_config(config_path);

  const fs::path root(opts.out_dir);
  fs::create_directories(root);

  std::vector<SweepRow> rows(amplitudes.size());
  const int workers = std::max(1, opts.threads);
  std::size_t next = 0;
  while (next < amplitudes.size()) {
    std::vector<std::future<SweepRow>> batch;
    const std::size_t first = next;
    for (int w = 0; w < workers && next < amplitudes.size(); ++w, ++next) {
      io::RunConfig rc = base;
      rc.init.amplitude = amplitudes[next];
      rc.effective["amplitude"] = io::format_double(amplitudes[next]);
      const fs::path dir = root / ("amp_" + std::to_string(next));
      batch.push_back(std::async(std::launch::async, run_member, std::move(rc),
                                 opts, dir));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) rows[first + i] = batch[i].get();
  }

  std::ofstream os(root / "sweep_summary.csv", std::ios::binary | std::ios::trunc);
  io::CsvWriter csv(os);
  csv.header({"epsilon", "A0", "sup_A", "A1_T", "status"});
  for (const auto& r : rows) {
    csv.add(r.epsilon).add(r.a0).add(r.sup_a).add(r.a1_t).add(r.status);
    csv.end_row();
  }

  for (const auto& r : rows) {
    if (r.status != "completed") {
      std::cerr << "sweep member epsilon=" << r.epsilon << " failed\n";
    }
  }
  return kExitOk;
}

}  // namespace bdsim::cli
