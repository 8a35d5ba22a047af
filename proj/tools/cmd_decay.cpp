#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bdsim/io/config_file.hpp"
#include "bdsim/semigroup/certify.hpp"
#include "bdsim/solver/simulate.hpp"
#include "commands.hpp"
#include "run_output.hpp"

namespace bdsim::cli {

namespace fs = std::filesystem;

int run_one_simulation(io::RunConfig rc, const CommonOptions& opts,
                       const fs::path& dir, solver::SimulationResult* result_out);

namespace {

/// Least-squares slope of log(v) against t (exponential rate fit).
double fit_exponential_rate(const std::vector<double>& t, const std::vector<double>& v) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(v[i] > 0.0)) continue;
    const double y = std::log(v[i]);
    sx += t[i];
    sy += y;
    sxx += t[i] * t[i];
    sxy += t[i] * y;
    ++n;
  }
  if (n < 2) return 0.0;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

int cmd_decay(const std::string& config_path, const CommonOptions& opts,
              int lattice_bound) {
  io::RunConfig rc = io::load_run_config(config_path);
  rc.solver.linear_only = true;
  rc.effective["linear_only"] = "true";

  const fs::path root(opts.out_dir);
  fs::create_directories(root);

  solver::SimulationResult result;
  const int code = run_one_simulation(rc, opts, root, &result);
  if (code != kExitOk) return code;

  std::vector<double> times, proxies;
  for (const auto& row : result.ledger.rows()) {
    times.push_back(row.time);
    proxies.push_back(row.u2_linf_proxy);
  }
  const double rate = fit_exponential_rate(times, proxies);

  // weighted-kernel lattice sups and their algebraic decay exponents
  const std::vector<double> ts = semigroup::log_spaced(1.0, 100.0, 25);
  const auto series = semigroup::tabulate_kernel_decay(lattice_bound, ts);
  {
    std::ofstream os(root / "kernel_decay.csv", std::ios::binary | std::ios::trunc);
    io::CsvWriter csv(os);
    csv.header({"t", "sup_m1_weighted", "sup_m2_weighted"});
    for (std::size_t i = 0; i < series.t.size(); ++i) {
      csv.add(series.t[i]).add(series.sup_m1_weighted[i]).add(series.sup_m2_weighted[i]);
      csv.end_row();
    }
  }
  const double slope_m1 = semigroup::fit_loglog_slope(series.t, series.sup_m1_weighted);
  const double slope_m2 = semigroup::fit_loglog_slope(series.t, series.sup_m2_weighted);

  {
    std::ofstream os(root / "decay_fit.csv", std::ios::binary | std::ios::trunc);
    io::CsvWriter csv(os);
    csv.header({"quantity", "value"});
    csv.add("u2_proxy_exponential_rate").add(rate);
    csv.end_row();
    csv.add("kernel_m1_weighted_loglog_slope").add(slope_m1);
    csv.end_row();
    csv.add("kernel_m2_weighted_loglog_slope").add(slope_m2);
    csv.end_row();
  }

  std::cout << "u2 proxy exponential rate: " << rate << "\n"
            << "kernel sup slopes (log-log): m1 " << slope_m1 << ", m2 " << slope_m2
            << "\n";
  return kExitOk;
}

}  // namespace bdsim::cli
