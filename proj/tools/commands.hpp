#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bdsim::cli {

// Stable exit-code contract:
//   0 success, 1 suite failure, 2 configuration error, 3 integration failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitSuiteFailure = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIntegrationFailure = 3;

struct CommonOptions {
  std::string out_dir;  // resolved from --out-dir or BDSIM_OUT_DIR or "."
  bool seed_set = false;
  std::uint64_t seed = 0;
  int threads = 1;
};

int cmd_simulate(const std::string& config_path, const CommonOptions& opts);
int cmd_sweep(const std::string& config_path, const CommonOptions& opts,
              const std::vector<double>& amplitudes);
int cmd_decay(const std::string& config_path, const CommonOptions& opts,
              int lattice_bound);
int cmd_kernels(const CommonOptions& opts, int lattice_bound, double t_max,
                int t_count, bool inject_wrong_sign_m2);
int cmd_identities(const CommonOptions& opts, int seeds, int grid_n, int sobolev_s);

}  // namespace bdsim::cli
