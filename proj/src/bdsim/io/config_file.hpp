#pragma once

#include <map>
#include <string>

#include "bdsim/solver/config.hpp"

namespace bdsim::io {

using KeyValues = std::map<std::string, std::string>;

/// Full run description loaded from a flat key = value file. `effective`
/// echoes every key with its resolved value (defaults filled in) for the
/// manifest.
struct RunConfig {
  solver::SolverConfig solver;
  solver::InitialDataSpec init;
  int snapshot_stride = 0;  // 0 = no snapshots
  KeyValues effective;
};

/// Parses `key = value` lines; '#' starts a comment; blank lines ignored.
/// Unknown keys are errors (ConfigError), as are malformed values.
KeyValues parse_key_value_file(const std::string& path);

RunConfig run_config_from_values(const KeyValues& kv);
RunConfig load_run_config(const std::string& path);

}  // namespace bdsim::io
