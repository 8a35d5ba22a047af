#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdsim/io/config_file.hpp"

namespace bdsim::io {

struct RunManifest {
  KeyValues config;
  std::string code_version;
  std::uint64_t seed = 0;
  std::string started_at;   // ISO 8601 UTC
  std::string finished_at;  // ISO 8601 UTC
  std::vector<std::string> outputs;
  std::string status;  // completed | integration_failure | resolution_flagged
  double failure_time = 0.0;
  std::string ledger_schema;
};

std::string utc_timestamp();

void write_manifest(const std::string& path, const RunManifest& manifest);

}  // namespace bdsim::io
