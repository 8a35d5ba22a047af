#include "bdsim/io/manifest.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

#include <json.hpp>

namespace bdsim::io {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  nlohmann::json j;
  j["config"] = manifest.config;
  j["code_version"] = manifest.code_version;
  j["seed"] = manifest.seed;
  j["started_at"] = manifest.started_at;
  j["finished_at"] = manifest.finished_at;
  j["outputs"] = manifest.outputs;
  j["status"] = manifest.status;
  if (manifest.status == "integration_failure") {
    j["failure_time"] = manifest.failure_time;
  }
  j["ledger_schema"] = manifest.ledger_schema;

  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write manifest: " + path);
  os << j.dump(2) << "\n";
}

}  // namespace bdsim::io
