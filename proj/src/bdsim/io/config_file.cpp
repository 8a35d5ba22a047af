#include "bdsim/io/config_file.hpp"

#include <charconv>
#include <fstream>
#include <set>

#include "bdsim/io/csv.hpp"

namespace bdsim::io {

namespace {

std::string trim(std::string_view sv) {
  const auto begin = sv.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = sv.find_last_not_of(" \t\r");
  return std::string(sv.substr(begin, end - begin + 1));
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("config key '" + key + "': bad real value '" + value + "'");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto res = std::from_chars(first, last, out);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw ConfigError("config key '" + key + "': bad integer value '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config key '" + key + "': bad boolean value '" + value + "'");
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "grid_n",        "grid_l",        "dt",
      "cfl",           "t_end",         "nu",
      "eta",           "sobolev_s",     "integrator",
      "dealias",       "diagnostics_stride", "linear_only",
      "e2_index",      "init_kind",     "amplitude",
      "seed",          "band_lo",       "band_hi",
      "spectral_decay", "init_file",    "init_region",
      "snapshot_stride",
  };
  return keys;
}

}  // namespace

KeyValues parse_key_value_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  KeyValues kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    }
    if (!known_keys().count(key)) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (kv.count(key)) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    kv[key] = value;
  }
  return kv;
}

RunConfig run_config_from_values(const KeyValues& kv) {
  RunConfig rc;
  auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  if (const auto* v = get("grid_n")) rc.solver.grid_n = static_cast<int>(parse_int("grid_n", *v));
  if (const auto* v = get("grid_l")) rc.solver.grid_l = parse_real("grid_l", *v);
  if (const auto* v = get("dt")) rc.solver.dt = parse_real("dt", *v);
  if (const auto* v = get("cfl")) rc.solver.cfl = parse_real("cfl", *v);
  if (const auto* v = get("t_end")) rc.solver.t_end = parse_real("t_end", *v);
  if (const auto* v = get("nu")) rc.solver.nu = parse_real("nu", *v);
  if (const auto* v = get("eta")) rc.solver.eta = parse_real("eta", *v);
  if (const auto* v = get("sobolev_s")) {
    rc.solver.sobolev_s = static_cast<int>(parse_int("sobolev_s", *v));
  }
  if (const auto* v = get("integrator")) {
    if (*v == "ifrk2") {
      rc.solver.integrator = solver::Integrator::ifrk2;
    } else if (*v == "ifrk4") {
      rc.solver.integrator = solver::Integrator::ifrk4;
    } else {
      throw ConfigError("integrator must be ifrk2 or ifrk4");
    }
  }
  if (const auto* v = get("dealias")) {
    if (*v == "masked") {
      rc.solver.dealias = spectral::DealiasMode::masked;
    } else if (*v == "padded") {
      rc.solver.dealias = spectral::DealiasMode::padded;
    } else {
      throw ConfigError("dealias must be masked or padded");
    }
  }
  if (const auto* v = get("diagnostics_stride")) {
    rc.solver.diagnostics_stride = static_cast<int>(parse_int("diagnostics_stride", *v));
  }
  if (const auto* v = get("linear_only")) rc.solver.linear_only = parse_bool("linear_only", *v);
  if (const auto* v = get("e2_index")) rc.solver.e2_index = parse_real("e2_index", *v);

  if (const auto* v = get("init_kind")) {
    if (*v == "single_mode") {
      rc.init.kind = solver::InitKind::single_mode;
    } else if (*v == "random_band") {
      rc.init.kind = solver::InitKind::random_band;
    } else if (*v == "file") {
      rc.init.kind = solver::InitKind::file;
    } else {
      throw ConfigError("init_kind must be single_mode, random_band or file");
    }
  }
  if (const auto* v = get("amplitude")) rc.init.amplitude = parse_real("amplitude", *v);
  if (const auto* v = get("seed")) {
    rc.init.seed = static_cast<std::uint64_t>(parse_int("seed", *v));
  }
  if (const auto* v = get("band_lo")) rc.init.band_lo = static_cast<int>(parse_int("band_lo", *v));
  if (const auto* v = get("band_hi")) rc.init.band_hi = static_cast<int>(parse_int("band_hi", *v));
  if (const auto* v = get("spectral_decay")) {
    rc.init.spectral_decay = parse_real("spectral_decay", *v);
  }
  if (const auto* v = get("init_file")) rc.init.file = *v;
  if (const auto* v = get("init_region")) {
    if (*v == "all") {
      rc.init.region = solver::RegionFilter::all;
    } else if (*v == "d1") {
      rc.init.region = solver::RegionFilter::d1;
    } else if (*v == "d2") {
      rc.init.region = solver::RegionFilter::d2;
    } else if (*v == "d3") {
      rc.init.region = solver::RegionFilter::d3;
    } else {
      throw ConfigError("init_region must be all, d1, d2 or d3");
    }
  }
  if (const auto* v = get("snapshot_stride")) {
    rc.snapshot_stride = static_cast<int>(parse_int("snapshot_stride", *v));
    if (rc.snapshot_stride < 0) throw ConfigError("snapshot_stride must be >= 0");
  }
  if (rc.init.kind == solver::InitKind::file && rc.init.file.empty()) {
    throw ConfigError("init_kind = file requires init_file");
  }

  try {
    rc.solver.validate();
  } catch (const InvalidInput& e) {
    throw ConfigError(e.what());
  }

  // effective snapshot for the manifest
  const char* integ = rc.solver.integrator == solver::Integrator::ifrk2 ? "ifrk2" : "ifrk4";
  const char* dealias = rc.solver.dealias == spectral::DealiasMode::masked ? "masked" : "padded";
  const char* kind = rc.init.kind == solver::InitKind::single_mode   ? "single_mode"
                     : rc.init.kind == solver::InitKind::random_band ? "random_band"
                                                                     : "file";
  const char* region = rc.init.region == solver::RegionFilter::all  ? "all"
                       : rc.init.region == solver::RegionFilter::d1 ? "d1"
                       : rc.init.region == solver::RegionFilter::d2 ? "d2"
                                                                    : "d3";
  rc.effective = {
      {"grid_n", std::to_string(rc.solver.grid_n)},
      {"grid_l", format_double(rc.solver.grid_l)},
      {"dt", format_double(rc.solver.dt)},
      {"cfl", format_double(rc.solver.cfl)},
      {"t_end", format_double(rc.solver.t_end)},
      {"nu", format_double(rc.solver.nu)},
      {"eta", format_double(rc.solver.eta)},
      {"sobolev_s", std::to_string(rc.solver.sobolev_s)},
      {"integrator", integ},
      {"dealias", dealias},
      {"diagnostics_stride", std::to_string(rc.solver.diagnostics_stride)},
      {"linear_only", rc.solver.linear_only ? "true" : "false"},
      {"e2_index", format_double(rc.solver.e2_index)},
      {"init_kind", kind},
      {"amplitude", format_double(rc.init.amplitude)},
      {"seed", std::to_string(rc.init.seed)},
      {"band_lo", std::to_string(rc.init.band_lo)},
      {"band_hi", std::to_string(rc.init.band_hi)},
      {"spectral_decay", format_double(rc.init.spectral_decay)},
      {"init_file", rc.init.file},
      {"init_region", region},
      {"snapshot_stride", std::to_string(rc.snapshot_stride)},
  };
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  return run_config_from_values(parse_key_value_file(path));
}

}  // namespace bdsim::io
