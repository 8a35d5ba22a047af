#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "bdsim/energy/ledger.hpp"
#include "bdsim/io/csv.hpp"

namespace bdsim::cli {

inline const std::vector<std::string_view>& ledger_columns() {
  static const std::vector<std::string_view> cols = {
      "time",          "E",           "E1_running",     "E2_running",
      "A_sup",         "A1_running",  "I1",             "K_integrand",
      "K_abs_running", "u2_linf_proxy", "u2_linf43_running", "omega_Hneg2",
      "theta_Hneg1",   "M_T",         "frakM_T",        "resolution_flag",
  };
  return cols;
}

inline constexpr const char* kLedgerSchema = "bdsim-ledger-v1";

inline void write_ledger_csv(std::ostream& os, const energy::FunctionalLedger& ledger) {
  io::CsvWriter csv(os);
  csv.header(ledger_columns());
  for (const auto& r : ledger.rows()) {
    csv.add(r.time)
        .add(r.E)
        .add(r.E1_run)
        .add(r.E2_run)
        .add(r.A_sup)
        .add(r.A1_run)
        .add(r.I1)
        .add(r.K_integrand)
        .add(r.K_abs_run)
        .add(r.u2_linf_proxy)
        .add(r.u2_linf43_run)
        .add(r.omega_hneg2)
        .add(r.theta_hneg1)
        .add(r.M_T)
        .add(r.frakM_T)
        .add(static_cast<long long>(r.resolution_flagged ? 1 : 0));
    csv.end_row();
  }
}

inline void write_ledger_csv_file(const std::string& path,
                                  const energy::FunctionalLedger& ledger) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write ledger: " + path);
  write_ledger_csv(os, ledger);
}

}  // namespace bdsim::cli
