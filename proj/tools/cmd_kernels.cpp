#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "bdsim/io/csv.hpp"
#include "bdsim/semigroup/certify.hpp"
#include "commands.hpp"

namespace bdsim::cli {

namespace fs = std::filesystem;

using semigroup::ModeRegion;
using semigroup::PropagatorMatrix;

namespace {

double rel_diff(const PropagatorMatrix& a, const PropagatorMatrix& b) {
  const double scale = std::max({std::abs(b.m1), std::abs(b.m2), std::abs(b.m3),
                                 std::abs(b.m4), 1e-300});
  const double diff = std::max({std::abs(a.m1 - b.m1), std::abs(a.m2 - b.m2),
                                std::abs(a.m3 - b.m3), std::abs(a.m4 - b.m4)});
  return diff / scale;
}

}  // namespace

int cmd_kernels(const CommonOptions& opts, int lattice_bound, double t_max,
                int t_count, bool inject_wrong_sign_m2) {
  if (lattice_bound <= 0) throw ConfigError("kernels: lattice bound must be positive");
  if (!(t_max > 0.0) || t_count < 1) throw ConfigError("kernels: bad time sampling");

  const fs::path root(opts.out_dir);
  fs::create_directories(root);
  std::ofstream os(root / "kernels.csv", std::ios::binary | std::ios::trunc);
  io::CsvWriter csv(os);
  csv.header({"xi1", "xi2", "region", "t", "re_m1", "im_m1", "re_m2", "im_m2",
              "re_m3", "im_m3", "re_m4", "im_m4", "envelope_m1", "envelope_m2",
              "ratio_m1", "ratio_m2"});

  const std::vector<double> ts = semigroup::log_spaced(t_max / 100.0, t_max, t_count);

  bool ok = true;
  double worst_oracle = 0.0, worst_det = 0.0, worst_m3 = 0.0, worst_conj = 0.0;
  // full rows on a coarse sub-lattice, checks everywhere
  const int row_stride = std::max(1, lattice_bound / 8);
  for (int m1 = -lattice_bound; m1 <= lattice_bound; ++m1) {
    for (int m2 = -lattice_bound; m2 <= lattice_bound; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const double xi1 = m1, xi2 = m2;
      const double ksq = xi1 * xi1 + xi2 * xi2;
      for (double t : ts) {
        PropagatorMatrix p = semigroup::propagator(xi1, xi2, t);
        if (inject_wrong_sign_m2) p.m2 = -p.m2;

        // det e^{tA} = e^{-t}; past t ~ 10 the two entry products cancel to
        // below roundoff of their own size, so the check is capped there
        if (t <= 10.0) {
          const double det_defect =
              std::abs(p.m1 * p.m4 - p.m2 * p.m3 - Complex{std::exp(-t), 0.0}) /
              std::exp(-t);
          worst_det = std::max(worst_det, det_defect);
        }
        const double m3_defect = std::abs(p.m3 - p.m2 / ksq) /
                                 std::max(std::abs(p.m3), 1e-300);
        worst_m3 = std::max(worst_m3, xi1 == 0.0 ? 0.0 : m3_defect);

        const PropagatorMatrix pm = semigroup::propagator(-xi1, -xi2, t);
        const PropagatorMatrix conj_p{std::conj(p.m1), std::conj(p.m2),
                                      std::conj(p.m3), std::conj(p.m4)};
        worst_conj = std::max(worst_conj, rel_diff(pm, conj_p));

        if (std::abs(m1) % row_stride == 0 && std::abs(m2) % row_stride == 0) {
          const PropagatorMatrix oracle = semigroup::propagator_oracle(xi1, xi2, t);
          worst_oracle = std::max(worst_oracle, rel_diff(p, oracle));

          const auto env = semigroup::decay_envelope(xi1, xi2, t);
          csv.add(xi1)
              .add(xi2)
              .add(semigroup::region_name(semigroup::classify(xi1, xi2)))
              .add(t)
              .add(p.m1.real())
              .add(p.m1.imag())
              .add(p.m2.real())
              .add(p.m2.imag())
              .add(p.m3.real())
              .add(p.m3.imag())
              .add(p.m4.real())
              .add(p.m4.imag())
              .add(env.m1)
              .add(env.m2)
              .add(std::abs(p.m1) / env.m1)
              .add(env.m2 > 0.0 ? std::abs(p.m2) / env.m2 : 0.0);
          csv.end_row();
        }
      }
    }
  }

  const auto cert = semigroup::certify_envelopes(lattice_bound, ts);
  std::cout << "fitted envelope constants:\n"
            << "  D1: m1 " << cert.d1.c_m1 << "  m2 " << cert.d1.c_m2 << "\n"
            << "  D2: m1 " << cert.d2.c_m1 << "  m2 " << cert.d2.c_m2 << "\n"
            << "  D3: m1 " << cert.d3.c_m1 << "  m2 " << cert.d3.c_m2 << "\n";

  if (worst_oracle > 1e-9) {
    std::cerr << "FAIL propagator vs oracle: " << worst_oracle << "\n";
    ok = false;
  }
  if (worst_det > 1e-10) {
    std::cerr << "FAIL determinant identity: " << worst_det << "\n";
    ok = false;
  }
  if (worst_m3 > 1e-12) {
    std::cerr << "FAIL m3 = m2/|xi|^2: " << worst_m3 << "\n";
    ok = false;
  }
  if (worst_conj > 1e-12) {
    std::cerr << "FAIL conjugation symmetry: " << worst_conj << "\n";
    ok = false;
  }
  for (const auto* fit : {&cert.d1, &cert.d2, &cert.d3}) {
    if (!std::isfinite(fit->c_m1) || !std::isfinite(fit->c_m2)) {
      std::cerr << "FAIL envelope fit not finite\n";
      ok = false;
    }
  }
  if (cert.d3.c_m1 > 10.0) {
    std::cerr << "FAIL D3 m1 envelope constant " << cert.d3.c_m1 << " > 10\n";
    ok = false;
  }
  return ok ? kExitOk : kExitSuiteFailure;
}

}  // namespace bdsim::cli
