#include <doctest.h>

#include <cmath>

#include "bdsim/semigroup/certify.hpp"
#include "bdsim/semigroup/matrix_exp.hpp"
#include "bdsim/semigroup/propagator.hpp"

using namespace bdsim;
using namespace bdsim::semigroup;

namespace {

double entry_rel_diff(const PropagatorMatrix& a, const PropagatorMatrix& b) {
  const double scale = std::max({std::abs(b.m1), std::abs(b.m2), std::abs(b.m3),
                                 std::abs(b.m4), 1e-300});
  return std::max({std::abs(a.m1 - b.m1), std::abs(a.m2 - b.m2), std::abs(a.m3 - b.m3),
                   std::abs(a.m4 - b.m4)}) /
         scale;
}

PropagatorMatrix mat_mul(const PropagatorMatrix& a, const PropagatorMatrix& b) {
  return PropagatorMatrix{a.m1 * b.m1 + a.m2 * b.m3, a.m1 * b.m2 + a.m2 * b.m4,
                          a.m3 * b.m1 + a.m4 * b.m3, a.m3 * b.m2 + a.m4 * b.m4};
}

}  // namespace

TEST_CASE("eigenvalues of the per-mode matrix") {
  CHECK_THROWS_AS(eigenvalues(0.0, 0.0), InvalidInput);

  SUBCASE("xi = (0,1): decoupled, lambda = 0 and -1") {
    const EigenPair e = eigenvalues(0.0, 1.0);
    CHECK(std::abs(e.lambda_plus) < 1e-15);
    CHECK(std::abs(e.lambda_minus - Complex{-1.0, 0.0}) < 1e-15);
    CHECK(e.regime == EigenRegime::real_pair);
  }
  SUBCASE("xi = (1,0): conjugate pair (-1 +- i sqrt(3))/2") {
    const EigenPair e = eigenvalues(1.0, 0.0);
    CHECK(std::abs(e.lambda_plus - Complex{-0.5, 0.5 * std::sqrt(3.0)}) < 1e-15);
    CHECK(std::abs(e.lambda_minus - Complex{-0.5, -0.5 * std::sqrt(3.0)}) < 1e-15);
    CHECK(e.regime == EigenRegime::complex_pair);
  }
  SUBCASE("zero discriminant: double root -1/2") {
    const EigenPair e = eigenvalues(1.0, std::sqrt(3.0));
    CHECK(e.regime == EigenRegime::degenerate);
    CHECK(std::abs(e.lambda_plus - Complex{-0.5, 0.0}) < 1e-8);
    CHECK(std::abs(e.lambda_minus - Complex{-0.5, 0.0}) < 1e-8);
  }
  SUBCASE("trace and determinant identities on a lattice") {
    for (int m1 = -16; m1 <= 16; ++m1) {
      for (int m2 = -16; m2 <= 16; ++m2) {
        if (m1 == 0 && m2 == 0) continue;
        const EigenPair e = eigenvalues(m1, m2);
        CHECK(std::abs(e.lambda_plus + e.lambda_minus + 1.0) < 1e-14);
        const double det = m1 * m1 / static_cast<double>(m1 * m1 + m2 * m2);
        CHECK(std::abs(e.lambda_plus * e.lambda_minus - det) <= 1e-13 * std::max(det, 1e-30));
        CHECK(e.lambda_plus.real() <= 1e-15);
        CHECK(e.lambda_minus.real() <= -0.5 + 1e-15);
      }
    }
  }
}

TEST_CASE("frequency region partition") {
  CHECK_THROWS_AS(classify(0.0, 0.0), InvalidInput);
  CHECK(classify(0.0, 5.0) == ModeRegion::D1);
  CHECK(classify(1.0, 0.0) == ModeRegion::D3);
  // boundary |xi| = 3|xi1| belongs to D1
  CHECK(classify(1.0, std::sqrt(8.0)) == ModeRegion::D1);
  // boundary |xi| = 2|xi1| belongs to D2
  CHECK(classify(1.0, std::sqrt(3.0)) == ModeRegion::D2);
  CHECK(classify(1.0, 2.2) == ModeRegion::D2);

  for (int m1 = -9; m1 <= 9; ++m1) {
    for (int m2 = -9; m2 <= 9; ++m2) {
      if (m1 == 0 && m2 == 0) continue;
      const double r = std::hypot(m1, m2);
      int hits = 0;
      if (r >= 3.0 * std::abs(m1)) ++hits;  // D1
      if (2.0 * std::abs(m1) <= r && r < 3.0 * std::abs(m1)) ++hits;  // D2
      if (r < 2.0 * std::abs(m1)) ++hits;  // D3
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("matrix exponential oracle") {
  SUBCASE("t = 0 is the identity") {
    const PropagatorMatrix p = propagator_oracle(3.0, -2.0, 0.0);
    CHECK(std::abs(p.m1 - 1.0) < 1e-14);
    CHECK(std::abs(p.m4 - 1.0) < 1e-14);
    CHECK(std::abs(p.m2) < 1e-14);
    CHECK(std::abs(p.m3) < 1e-14);
  }
  SUBCASE("decoupled mode: diag(e^-t, 1)") {
    const PropagatorMatrix p = propagator_oracle(0.0, 1.0, 1.0);
    CHECK(std::abs(p.m1 - std::exp(-1.0)) < 1e-14);
    CHECK(std::abs(p.m4 - 1.0) < 1e-14);
  }
  SUBCASE("semigroup additivity") {
    for (const auto [x1, x2] : {std::pair{1.0, 2.0}, {5.0, -1.0}, {0.25, 0.7}}) {
      const PropagatorMatrix a = propagator_oracle(x1, x2, 0.4);
      const PropagatorMatrix b = propagator_oracle(x1, x2, 1.1);
      const PropagatorMatrix ab = mat_mul(a, b);
      const PropagatorMatrix c = propagator_oracle(x1, x2, 1.5);
      CHECK(entry_rel_diff(ab, c) < 1e-10);
    }
  }
}

TEST_CASE("closed-form propagator") {
  SUBCASE("arguments validated") {
    CHECK_THROWS_AS(propagator(0.0, 0.0, 1.0), InvalidInput);
    CHECK_THROWS_AS(propagator(1.0, 1.0, -0.5), InvalidInput);
  }
  SUBCASE("t = 0 is the identity") {
    const PropagatorMatrix p = propagator(4.0, 7.0, 0.0);
    CHECK(std::abs(p.m1 - 1.0) < 1e-12);
    CHECK(std::abs(p.m4 - 1.0) < 1e-12);
    CHECK(std::abs(p.m2) < 1e-12);
    CHECK(std::abs(p.m3) < 1e-12);
  }
  SUBCASE("xi1 = 0 decouples: omega damps, theta frozen") {
    for (double t : {0.1, 1.0, 10.0}) {
      const PropagatorMatrix p = propagator(0.0, 1.0, t);
      CHECK(std::abs(p.m1 - std::exp(-t)) < 1e-14);
      CHECK(std::abs(p.m4 - 1.0) < 1e-14);
      CHECK(std::abs(p.m2) == 0.0);
      CHECK(std::abs(p.m3) == 0.0);
    }
  }
  SUBCASE("matches the oracle across the lattice") {
    for (double t : {0.1, 1.0, 10.0}) {
      double worst = 0.0;
      for (int m1 = -16; m1 <= 16; ++m1) {
        for (int m2 = -16; m2 <= 16; ++m2) {
          if (m1 == 0 && m2 == 0) continue;
          worst = std::max(worst, entry_rel_diff(propagator(m1, m2, t),
                                                 propagator_oracle(m1, m2, t)));
        }
      }
      CHECK(worst < 1e-9);
    }
  }
  SUBCASE("degenerate double eigenvalue: confluent limit") {
    const double x1 = 1.0;
    const double x2 = std::sqrt(3.0);  // |xi| = 2|xi1| exactly
    for (double t : {0.3, 2.0, 8.0}) {
      const PropagatorMatrix p = propagator(x1, x2, t);
      const double e = std::exp(-0.5 * t);
      CHECK(std::abs(p.m1 - e * (1.0 - 0.5 * t)) < 1e-10 * e * (1.0 + t));
      CHECK(std::abs(p.m4 - e * (1.0 + 0.5 * t)) < 1e-10 * e * (1.0 + t));
      CHECK(std::abs(p.m2 - Complex{0.0, -x1 * t * e}) < 1e-10 * e * (1.0 + t));
      CHECK(std::abs(p.m3 - p.m2 / 4.0) < 1e-12);
    }
  }
  SUBCASE("no precision loss near the degenerate set") {
    for (double d : {0.0, 1e-12, 1e-9, 1e-7, 1e-6}) {
      for (double sign : {1.0, -1.0}) {
        const double x1 = 2.0;
        // relative discriminant sign*d
        const double x2sq = (3.0 + sign * d) / (1.0 - sign * d) * x1 * x1;
        const double x2 = std::sqrt(x2sq);
        for (double t : {0.5, 5.0, 20.0}) {
          CHECK(entry_rel_diff(propagator(x1, x2, t), propagator_oracle(x1, x2, t)) <
                1e-9);
        }
      }
    }
  }
  SUBCASE("semigroup law") {
    for (const auto [x1, x2] : {std::pair{1.0, 3.0}, {2.0, 0.5}, {1.0, 1.7320508}}) {
      const PropagatorMatrix ab =
          mat_mul(propagator(x1, x2, 0.7), propagator(x1, x2, 0.9));
      CHECK(entry_rel_diff(ab, propagator(x1, x2, 1.6)) < 1e-9);
    }
  }
  SUBCASE("determinant equals e^{-t}") {
    for (double t : {0.05, 0.5, 2.0, 8.0}) {
      for (const auto [x1, x2] : {std::pair{1.0, 4.0}, {3.0, 1.0}, {5.0, 9.0}}) {
        const PropagatorMatrix p = propagator(x1, x2, t);
        const Complex det = p.m1 * p.m4 - p.m2 * p.m3;
        CHECK(std::abs(det - std::exp(-t)) < 1e-10 * std::exp(-t));
      }
    }
  }
  SUBCASE("conjugation symmetry under xi -> -xi") {
    for (const auto [x1, x2] : {std::pair{1.0, 2.0}, {-3.0, 5.0}, {2.0, -2.0}}) {
      const PropagatorMatrix p = propagator(x1, x2, 1.3);
      const PropagatorMatrix q = propagator(-x1, -x2, 1.3);
      CHECK(std::abs(q.m1 - std::conj(p.m1)) < 1e-15);
      CHECK(std::abs(q.m2 - std::conj(p.m2)) < 1e-15);
      CHECK(std::abs(q.m3 - std::conj(p.m3)) < 1e-15);
      CHECK(std::abs(q.m4 - std::conj(p.m4)) < 1e-15);
    }
  }
  SUBCASE("temperature damping shifts the decoupled theta rate") {
    const PropagatorMatrix p = propagator_damped(0.0, 1.0, 2.0, 1.0, 0.25);
    CHECK(std::abs(p.m1 - std::exp(-2.0)) < 1e-13);
    CHECK(std::abs(p.m4 - std::exp(-0.5)) < 1e-13);
    for (const auto [x1, x2] : {std::pair{1.0, 2.0}, {4.0, 1.0}}) {
      CHECK(entry_rel_diff(propagator_damped(x1, x2, 1.5, 2.0, 0.3),
                           propagator_oracle_damped(x1, x2, 1.5, 2.0, 0.3)) < 1e-9);
    }
  }
}

TEST_CASE("decay envelopes") {
  SUBCASE("xi = (0,1) in D1 at t = 0 bounds m1 by 2") {
    const DecayEnvelope env = decay_envelope(0.0, 1.0, 0.0);
    // r = 0: the envelope reduces to e^{-t/2} + 0
    CHECK(env.m1 == doctest::Approx(1.0));
    CHECK(env.m2 == 0.0);
    CHECK(std::abs(propagator(0.0, 1.0, 0.0).m1) <= 2.0);
  }
  SUBCASE("paper rates in D2 and D3") {
    CHECK(decay_envelope(1.0, 0.0, 4.0).m1 == doctest::Approx(std::exp(-1.0)));
    CHECK(decay_envelope(1.0, 2.2, 18.0).m1 == doctest::Approx(std::exp(-1.0)));
  }
  SUBCASE("fitted constant at a single sample") {
    const std::vector<double> ts = {1.0};
    const EnvelopeCertificate cert = certify_envelopes(1, ts);
    // At (0,1), t=1 the ratio is e^{-1} / e^{-1/2} = e^{-1/2}; the other
    // |m| <= 1 modes are D3 with smaller ratios at t = 1.
    CHECK(cert.d1.c_m1 == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK(cert.d1.c_m2 == 0.0);  // only xi1 = 0 modes land in D1 here
  }
  SUBCASE("certificate is finite and D3 constant modest") {
    const auto ts = log_spaced(0.1, 50.0, 12);
    const EnvelopeCertificate cert = certify_envelopes(16, ts);
    for (const RegionFit* fit : {&cert.d1, &cert.d2, &cert.d3}) {
      CHECK(std::isfinite(fit->c_m1));
      CHECK(std::isfinite(fit->c_m2));
      CHECK(fit->samples > 0);
    }
    CHECK(cert.d3.c_m1 <= 10.0);
  }
  SUBCASE("empty inputs rejected") {
    CHECK_THROWS_AS(certify_envelopes(0, std::vector<double>{1.0}), InvalidInput);
    CHECK_THROWS_AS(certify_envelopes(4, std::vector<double>{}), InvalidInput);
  }
}

TEST_CASE("weighted kernel sups decay algebraically") {
  const auto ts = log_spaced(1.0, 100.0, 15);
  const KernelDecaySeries series = tabulate_kernel_decay(32, ts);
  const double s1 = fit_loglog_slope(series.t, series.sup_m1_weighted);
  const double s2 = fit_loglog_slope(series.t, series.sup_m2_weighted);
  CHECK(s1 == doctest::Approx(-1.5).epsilon(0.25));
  CHECK(s2 == doctest::Approx(-1.0).epsilon(0.35));
}
