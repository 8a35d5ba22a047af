#include "bdsim/semigroup/propagator.hpp"

#include <cmath>

#include "bdsim/semigroup/matrix_exp.hpp"

namespace bdsim::semigroup {

namespace {

double sinhc(double w) {
  if (w < 1e-8) return 1.0 + w * w / 6.0;
  return std::sinh(w) / w;
}

double sinc(double w) {
  if (w < 1e-8) return 1.0 - w * w / 6.0;
  return std::sin(w) / w;
}

void check_args(double xi1, double xi2, double t) {
  if (xi1 * xi1 + xi2 * xi2 == 0.0) throw InvalidInput("propagator: xi must be nonzero");
  if (t < 0.0) throw InvalidInput("propagator: t must be nonnegative");
}

}  // namespace

PropagatorMatrix propagator_damped(double xi1, double xi2, double t, double nu,
                                   double eta) {
  check_args(xi1, xi2, t);
  const double ksq = xi1 * xi1 + xi2 * xi2;
  // (lambda_+ - lambda_-)^2; the nu = 1, eta = 0 branch avoids the
  // cancellation in (nu-eta)^2 - 4 xi1^2/|xi|^2 near the degenerate set.
  const double disc4 = (nu == 1.0 && eta == 0.0)
                           ? (xi2 * xi2 - 3.0 * xi1 * xi1) / ksq
                           : ((nu - eta) * (nu - eta) * ksq - 4.0 * xi1 * xi1) / ksq;
  const double half_trace = -0.5 * (nu + eta);

  // phi0 = e^{half_trace t} cosh(ht), phi1 = e^{half_trace t} t sinhc(ht)
  // with h = sqrt(disc4)/2 (cos/sinc for disc4 < 0).
  double phi0, phi1;
  if (disc4 >= 0.0) {
    const double h = 0.5 * std::sqrt(disc4);
    if (h * t > 30.0) {
      // large gap: evaluate from the two exponentials directly to avoid
      // overflow in cosh against the decaying prefactor
      const double ep = std::exp((half_trace + h) * t);
      const double em = std::exp((half_trace - h) * t);
      phi0 = 0.5 * (ep + em);
      phi1 = 0.5 * (ep - em) / h;
    } else {
      const double damp = std::exp(half_trace * t);
      phi0 = damp * std::cosh(h * t);
      phi1 = damp * t * sinhc(h * t);
    }
  } else {
    const double mu = 0.5 * std::sqrt(-disc4);
    const double damp = std::exp(half_trace * t);
    phi0 = damp * std::cos(mu * t);
    phi1 = damp * t * sinc(mu * t);
  }

  PropagatorMatrix p;
  p.m1 = Complex{phi0 + 0.5 * (eta - nu) * phi1, 0.0};
  p.m4 = Complex{phi0 + 0.5 * (nu - eta) * phi1, 0.0};
  p.m2 = Complex{0.0, -xi1 * phi1};
  p.m3 = Complex{0.0, -xi1 * phi1 / ksq};
  return p;
}

PropagatorMatrix propagator(double xi1, double xi2, double t) {
  return propagator_damped(xi1, xi2, t, 1.0, 0.0);
}

PropagatorMatrix propagator_oracle_damped(double xi1, double xi2, double t,
                                          double nu, double eta) {
  check_args(xi1, xi2, t);
  const double ksq = xi1 * xi1 + xi2 * xi2;
  const Complex2x2 a{Complex{-nu, 0.0}, Complex{0.0, -xi1},
                     Complex{0.0, -xi1 / ksq}, Complex{-eta, 0.0}};
  const Complex2x2 at{a.a11 * t, a.a12 * t, a.a21 * t, a.a22 * t};
  const Complex2x2 e = expm(at);
  return PropagatorMatrix{e.a11, e.a12, e.a21, e.a22};
}

PropagatorMatrix propagator_oracle(double xi1, double xi2, double t) {
  return propagator_oracle_damped(xi1, xi2, t, 1.0, 0.0);
}

DecayEnvelope decay_envelope(double xi1, double xi2, double t) {
  const double ksq = xi1 * xi1 + xi2 * xi2;
  if (ksq == 0.0) throw InvalidInput("decay_envelope: xi must be nonzero");
  const double ax1 = std::abs(xi1);
  switch (classify(xi1, xi2)) {
    case ModeRegion::D1: {
      const double r = xi1 * xi1 / ksq;
      return DecayEnvelope{std::exp(-0.5 * t) + r * std::exp(-r * t),
                           ax1 * (std::exp(-t) + std::exp(-r * t))};
    }
    case ModeRegion::D2: {
      const double e = std::exp(-t / 18.0);
      return DecayEnvelope{e, ax1 * e};
    }
    default: {
      const double e = std::exp(-t / 4.0);
      return DecayEnvelope{e, ax1 * e};
    }
  }
}

}  // namespace bdsim::semigroup
