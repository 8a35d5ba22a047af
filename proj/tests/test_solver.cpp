#include <doctest.h>

#include <cmath>

#include "bdsim/energy/norms.hpp"
#include "bdsim/semigroup/propagator.hpp"
#include "bdsim/solver/simulate.hpp"
#include "oracles.hpp"

using namespace bdsim;
using solver::FlowState;
using solver::InitialDataSpec;
using solver::SolverConfig;
using spectral::SpectralField;

namespace {

SolverConfig base_config(int n, double dt, double t_end) {
  SolverConfig c;
  c.grid_n = n;
  c.dt = dt;
  c.t_end = t_end;
  return c;
}

InitialDataSpec band_data(double amplitude, std::uint64_t seed, int hi = 6) {
  InitialDataSpec spec;
  spec.kind = solver::InitKind::random_band;
  spec.amplitude = amplitude;
  spec.seed = seed;
  spec.band_lo = 1;
  spec.band_hi = hi;
  return spec;
}

double state_diff(const FlowState& a, const FlowState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.omega.size(); ++i) {
    worst = std::max(worst, std::abs(a.omega.coeffs()[i] - b.omega.coeffs()[i]));
    worst = std::max(worst, std::abs(a.theta.coeffs()[i] - b.theta.coeffs()[i]));
  }
  return worst;
}

double state_scale(const FlowState& a) {
  return std::max(a.omega.max_abs(), a.theta.max_abs());
}

}  // namespace

TEST_CASE("initial data generation") {
  auto grid = spectral::make_grid(64);

  SUBCASE("deterministic in the seed") {
    const FlowState a = generate_initial(band_data(1e-3, 7), grid, 5);
    const FlowState b = generate_initial(band_data(1e-3, 7), grid, 5);
    CHECK(state_diff(a, b) == 0.0);
    const FlowState c = generate_initial(band_data(1e-3, 8), grid, 5);
    CHECK(state_diff(a, c) > 0.0);
  }
  SUBCASE("normalization: discrete A(0) equals amplitude^2") {
    const FlowState s = generate_initial(band_data(2.5e-3, 3), grid, 5);
    const double w = energy::space_norm(s.omega, energy::CompositeSpace::bbH, 5);
    const double t = energy::space_norm(s.theta, energy::CompositeSpace::calH, 6);
    CHECK(w * w + t * t == doctest::Approx(6.25e-6).epsilon(1e-10));
  }
  SUBCASE("zero amplitude gives the zero state") {
    const FlowState s = generate_initial(band_data(0.0, 3), grid, 5);
    CHECK(state_scale(s) == 0.0);
  }
  SUBCASE("hermitian and mean-zero by construction") {
    const FlowState s = generate_initial(band_data(1.0, 11), grid, 5);
    CHECK(s.omega.hermitian_defect() == 0.0);
    CHECK(s.theta.hermitian_defect() == 0.0);
    CHECK(s.omega.is_mean_zero());
    CHECK(s.theta.is_mean_zero());
  }
  SUBCASE("empty band rejected") {
    InitialDataSpec spec = band_data(1.0, 0);
    spec.band_lo = 5;
    spec.band_hi = 4;
    CHECK_THROWS_AS(generate_initial(spec, grid, 5), InvalidInput);
  }
  SUBCASE("band beyond the dealias mask rejected") {
    InitialDataSpec spec = band_data(1.0, 0, 40);
    CHECK_THROWS_AS(generate_initial(spec, grid, 5), InvalidInput);
  }
  SUBCASE("region filter restricts the spectrum") {
    InitialDataSpec spec = band_data(1.0, 5, 12);
    spec.region = solver::RegionFilter::d3;
    const FlowState s = generate_initial(spec, grid, 5);
    for (int m1 = -12; m1 <= 12; ++m1) {
      for (int m2 = -12; m2 <= 12; ++m2) {
        if (m1 == 0 && m2 == 0) continue;
        if (std::abs(s.omega.mode(m1, m2)) > 0.0) {
          CHECK(semigroup::classify(m1, m2) == semigroup::ModeRegion::D3);
        }
      }
    }
  }
}

TEST_CASE("nonlinear right-hand side") {
  auto grid = spectral::make_grid(32);
  SolverConfig config = base_config(32, 0.1, 1.0);
  solver::Stepper stepper(grid, config);

  SUBCASE("omega = 0 gives G = H = 0") {
    SpectralField omega(grid);
    const SpectralField theta = testing::random_field(grid, 1);
    SpectralField g(grid), h(grid);
    stepper.nonlinear_rhs(omega, theta, g, h);
    CHECK(g.max_abs() == 0.0);
    CHECK(h.max_abs() == 0.0);
  }
  SUBCASE("transport terms are L2-orthogonal to the fields (padded)") {
    config.dealias = spectral::DealiasMode::padded;
    solver::Stepper padded(grid, config);
    const SpectralField omega = testing::random_field(grid, 2);
    const SpectralField theta = testing::random_field(grid, 3);
    SpectralField g(grid), h(grid);
    padded.nonlinear_rhs(omega, theta, g, h);
    const double gw = spectral::inner_product(g, omega);
    const double ht = spectral::inner_product(h, theta);
    const double gs = energy::sobolev_norm(g, {0.0, true}) *
                      energy::sobolev_norm(omega, {0.0, true});
    const double hs = energy::sobolev_norm(h, {0.0, true}) *
                      energy::sobolev_norm(theta, {0.0, true});
    CHECK(std::abs(gw) <= 1e-12 * gs);
    CHECK(std::abs(ht) <= 1e-12 * hs);
  }
}

TEST_CASE("stepper basics") {
  auto grid = spectral::make_grid(32);

  SUBCASE("zero state stays zero") {
    SolverConfig config = base_config(32, 0.25, 1.0);
    solver::Stepper stepper(grid, config);
    FlowState state(grid);
    stepper.step(state, 0.25);
    CHECK(state_scale(state) == 0.0);
    CHECK(state.time == doctest::Approx(0.25));
  }
  SUBCASE("one linear step matches the per-mode propagator") {
    SolverConfig config = base_config(32, 0.5, 1.0);
    config.linear_only = true;
    solver::Stepper stepper(grid, config);

    FlowState state(grid);
    state.omega.mode(2, 1) = Complex{0.3, -0.1};
    state.omega.mode(-2, -1) = Complex{0.3, 0.1};
    state.theta.mode(2, 1) = Complex{-0.2, 0.05};
    state.theta.mode(-2, -1) = Complex{-0.2, -0.05};
    const Complex w0 = state.omega.mode(2, 1);
    const Complex t0 = state.theta.mode(2, 1);
    stepper.step(state, 0.5);

    // series-coefficient dynamics: closed forms at (-k1, k2)
    const auto p = semigroup::propagator(-2.0, 1.0, 0.5);
    const Complex w_expect = p.m1 * w0 + p.m2 * t0;
    const Complex t_expect = p.m3 * w0 + p.m4 * t0;
    CHECK(std::abs(state.omega.mode(2, 1) - w_expect) < 1e-12);
    CHECK(std::abs(state.theta.mode(2, 1) - t_expect) < 1e-12);
  }
  SUBCASE("per-mode determinant identity of the tables") {
    const double dt = 0.05;
    const solver::PropagatorTable table(*grid, dt, 1.0, 0.0);
    const double expect = std::exp(-dt);
    for (std::size_t i = 1; i < grid->size(); ++i) {
      const double det =
          table.m1()[i] * table.m4()[i] - (-table.m2_imag()[i] * table.m3_imag()[i]);
      CHECK(det == doctest::Approx(expect).epsilon(1e-10));
    }
  }
  SUBCASE("hermitian symmetry and mean zero preserved") {
    SolverConfig config = base_config(32, 0.05, 1.0);
    solver::Stepper stepper(grid, config);
    FlowState state = generate_initial(band_data(0.5, 17), grid, 5);
    for (int i = 0; i < 5; ++i) stepper.step(state, 0.05);
    CHECK(state.omega.is_mean_zero());
    CHECK(state.theta.is_mean_zero());
    CHECK(state.omega.hermitian_defect() == 0.0);
    CHECK(state.theta.hermitian_defect() == 0.0);
  }
}

TEST_CASE("integrator convergence order") {
  auto grid = spectral::make_grid(32);
  const InitialDataSpec init = band_data(0.2, 23, 4);
  const double t_end = 0.5;

  auto run = [&](solver::Integrator integ, double dt) {
    SolverConfig config = base_config(32, dt, t_end);
    config.integrator = integ;
    config.diagnostics_stride = 1 << 28;  // diagnostics off inside the loop
    FlowState state = generate_initial(init, grid, 5);
    solver::Stepper stepper(grid, config);
    const int steps = static_cast<int>(std::round(t_end / dt));
    for (int i = 0; i < steps; ++i) stepper.step(state, dt);
    return state;
  };

  for (const auto [integ, nominal, floor] :
       {std::tuple{solver::Integrator::ifrk4, 4.0, 3.5},
        std::tuple{solver::Integrator::ifrk2, 2.0, 1.5}}) {
    const FlowState ref = run(integ, t_end / 512);
    const double e1 = state_diff(run(integ, t_end / 16), ref);
    const double e2 = state_diff(run(integ, t_end / 32), ref);
    const double order = std::log2(e1 / e2);
    CAPTURE(nominal);
    CHECK(order >= floor);
    CHECK(order <= nominal + 0.5);
  }
}

TEST_CASE("simulate") {
  SUBCASE("t_end = 0 returns the initial state and one ledger row") {
    SolverConfig config = base_config(32, 0.1, 0.0);
    const auto result = solver::simulate(config, band_data(1e-3, 5));
    CHECK(result.steps == 0);
    CHECK(result.ledger.rows().size() == 1);
    CHECK(result.status == solver::RunStatus::completed);
  }
  SUBCASE("theta = cos(x2) is an exact steady state") {
    SolverConfig config = base_config(32, 0.05, 10.0);
    config.diagnostics_stride = 50;
    InitialDataSpec init;
    init.kind = solver::InitKind::single_mode;
    init.amplitude = 0.7;
    init.band_lo = 0;
    init.band_hi = 1;  // theta = cos(x2) scaled
    auto grid = spectral::make_grid(32);
    const FlowState start = generate_initial(init, grid, 5);
    const auto result = solver::simulate(config, init);
    CHECK(state_diff(result.state, start) <= 1e-10 * state_scale(start));
  }
  SUBCASE("x2-only data: omega decays at rate nu, theta frozen") {
    SolverConfig config = base_config(32, 0.01, 2.0);
    auto grid = spectral::make_grid(32);
    FlowState expect(grid);
    InitialDataSpec init;
    init.kind = solver::InitKind::random_band;
    init.amplitude = 0.5;
    init.seed = 9;
    init.band_lo = 1;
    init.band_hi = 8;
    init.region = solver::RegionFilter::all;
    // x2-only spectrum: keep the k1 = 0 line only
    FlowState start = generate_initial(init, grid, 5);
    for (int m1 = -10; m1 <= 10; ++m1) {
      if (m1 == 0) continue;
      for (int m2 = -10; m2 <= 10; ++m2) {
        start.omega.mode(m1, m2) = Complex{0.0, 0.0};
        start.theta.mode(m1, m2) = Complex{0.0, 0.0};
      }
    }
    solver::Stepper stepper(grid, config);
    FlowState state = start;
    const int steps = 200;
    for (int i = 0; i < steps; ++i) stepper.step(state, 0.01);
    const double decay = std::exp(-config.nu * 2.0);
    double worst = 0.0;
    for (int m2 = -10; m2 <= 10; ++m2) {
      if (m2 == 0) continue;
      worst = std::max(worst, std::abs(state.omega.mode(0, m2) -
                                       decay * start.omega.mode(0, m2)));
      worst = std::max(worst, std::abs(state.theta.mode(0, m2) - start.theta.mode(0, m2)));
    }
    CHECK(worst <= 1e-10 * state_scale(start));
  }
  SUBCASE("non-finite values surface as integration failure") {
    SolverConfig config = base_config(32, 0.5, 50.0);
    const auto result = solver::simulate(config, band_data(1e8, 2, 8));
    CHECK(result.status == solver::RunStatus::integration_failure);
    CHECK(result.ledger.failed());
    CHECK(result.failure_time > 0.0);
    CHECK(result.failure_time <= 50.0);
  }
  SUBCASE("adaptive CFL stepping completes") {
    SolverConfig config = base_config(32, 0.0, 0.5);
    config.cfl = 0.5;
    const auto result = solver::simulate(config, band_data(1e-2, 3));
    CHECK(result.status == solver::RunStatus::completed);
    CHECK(result.state.time == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("discrete kinetic energy balance (trapezoid, resolved dt)") {
  const int n = 32;
  auto grid = spectral::make_grid(n);
  SolverConfig config = base_config(n, 1e-3, 1.0);
  config.integrator = solver::Integrator::ifrk4;
  solver::Stepper stepper(grid, config);
  FlowState state = generate_initial(band_data(1e-2, 31), grid, 5);

  auto u_sq = [](const FlowState& s) {
    const double v = energy::sobolev_norm(s.omega, {-1.0, true});
    return v * v;
  };
  auto theta_sq = [](const FlowState& s) {
    const double v = energy::sobolev_norm(s.theta, {0.0, true});
    return v * v;
  };

  const double e0 = 0.5 * (u_sq(state) + theta_sq(state));
  double dissipation = 0.0;
  double prev = u_sq(state);
  const int steps = 1000;
  for (int i = 0; i < steps; ++i) {
    stepper.step(state, config.dt);
    const double cur = u_sq(state);
    dissipation += 0.5 * config.dt * (prev + cur);
    prev = cur;
  }
  const double e1 = 0.5 * (u_sq(state) + theta_sq(state));
  CHECK(std::abs(e1 - e0 + config.nu * dissipation) <= 1e-6 * e0);
}
