#include "bdsim/solver/simulate.hpp"

#include <algorithm>

namespace bdsim::solver {

SimulationResult simulate(const SolverConfig& config, const InitialDataSpec& init,
                          const StepHook& hook) {
  config.validate();
  auto grid = spectral::make_grid(config.grid_n, config.grid_l);
  SimulationResult result(config.sobolev_s, config.e2_index);
  result.state = generate_initial(init, grid, config.sobolev_s);

  Stepper stepper(grid, config);
  result.ledger.append(0.0, result.state.omega, result.state.theta);

  const double t_end = config.t_end;
  // padding against accumulated roundoff in t when t_end/dt is integral
  const double tail_guard = 1e-12 * std::max(1.0, t_end);

  while (result.state.time < t_end - tail_guard) {
    double dt = config.dt > 0.0 ? config.dt : stepper.cfl_dt(result.state);
    dt = std::min(dt, t_end - result.state.time);
    stepper.step(result.state, dt);
    ++result.steps;

    if (!result.state.all_finite()) {
      result.status = RunStatus::integration_failure;
      result.failure_time = result.state.time;
      result.ledger.mark_failure(result.state.time);
      return result;
    }

    const bool final_step = result.state.time >= t_end - tail_guard;
    if (final_step || result.steps % static_cast<std::uint64_t>(
                                         config.diagnostics_stride) == 0) {
      result.ledger.append(result.state.time, result.state.omega, result.state.theta);
    }
    if (hook) hook(result.state, result.steps);
  }
  return result;
}

}  // namespace bdsim::solver
