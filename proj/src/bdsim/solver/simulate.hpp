#pragma once

#include <cstdint>
#include <functional>

#include "bdsim/energy/ledger.hpp"
#include "bdsim/solver/initial_data.hpp"
#include "bdsim/solver/stepper.hpp"

namespace bdsim::solver {

enum class RunStatus { completed, integration_failure };

struct SimulationResult {
  FlowState state;
  energy::FunctionalLedger ledger;
  RunStatus status = RunStatus::completed;
  double failure_time = 0.0;
  std::uint64_t steps = 0;

  SimulationResult() = default;
  SimulationResult(int s, double e2_index) : ledger(s, e2_index) {}
};

/// Called after every accepted step.
using StepHook = std::function<void(const FlowState&, std::uint64_t step)>;

/// Steps from t = 0 to t_end, appending one ledger row at t = 0, every
/// diagnostics_stride steps, and at the final time. On non-finite state the
/// run stops with integration_failure and the partial ledger is returned.
SimulationResult simulate(const SolverConfig& config, const InitialDataSpec& init,
                          const StepHook& hook = {});

}  // namespace bdsim::solver
