#pragma once

// Discrete-time evolutionary game: each step draws the expected number of
// aggression, conversion and exit events from per-individual hazards.

#include <cstddef>

#include "protest/detail/drive.hpp"
#include "protest/model.hpp"
#include "protest/scenario.hpp"

namespace protest {

/// One synchronous update of length `dt`; every right-hand side reads the
/// pre-step state. Police presence is evaluated at `state.t`.
/// Throws StepSizeError when a loss fraction exceeds 1.
[[nodiscard]] State step_discrete(const State& state, const ModelParams& params,
                                  const PoliceSchedule& schedule, double dt);

/// Same update with the officer count supplied directly.
[[nodiscard]] State step_discrete_with_police(const State& state, const ModelParams& params,
                                              double police, double dt);

/// Runs the game and hands every state to `visit(step, state, police)`.
template <typename Visit>
Termination run_discrete_visit(const Scenario& scenario, Visit&& visit) {
    const auto& params = scenario.params;
    return detail::drive(
        scenario, scenario.settings.dt,
        [&params](const State& s, double police, double dt) {
            return step_discrete_with_police(s, params, police, dt);
        },
        visit);
}

[[nodiscard]] Trajectory run_discrete(const Scenario& scenario);

/// True iff the run ends with zero aggression on both sides and tension
/// below its starting value.
[[nodiscard]] bool classify_productive(const Trajectory& trajectory);

}  // namespace protest
