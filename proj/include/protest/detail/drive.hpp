#pragma once

// Shared time-stepping loop for the discrete game and the ODE integrator.

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "protest/errors.hpp"
#include "protest/scenario.hpp"

namespace protest::detail {

/// A run ends once fewer than this many protesters remain.
inline constexpr double kDepletionThreshold = 1.0;

[[nodiscard]] inline std::size_t step_count(double t_max, double step) {
    return static_cast<std::size_t>(std::ceil(t_max / step - 1e-9));
}

/// Drives `advance(state, police, step_length) -> State` from the scenario's
/// initial state. `visit(step_index, state, police)` sees the initial state
/// and every state produced, together with the police presence in effect at
/// that state. Time is computed as n * step (never accumulated) and the last
/// step is shortened to land exactly on t_max.
template <typename Advance, typename Visit>
Termination drive(const Scenario& scenario, double step, Advance&& advance, Visit&& visit) {
    const auto& schedule = scenario.schedule;
    const double t_max = scenario.settings.t_max;
    const std::size_t n_max = step_count(t_max, step);

    State s = scenario.initial;
    s.t = 0.0;
    double police = police_presence(schedule, s.t, s);
    visit(std::size_t{0}, s, police);

    for (std::size_t n = 0;; ++n) {
        if (s.protesters() < kDepletionThreshold) return Termination::protesters_depleted;
        if (n >= n_max) return Termination::horizon_reached;

        const double t_next = (n + 1 == n_max) ? t_max : static_cast<double>(n + 1) * step;
        State next = advance(s, police, t_next - s.t);
        next.t = t_next;
        if (!(std::isfinite(next.v1) && std::isfinite(next.v2) && std::isfinite(next.u1) &&
              std::isfinite(next.u2) && std::isfinite(next.tau))) {
            throw DivergenceError("non-finite state at t = " + std::to_string(t_next));
        }
        s = next;
        police = police_presence(schedule, s.t, s);
        visit(n + 1, s, police);
    }
}

/// Visitor that assembles a Trajectory, thinning samples to every
/// `record_every`-th step while always keeping the first and last.
class TrajectoryRecorder {
public:
    TrajectoryRecorder(const ModelParams& params, std::size_t record_every)
        : params_(params), record_every_(record_every == 0 ? 1 : record_every) {}

    void operator()(std::size_t n, const State& s, double police) {
        const auto regime = regime_of(s, police, params_);
        if (n == 0 || regime != last_regime_) {
            out_.regime_changes.push_back({n, regime});
            last_regime_ = regime;
        }
        last_ = s;
        last_police_ = police;
        last_recorded_ = (n % record_every_ == 0);
        if (last_recorded_) {
            out_.samples.push_back(s);
            out_.police.push_back(police);
        }
    }

    Trajectory finish(Termination reason) && {
        if (!last_recorded_) {
            out_.samples.push_back(last_);
            out_.police.push_back(last_police_);
        }
        out_.terminated_by = reason;
        return std::move(out_);
    }

private:
    const ModelParams& params_;
    std::size_t record_every_;
    Trajectory out_;
    State last_{};
    double last_police_ = 0.0;
    bool last_recorded_ = true;
    std::uint8_t last_regime_ = 0;
};

}  // namespace protest::detail
