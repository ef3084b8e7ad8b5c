#pragma once

// Continuum limit of the game: five coupled ODEs integrated with fixed-step
// RK4, plus the closed-form decay bounds and the aggression predictors.

#include "protest/detail/drive.hpp"
#include "protest/model.hpp"
#include "protest/scenario.hpp"

namespace protest {

struct Derivative {
    double dv1 = 0.0;
    double dv2 = 0.0;
    double du1 = 0.0;
    double du2 = 0.0;
    double dtau = 0.0;
};

[[nodiscard]] Derivative rhs(const State& s, double police, const ModelParams& params) noexcept;

/// One classical RK4 step with police held fixed; components clamped at 0.
[[nodiscard]] State rk4_step(const State& s, double police, const ModelParams& params,
                             double h) noexcept;

template <typename Visit>
Termination integrate_visit(const Scenario& scenario, Visit&& visit) {
    const auto& params = scenario.params;
    return detail::drive(
        scenario, scenario.settings.h,
        [&params](const State& s, double police, double h) {
            return rk4_step(s, police, params, h);
        },
        visit);
}

/// Throws DivergenceError on a non-finite state.
[[nodiscard]] Trajectory integrate(const Scenario& scenario);

struct PopulationBounds {
    double u1 = 0.0;
    double u2 = 0.0;
};

/// Upper bounds on agitators and moderates from exit alone:
///   u2(t) <= u2(0) e^{-eps t}
///   u1(t) <= e^{-eps t} (u1(0) + T3 u2(0) t)
[[nodiscard]] PopulationBounds analytic_upper_bounds(double t, const State& initial,
                                                     const ModelParams& params) noexcept;

enum class AggressionForecast { zero_guaranteed, positive_guaranteed, indeterminate };

[[nodiscard]] const char* to_string(AggressionForecast forecast) noexcept;

/// Zero aggression is guaranteed when no AofA exist yet, police cannot act
/// at v1 = 0, and either agitators cannot act at the initial tension or
/// there are no agitators. Protester aggression is guaranteed positive when
/// agitators exist and f1 is already active.
[[nodiscard]] AggressionForecast predict_zero_aggression(const Scenario& scenario) noexcept;

}  // namespace protest
