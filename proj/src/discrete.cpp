#include "protest/discrete.hpp"

#include <algorithm>
#include <string>

#include "protest/errors.hpp"

namespace protest {
namespace {

void check_fraction(double fraction, const char* who, double dt) {
    if (fraction > 1.0) {
        throw StepSizeError(std::string("dt = ") + std::to_string(dt) + " removes a fraction " +
                            std::to_string(fraction) + " > 1 of " + who +
                            " in one step; reduce dt");
    }
}

}  // namespace

State step_discrete_with_police(const State& s, const ModelParams& params, double police,
                                double dt) {
    const Hazards rates = hazards(s, police, params);
    const double p_aggress = prob_from_hazard(rates.agitator, dt);
    const double p_police = prob_from_hazard(rates.police, dt);
    const double p_convert = prob_from_hazard(rates.conversion, dt);
    const double exit = params.epsilon * dt;

    const double agitator_loss = p_aggress + exit;
    const double moderate_loss = p_convert + exit;
    const double tension_loss = params.omega * dt;
    check_fraction(agitator_loss, "the agitators", dt);
    check_fraction(moderate_loss, "the moderates", dt);
    check_fraction(tension_loss, "the tension", dt);

    const double new_v1 = s.u1 * p_aggress;
    const double new_v2 = police * p_police;
    const double converted = s.u2 * p_convert;

    State next;
    next.t = s.t + dt;
    next.v1 = s.v1 + new_v1;
    next.v2 = s.v2 + new_v2;
    next.u1 = std::max(0.0, s.u1 + converted - s.u1 * agitator_loss);
    next.u2 = std::max(0.0, s.u2 - s.u2 * moderate_loss);
    next.tau = std::max(0.0, s.tau + params.theta * (new_v1 + new_v2) - tension_loss * s.tau);
    return next;
}

State step_discrete(const State& state, const ModelParams& params, const PoliceSchedule& schedule,
                    double dt) {
    return step_discrete_with_police(state, params, police_presence(schedule, state.t, state), dt);
}

Trajectory run_discrete(const Scenario& scenario) {
    detail::TrajectoryRecorder recorder(scenario.params, scenario.settings.record_every);
    const auto reason = run_discrete_visit(scenario, recorder);
    return std::move(recorder).finish(reason);
}

bool classify_productive(const Trajectory& trajectory) {
    const State& first = trajectory.front();
    const State& last = trajectory.back();
    return last.v1 == 0.0 && last.v2 == 0.0 && last.tau < first.tau;
}

}  // namespace protest
