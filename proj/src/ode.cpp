#include "protest/ode.hpp"

#include <algorithm>
#include <cmath>

namespace protest {

Derivative rhs(const State& s, double police, const ModelParams& params) noexcept {
    const Hazards rates = hazards(s, police, params);
    const double protester_aofa = s.u1 * rates.agitator;
    const double police_aofa = police * rates.police;
    const double converted = s.u2 * rates.conversion;
    return {protester_aofa,
            police_aofa,
            converted - s.u1 * (rates.agitator + params.epsilon),
            -s.u2 * (rates.conversion + params.epsilon),
            params.theta * (protester_aofa + police_aofa) - params.omega * s.tau};
}

namespace {

State offset(const State& s, const Derivative& d, double scale) noexcept {
    return {s.t, s.v1 + scale * d.dv1, s.v2 + scale * d.dv2, s.u1 + scale * d.du1,
            s.u2 + scale * d.du2, s.tau + scale * d.dtau};
}

}  // namespace

State rk4_step(const State& s, double police, const ModelParams& params, double h) noexcept {
    const Derivative k1 = rhs(s, police, params);
    const Derivative k2 = rhs(offset(s, k1, 0.5 * h), police, params);
    const Derivative k3 = rhs(offset(s, k2, 0.5 * h), police, params);
    const Derivative k4 = rhs(offset(s, k3, h), police, params);
    const double w = h / 6.0;
    auto combine = [w](double x, double a, double b, double c, double d) {
        return std::max(0.0, x + w * (a + 2.0 * b + 2.0 * c + d));
    };
    return {s.t + h,
            combine(s.v1, k1.dv1, k2.dv1, k3.dv1, k4.dv1),
            combine(s.v2, k1.dv2, k2.dv2, k3.dv2, k4.dv2),
            combine(s.u1, k1.du1, k2.du1, k3.du1, k4.du1),
            combine(s.u2, k1.du2, k2.du2, k3.du2, k4.du2),
            combine(s.tau, k1.dtau, k2.dtau, k3.dtau, k4.dtau)};
}

Trajectory integrate(const Scenario& scenario) {
    detail::TrajectoryRecorder recorder(scenario.params, scenario.settings.record_every);
    const auto reason = integrate_visit(scenario, recorder);
    return std::move(recorder).finish(reason);
}

PopulationBounds analytic_upper_bounds(double t, const State& initial,
                                       const ModelParams& params) noexcept {
    const double decay = std::exp(-params.epsilon * t);
    return {decay * (initial.u1 + params.T3 * initial.u2 * t), decay * initial.u2};
}

const char* to_string(AggressionForecast forecast) noexcept {
    switch (forecast) {
        case AggressionForecast::zero_guaranteed: return "zero_guaranteed";
        case AggressionForecast::positive_guaranteed: return "positive_guaranteed";
        case AggressionForecast::indeterminate: return "indeterminate";
    }
    return "unknown";
}

AggressionForecast predict_zero_aggression(const Scenario& scenario) noexcept {
    const State& s0 = scenario.initial;
    const ModelParams& p = scenario.params;
    const bool no_aofa_yet = s0.v1 == 0.0 && s0.v2 == 0.0;
    const bool police_idle_at_zero = !p.f2().active(0.0);
    const bool agitators_idle = !p.f1().active(s0.tau);

    // With no AofA, tension can only decay, so an inactive f1 stays
    // inactive; without agitators and without police AofA nobody converts.
    if (no_aofa_yet && police_idle_at_zero && (agitators_idle || s0.u1 == 0.0)) {
        return AggressionForecast::zero_guaranteed;
    }
    if (!agitators_idle && s0.u1 > 0.0) return AggressionForecast::positive_guaranteed;
    return AggressionForecast::indeterminate;
}

}  // namespace protest
