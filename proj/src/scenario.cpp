#include "protest/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "protest/errors.hpp"

namespace protest {

void validate(const SolverSettings& s) {
    auto positive = [](double v, const char* field) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw ValidationError(std::string("settings.") + field + " must be finite and > 0");
        }
    };
    positive(s.dt, "dt");
    positive(s.h, "h");
    positive(s.t_max, "t_max");
    if (s.record_every == 0) throw ValidationError("settings.record_every must be >= 1");
}

void validate(const Scenario& scenario) {
    validate(scenario.initial);
    if (scenario.initial.t != 0.0) throw ValidationError("initial.t must be 0");
    validate(scenario.params);
    validate(scenario.schedule);
    validate(scenario.settings);
}

const char* to_string(Termination reason) noexcept {
    switch (reason) {
        case Termination::protesters_depleted: return "protesters_depleted";
        case Termination::horizon_reached: return "horizon_reached";
    }
    return "unknown";
}

std::uint8_t regime_of(const State& s, double police, const ModelParams& params) noexcept {
    std::uint8_t bits = 0;
    if (params.f1().active(s.tau)) bits |= kAgitatorsActive;
    if (params.f2().active(s.v1)) bits |= kPoliceActive;
    if (params.f3().active(s.tau)) bits |= kConversionActive;
    if (police > 0.0) bits |= kPolicePresent;
    return bits;
}

State Trajectory::at(double t) const {
    if (samples.empty()) return State{t};
    if (t <= samples.front().t) {
        State s = samples.front();
        s.t = t;
        return s;
    }
    if (t >= samples.back().t) {
        State s = samples.back();
        s.t = t;
        return s;
    }
    const auto hi = std::lower_bound(samples.begin(), samples.end(), t,
                                     [](const State& s, double x) { return s.t < x; });
    const auto lo = hi - 1;
    if (hi->t == t) return *hi;
    const double w = (t - lo->t) / (hi->t - lo->t);
    auto lerp = [w](double a, double b) { return a + w * (b - a); };
    return {t, lerp(lo->v1, hi->v1), lerp(lo->v2, hi->v2), lerp(lo->u1, hi->u1),
            lerp(lo->u2, hi->u2), lerp(lo->tau, hi->tau)};
}

}  // namespace protest
