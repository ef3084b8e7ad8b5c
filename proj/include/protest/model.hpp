#pragma once

// Hazard kernels of the police/protester interaction game.
//
// Everything in this header is a pure function of its arguments. The
// discrete stepper, the ODE right-hand side and the sensitivity machinery
// all evaluate rates through these functions so the step-function
// conventions live in exactly one place.

#include <cmath>
#include <string_view>

namespace protest {

/// All-or-nothing activation: `intensity` once the argument reaches
/// `threshold`, zero below it. `inclusive` decides whether the threshold
/// value itself activates.
struct StepFn {
    double threshold = 0.0;
    double intensity = 0.0;
    bool inclusive = true;

    [[nodiscard]] constexpr double eval(double x) const noexcept {
        const bool active = inclusive ? (x >= threshold) : (x > threshold);
        return active ? intensity : 0.0;
    }
    [[nodiscard]] constexpr bool active(double x) const noexcept {
        return eval(x) > 0.0;
    }

    friend constexpr bool operator==(const StepFn&, const StepFn&) = default;
};

/// Rate and threshold constants of the model.
///
///   T1      agitator aggression intensity (f1)
///   T2      police aggression intensity (f2)
///   T3      moderate-to-agitator conversion intensity (f3)
///   tau_c   tension threshold of f1
///   v_c     protester-aggression count that triggers f2
///   tau_f3  tension threshold of f3
///   theta   tension added per act of aggression
///   omega   tension decay rate
///   epsilon protester exit rate
struct ModelParams {
    double T1 = 0.0;
    double T2 = 0.0;
    double T3 = 0.1;
    double tau_c = 0.0;
    double v_c = 0.0;
    double tau_f3 = 0.0;
    double theta = 0.0;
    double omega = 0.0;
    double epsilon = 0.0;
    bool f1_inclusive = true;
    bool f2_inclusive = true;
    bool f3_inclusive = false;

    [[nodiscard]] constexpr StepFn f1() const noexcept { return {tau_c, T1, f1_inclusive}; }
    [[nodiscard]] constexpr StepFn f2() const noexcept { return {v_c, T2, f2_inclusive}; }
    [[nodiscard]] constexpr StepFn f3() const noexcept { return {tau_f3, T3, f3_inclusive}; }

    friend constexpr bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Throws ValidationError naming the first field that is negative or not finite.
void validate(const ModelParams& params);

/// Numeric ModelParams fields addressable by name ("T1", "theta", ...).
/// Returns nullptr for unknown names.
[[nodiscard]] double* param_field(ModelParams& params, std::string_view name) noexcept;
[[nodiscard]] double param_value(const ModelParams& params, std::string_view name);

struct State {
    double t = 0.0;
    double v1 = 0.0;   // cumulative protester acts of aggression
    double v2 = 0.0;   // cumulative police acts of aggression
    double u1 = 0.0;   // agitators
    double u2 = 0.0;   // moderates
    double tau = 0.0;  // social tension

    [[nodiscard]] constexpr double protesters() const noexcept { return u1 + u2; }

    friend constexpr bool operator==(const State&, const State&) = default;
};

void validate(const State& state);

struct PoliceSchedule {
    double p0 = 0.0;
    double t_enter = 0.0;
    double min_protesters = 1.0;

    friend constexpr bool operator==(const PoliceSchedule&, const PoliceSchedule&) = default;
};

void validate(const PoliceSchedule& schedule);

struct Hazards {
    double agitator = 0.0;    // per-agitator aggression rate
    double police = 0.0;      // per-officer aggression rate
    double conversion = 0.0;  // per-moderate conversion rate
};

/// Fraction of all acts of aggression attributed to police, with the +1
/// keeping the all-zero state well defined.
[[nodiscard]] constexpr double unfairness(double v1, double v2) noexcept {
    return v2 / (v2 + v1 + 1.0);
}

[[nodiscard]] constexpr Hazards hazards(const State& s, double police,
                                        const ModelParams& params) noexcept {
    return {params.f1().eval(s.tau) / (police + 1.0),
            params.f2().eval(s.v1),
            unfairness(s.v1, s.v2) * params.f3().eval(s.tau)};
}

/// Probability of at least one event in `dt` for a Poisson rate `lambda`.
[[nodiscard]] inline double prob_from_hazard(double lambda, double dt) noexcept {
    return -std::expm1(-lambda * dt);
}

[[nodiscard]] constexpr double police_presence(const PoliceSchedule& schedule, double t,
                                               const State& s) noexcept {
    return (t >= schedule.t_enter && s.protesters() > schedule.min_protesters) ? schedule.p0
                                                                              : 0.0;
}

}  // namespace protest
