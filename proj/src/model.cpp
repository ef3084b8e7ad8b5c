#include "protest/model.hpp"

#include <cmath>
#include <string>

#include "protest/errors.hpp"

namespace protest {
namespace {

void require_nonnegative(double value, const char* group, const char* field) {
    if (!std::isfinite(value) || value < 0.0) {
        throw ValidationError(std::string(group) + "." + field +
                              " must be finite and >= 0 (got " + std::to_string(value) + ")");
    }
}

}  // namespace

void validate(const ModelParams& p) {
    require_nonnegative(p.T1, "params", "T1");
    require_nonnegative(p.T2, "params", "T2");
    require_nonnegative(p.T3, "params", "T3");
    require_nonnegative(p.tau_c, "params", "tau_c");
    require_nonnegative(p.v_c, "params", "v_c");
    require_nonnegative(p.tau_f3, "params", "tau_f3");
    require_nonnegative(p.theta, "params", "theta");
    require_nonnegative(p.omega, "params", "omega");
    require_nonnegative(p.epsilon, "params", "epsilon");
}

double* param_field(ModelParams& p, std::string_view name) noexcept {
    if (name == "T1") return &p.T1;
    if (name == "T2") return &p.T2;
    if (name == "T3") return &p.T3;
    if (name == "tau_c") return &p.tau_c;
    if (name == "v_c") return &p.v_c;
    if (name == "tau_f3") return &p.tau_f3;
    if (name == "theta") return &p.theta;
    if (name == "omega") return &p.omega;
    if (name == "epsilon") return &p.epsilon;
    return nullptr;
}

double param_value(const ModelParams& p, std::string_view name) {
    auto copy = p;
    const double* field = param_field(copy, name);
    if (field == nullptr) throw ValidationError("unknown parameter '" + std::string(name) + "'");
    return *field;
}

void validate(const State& s) {
    require_nonnegative(s.t, "initial", "t");
    require_nonnegative(s.v1, "initial", "v1");
    require_nonnegative(s.v2, "initial", "v2");
    require_nonnegative(s.u1, "initial", "u1");
    require_nonnegative(s.u2, "initial", "u2");
    require_nonnegative(s.tau, "initial", "tau");
}

void validate(const PoliceSchedule& schedule) {
    require_nonnegative(schedule.p0, "schedule", "p0");
    require_nonnegative(schedule.t_enter, "schedule", "t_enter");
    if (!std::isfinite(schedule.min_protesters)) {
        throw ValidationError("schedule.min_protesters must be finite");
    }
}

}  // namespace protest
