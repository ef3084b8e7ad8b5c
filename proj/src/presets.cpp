#include "protest/presets.hpp"

#include <array>
#include <string>

#include "protest/errors.hpp"

namespace protest {
namespace {

constexpr std::array<std::string_view, 10> kIds = {
    "cs1i",        "cs1ii",       "cs2i",           "cs2ii",           "heatmap-A20",
    "heatmap-A40", "heatmap-A50", "entrance-T1-0.1", "entrance-T1-0.01", "entrance-T1-0.5"};

// Case studies fix exit/decay and f3 = 0.1 * 1{tau > 2}; the remaining
// rates sit at the midpoints of the global-sensitivity ranges.
Scenario case_study(double u1, double u2, double v2, double t_enter, std::string label) {
    Scenario s;
    s.initial = {0.0, 0.0, v2, u1, u2, 2.0};
    s.params.T1 = 0.1005;
    s.params.T2 = 0.00505;
    s.params.T3 = 0.1;
    s.params.tau_c = 5.0;
    s.params.v_c = 5.0;
    s.params.tau_f3 = 2.0;
    s.params.theta = 0.045;
    s.params.omega = 0.01;
    s.params.epsilon = 0.02;
    s.schedule = {100.0, t_enter, 1.0};
    s.label = std::move(label);
    return s;
}

// Shared by the (tau_c, v_c) and entrance-time heat maps: tension starts at
// 5 and f3 = 0.1 * 1{tau > 5}.
Scenario heatmap_base(double agitators, double T1, double T2, std::string label) {
    constexpr double kCrowd = 500.0;
    Scenario s;
    s.initial = {0.0, 0.0, 0.0, agitators, kCrowd - agitators, 5.0};
    s.params.T1 = T1;
    s.params.T2 = T2;
    s.params.T3 = 0.1;
    s.params.tau_f3 = 5.0;
    s.params.theta = 0.2;
    s.params.omega = 0.01;
    s.params.epsilon = 0.01;
    s.schedule = {100.0, 0.0, 1.0};
    s.label = std::move(label);
    return s;
}

Preset tension_tolerance_map(double fraction, std::string label) {
    Scenario s = heatmap_base(fraction * 500.0, 0.1, 0.01, std::move(label));
    s.params.tau_c = 0.0;
    s.params.v_c = 0.0;
    return {s, std::pair{AxisSpec::range(AxisTarget::tau_c, 0.0, 0.25, 10.0),
                         AxisSpec::range(AxisTarget::v_c, 0.0, 0.25, 15.0)}};
}

Preset entrance_map(double T1, std::string label) {
    Scenario s = heatmap_base(100.0, T1, 0.001, std::move(label));
    s.params.tau_c = 5.0;
    s.params.v_c = 15.0;
    s.schedule.t_enter = 10.0;
    return {s, std::pair{AxisSpec::range(AxisTarget::initial_agitators, 0.0, 10.0, 500.0),
                         AxisSpec::range(AxisTarget::entrance_time, 0.0, 1.0, 50.0)}};
}

}  // namespace

std::span<const std::string_view> preset_ids() noexcept { return kIds; }

Preset preset_scenario(std::string_view id) {
    const std::string label(id);
    if (id == "cs1i") return {case_study(0.0, 500.0, 0.0, 0.0, label), std::nullopt};
    if (id == "cs1ii") return {case_study(0.0, 500.0, 1.0, 0.0, label), std::nullopt};
    if (id == "cs2i") return {case_study(100.0, 400.0, 0.0, 0.0, label), std::nullopt};
    if (id == "cs2ii") return {case_study(100.0, 400.0, 0.0, 10.0, label), std::nullopt};
    if (id == "heatmap-A20") return tension_tolerance_map(0.2, label);
    if (id == "heatmap-A40") return tension_tolerance_map(0.4, label);
    if (id == "heatmap-A50") return tension_tolerance_map(0.5, label);
    if (id == "entrance-T1-0.1") return entrance_map(0.1, label);
    if (id == "entrance-T1-0.01") return entrance_map(0.01, label);
    if (id == "entrance-T1-0.5") return entrance_map(0.5, label);

    std::string valid;
    for (auto known : kIds) {
        if (!valid.empty()) valid += ", ";
        valid += known;
    }
    throw ValidationError("unknown preset '" + label + "'; valid ids: " + valid);
}

}  // namespace protest
