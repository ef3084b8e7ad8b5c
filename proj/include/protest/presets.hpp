#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "protest/scenario.hpp"
#include "protest/sweep.hpp"

namespace protest {

struct Preset {
    Scenario scenario;
    std::optional<std::pair<AxisSpec, AxisSpec>> axes;
};

/// Named experiment setups:
///   cs1i, cs1ii, cs2i, cs2ii                    case studies
///   heatmap-A20, heatmap-A40, heatmap-A50        (tau_c, v_c) sweeps
///   entrance-T1-0.1, entrance-T1-0.01, entrance-T1-0.5
///                                                (agitators, entry time) sweeps
/// Throws ValidationError listing the valid ids for anything else.
[[nodiscard]] Preset preset_scenario(std::string_view id);

[[nodiscard]] std::span<const std::string_view> preset_ids() noexcept;

}  // namespace protest
