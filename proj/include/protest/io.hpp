#pragma once

// Scenario documents (JSON), CSV writers and the SVG heat map.

#include <string>
#include <string_view>

#include "protest/scenario.hpp"
#include "protest/sensitivity.hpp"
#include "protest/sweep.hpp"

namespace protest {

/// Shortest decimal that parses back to the same double.
[[nodiscard]] std::string format_real(double x);

/// Deterministic JSON with fixed key order.
[[nodiscard]] std::string serialize_scenario(const Scenario& scenario);

/// Parses and validates. Every model parameter, initial component, p0 and
/// t_enter must be present; solver settings, min_protesters, the f*_inclusive
/// flags and label fall back to defaults. Unknown keys are rejected.
/// Throws ParseError (with line/column) on malformed text and
/// ValidationError naming the field otherwise.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

/// Header `t,v1,v2,u1,u2,tau,p`, one row per sample.
[[nodiscard]] std::string write_trajectory_csv(const Trajectory& trajectory);

/// Long format, header
/// `axis1,axis2,police_aofa,protester_aofa,peak_agitators,duration,productive`.
[[nodiscard]] std::string write_grid_csv(const SweepGrid& grid);

/// Header `t,output,min,q05,mean,q95,max,sd`, time-major.
[[nodiscard]] std::string write_envelope_csv(const EnvelopeSummary& summary);

/// Header `t,output,parameter,sensitivity,scaled,flagged`, time-major.
[[nodiscard]] std::string write_sensitivity_csv(const SensitivityMatrix& matrix);

/// One <rect class="cell"> per grid cell, darker for larger metric values,
/// with axis labels and a colour bar.
[[nodiscard]] std::string render_heatmap_svg(const SweepGrid& grid, Metric metric);

/// HSL lightness (percent) used for a value on [lo, hi]; 95 at lo, 20 at hi.
[[nodiscard]] double heatmap_lightness(double value, double lo, double hi) noexcept;

}  // namespace protest
