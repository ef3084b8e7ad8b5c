#pragma once

// Two-parameter sweeps of the ODE model and phase-boundary extraction.

#include <cstddef>
#include <string_view>
#include <vector>

#include "protest/parallel.hpp"
#include "protest/scenario.hpp"

namespace protest {

enum class AxisTarget { tau_c, v_c, initial_agitators, entrance_time };

[[nodiscard]] const char* to_string(AxisTarget target) noexcept;
/// Throws ValidationError for unknown names.
[[nodiscard]] AxisTarget axis_target_from_string(std::string_view name);

struct AxisSpec {
    AxisTarget target = AxisTarget::tau_c;
    std::vector<double> values;

    /// start, start + step, ... while <= stop (with a 1e-9 step tolerance).
    /// Values are computed as start + k * step.
    [[nodiscard]] static AxisSpec range(AxisTarget target, double start, double step,
                                        double stop);

    friend bool operator==(const AxisSpec&, const AxisSpec&) = default;
};

void validate(const AxisSpec& axis);

/// Copy of `base` with one swept quantity overridden. initial_agitators
/// keeps the crowd size fixed: u1 = a, u2 = N - a.
[[nodiscard]] Scenario apply_axis(Scenario base, AxisTarget target, double value);

struct CellMetrics {
    double total_police_aofa = 0.0;     // final v2
    double total_protester_aofa = 0.0;  // final v1
    double peak_agitators = 0.0;        // max u1 over every step
    double duration = 0.0;              // termination time
    bool productive = false;

    friend bool operator==(const CellMetrics&, const CellMetrics&) = default;
};

/// Integrates one scenario, keeping only the summary metrics.
[[nodiscard]] CellMetrics evaluate_cell(const Scenario& scenario);

struct SweepGrid {
    AxisSpec axis1;
    AxisSpec axis2;
    std::vector<CellMetrics> cells;  // row-major: axis1 outer

    [[nodiscard]] std::size_t rows() const noexcept { return axis1.values.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return axis2.values.size(); }
    [[nodiscard]] const CellMetrics& at(std::size_t i, std::size_t j) const {
        return cells.at(i * cols() + j);
    }

    friend bool operator==(const SweepGrid&, const SweepGrid&) = default;
};

/// Evaluates every (axis1, axis2) cell. Results land in fixed slots, so the
/// grid is identical for any execution mode or thread count.
[[nodiscard]] SweepGrid run_sweep_2d(const Scenario& base, const AxisSpec& axis1,
                                     const AxisSpec& axis2,
                                     Execution exec = Execution::parallel());

enum class Metric { police, protester, peak_agitators, duration };

[[nodiscard]] const char* to_string(Metric metric) noexcept;
[[nodiscard]] Metric metric_from_string(std::string_view name);
[[nodiscard]] double metric_value(const CellMetrics& cell, Metric metric) noexcept;

struct CellIndex {
    std::size_t i = 0;
    std::size_t j = 0;
    friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct BoundaryPair {
    CellIndex a;
    CellIndex b;  // right or lower neighbour of a
    friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

/// Every 4-neighbour pair whose metric values lie on opposite sides of
/// `threshold` (one > threshold, the other <= threshold).
[[nodiscard]] std::vector<BoundaryPair> detect_phase_boundary(const SweepGrid& grid,
                                                              Metric metric,
                                                              double threshold = 0.5);

}  // namespace protest
