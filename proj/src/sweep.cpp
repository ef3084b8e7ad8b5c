#include "protest/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "protest/errors.hpp"
#include "protest/ode.hpp"

namespace protest {

const char* to_string(AxisTarget target) noexcept {
    switch (target) {
        case AxisTarget::tau_c: return "tau_c";
        case AxisTarget::v_c: return "v_c";
        case AxisTarget::initial_agitators: return "initial_agitators";
        case AxisTarget::entrance_time: return "entrance_time";
    }
    return "unknown";
}

AxisTarget axis_target_from_string(std::string_view name) {
    for (auto t : {AxisTarget::tau_c, AxisTarget::v_c, AxisTarget::initial_agitators,
                   AxisTarget::entrance_time}) {
        if (name == to_string(t)) return t;
    }
    throw ValidationError("unknown axis target '" + std::string(name) +
                          "' (expected tau_c, v_c, initial_agitators or entrance_time)");
}

AxisSpec AxisSpec::range(AxisTarget target, double start, double step, double stop) {
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
        throw ValidationError(std::string("axis ") + to_string(target) +
                              " needs start <= stop and step > 0");
    }
    AxisSpec axis{target, {}};
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    axis.values.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        axis.values.push_back(start + static_cast<double>(k) * step);
    }
    return axis;
}

void validate(const AxisSpec& axis) {
    if (axis.values.empty()) {
        throw ValidationError(std::string("axis ") + to_string(axis.target) + " has no values");
    }
    for (std::size_t k = 0; k < axis.values.size(); ++k) {
        const double v = axis.values[k];
        if (!std::isfinite(v) || v < 0.0) {
            throw ValidationError(std::string("axis ") + to_string(axis.target) +
                                  " values must be finite and nonnegative");
        }
        if (k > 0 && !(v > axis.values[k - 1])) {
            throw ValidationError(std::string("axis ") + to_string(axis.target) +
                                  " values must be strictly increasing");
        }
    }
}

Scenario apply_axis(Scenario base, AxisTarget target, double value) {
    switch (target) {
        case AxisTarget::tau_c: base.params.tau_c = value; break;
        case AxisTarget::v_c: base.params.v_c = value; break;
        case AxisTarget::entrance_time: base.schedule.t_enter = value; break;
        case AxisTarget::initial_agitators: {
            const double crowd = base.crowd_size();
            if (value > crowd) {
                throw ValidationError("initial_agitators " + std::to_string(value) +
                                      " exceeds the crowd size " + std::to_string(crowd));
            }
            base.initial.u1 = value;
            base.initial.u2 = crowd - value;
            break;
        }
    }
    return base;
}

CellMetrics evaluate_cell(const Scenario& scenario) {
    State last = scenario.initial;
    double peak = scenario.initial.u1;
    integrate_visit(scenario, [&](std::size_t, const State& s, double) {
        last = s;
        peak = std::max(peak, s.u1);
    });
    CellMetrics cell;
    cell.total_police_aofa = last.v2;
    cell.total_protester_aofa = last.v1;
    cell.peak_agitators = peak;
    cell.duration = last.t;
    cell.productive = last.v1 == 0.0 && last.v2 == 0.0 && last.tau < scenario.initial.tau;
    return cell;
}

SweepGrid run_sweep_2d(const Scenario& base, const AxisSpec& axis1, const AxisSpec& axis2,
                       Execution exec) {
    validate(axis1);
    validate(axis2);
    if (axis1.target == axis2.target) {
        throw ValidationError(std::string("both axes target ") + to_string(axis1.target));
    }
    validate(base);
    const double crowd = base.crowd_size();
    for (const auto* axis : {&axis1, &axis2}) {
        if (axis->target == AxisTarget::initial_agitators && axis->values.back() > crowd) {
            throw ValidationError("initial_agitators axis exceeds the crowd size " +
                                  std::to_string(crowd));
        }
    }

    SweepGrid grid{axis1, axis2, std::vector<CellMetrics>(axis1.values.size() * axis2.values.size())};
    const std::size_t cols = axis2.values.size();
    for_each_index(grid.cells.size(), exec, [&](std::size_t idx) {
        const std::size_t i = idx / cols;
        const std::size_t j = idx % cols;
        const Scenario cell = apply_axis(apply_axis(base, axis1.target, axis1.values[i]),
                                         axis2.target, axis2.values[j]);
        try {
            grid.cells[idx] = evaluate_cell(cell);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string("cell (") + to_string(axis1.target) + " = " +
                                 std::to_string(axis1.values[i]) + ", " +
                                 to_string(axis2.target) + " = " +
                                 std::to_string(axis2.values[j]) + "): " + e.what());
        }
    });
    return grid;
}

const char* to_string(Metric metric) noexcept {
    switch (metric) {
        case Metric::police: return "police";
        case Metric::protester: return "protester";
        case Metric::peak_agitators: return "peak_agitators";
        case Metric::duration: return "duration";
    }
    return "unknown";
}

Metric metric_from_string(std::string_view name) {
    for (auto m : {Metric::police, Metric::protester, Metric::peak_agitators, Metric::duration}) {
        if (name == to_string(m)) return m;
    }
    throw ValidationError("unknown metric '" + std::string(name) +
                          "' (expected police, protester, peak_agitators or duration)");
}

double metric_value(const CellMetrics& cell, Metric metric) noexcept {
    switch (metric) {
        case Metric::police: return cell.total_police_aofa;
        case Metric::protester: return cell.total_protester_aofa;
        case Metric::peak_agitators: return cell.peak_agitators;
        case Metric::duration: return cell.duration;
    }
    return 0.0;
}

std::vector<BoundaryPair> detect_phase_boundary(const SweepGrid& grid, Metric metric,
                                                double threshold) {
    std::vector<BoundaryPair> out;
    auto above = [&](std::size_t i, std::size_t j) {
        return metric_value(grid.at(i, j), metric) > threshold;
    };
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            if (j + 1 < grid.cols() && above(i, j) != above(i, j + 1)) {
                out.push_back({{i, j}, {i, j + 1}});
            }
            if (i + 1 < grid.rows() && above(i, j) != above(i + 1, j)) {
                out.push_back({{i, j}, {i + 1, j}});
            }
        }
    }
    return out;
}

}  // namespace protest
