#include "protest/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "protest/errors.hpp"

namespace protest {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scenario documents

ordered_json real(double x) { return ordered_json(x); }

class Section {
public:
    Section(const ordered_json& root, const char* name, bool required) : name_(name) {
        const auto it = root.find(name);
        if (it == root.end()) {
            if (required) throw ValidationError(std::string(name) + ": missing section");
            return;
        }
        if (!it->is_object()) throw ValidationError(std::string(name) + ": must be an object");
        node_ = &*it;
    }

    double number(const char* key) {
        const ordered_json* v = find(key);
        if (v == nullptr) throw ValidationError(field(key) + ": missing (required)");
        return as_number(*v, key);
    }

    double number_or(const char* key, double fallback) {
        const ordered_json* v = find(key);
        return v == nullptr ? fallback : as_number(*v, key);
    }

    bool flag_or(const char* key, bool fallback) {
        const ordered_json* v = find(key);
        if (v == nullptr) return fallback;
        if (!v->is_boolean()) throw ValidationError(field(key) + ": must be true or false");
        return v->get<bool>();
    }

    std::size_t count_or(const char* key, std::size_t fallback) {
        const ordered_json* v = find(key);
        if (v == nullptr) return fallback;
        if (!v->is_number_unsigned() || v->get<std::uint64_t>() == 0) {
            throw ValidationError(field(key) + ": must be a positive integer");
        }
        return static_cast<std::size_t>(v->get<std::uint64_t>());
    }

    /// Rejects keys nobody asked for (typos would otherwise be ignored).
    void reject_unknown() const {
        if (node_ == nullptr) return;
        for (const auto& [key, value] : node_->items()) {
            if (!seen_.contains(key)) {
                throw ValidationError(std::string(name_) + "." + key + ": unknown field");
            }
        }
    }

private:
    const ordered_json* find(const char* key) {
        seen_.insert(key);
        if (node_ == nullptr) return nullptr;
        const auto it = node_->find(key);
        return it == node_->end() ? nullptr : &*it;
    }

    double as_number(const ordered_json& v, const char* key) const {
        if (!v.is_number()) throw ValidationError(field(key) + ": must be a number");
        return v.get<double>();
    }

    std::string field(const char* key) const { return std::string(name_) + "." + key; }

    const char* name_;
    const ordered_json* node_ = nullptr;
    std::set<std::string, std::less<>> seen_;
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// ---------------------------------------------------------------------------
// CSV helpers

void append_row(std::string& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out += ',';
        out += c;
        first = false;
    }
    out += '\n';
}

std::string svg_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string format_real(double x) {
    std::array<char, 32> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return {buf.data(), result.ptr};
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json doc;
    doc["label"] = s.label;
    doc["initial"] = {{"v1", real(s.initial.v1)},
                      {"v2", real(s.initial.v2)},
                      {"u1", real(s.initial.u1)},
                      {"u2", real(s.initial.u2)},
                      {"tau", real(s.initial.tau)}};
    doc["params"] = {{"T1", real(s.params.T1)},
                     {"T2", real(s.params.T2)},
                     {"T3", real(s.params.T3)},
                     {"tau_c", real(s.params.tau_c)},
                     {"v_c", real(s.params.v_c)},
                     {"tau_f3", real(s.params.tau_f3)},
                     {"theta", real(s.params.theta)},
                     {"omega", real(s.params.omega)},
                     {"epsilon", real(s.params.epsilon)},
                     {"f1_inclusive", s.params.f1_inclusive},
                     {"f2_inclusive", s.params.f2_inclusive},
                     {"f3_inclusive", s.params.f3_inclusive}};
    doc["schedule"] = {{"p0", real(s.schedule.p0)},
                       {"t_enter", real(s.schedule.t_enter)},
                       {"min_protesters", real(s.schedule.min_protesters)}};
    doc["settings"] = {{"dt", real(s.settings.dt)},
                       {"h", real(s.settings.h)},
                       {"t_max", real(s.settings.t_max)},
                       {"record_every", static_cast<std::uint64_t>(s.settings.record_every)}};
    return doc.dump(2) + "\n";
}

Scenario parse_scenario(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }
    if (!doc.is_object()) throw ParseError("scenario document must be a JSON object", 1, 1);

    for (const auto& [key, value] : doc.items()) {
        static const std::set<std::string, std::less<>> kTop = {"label", "initial", "params",
                                                                "schedule", "settings"};
        if (!kTop.contains(key)) throw ValidationError(key + ": unknown section");
    }

    Scenario s;
    if (const auto it = doc.find("label"); it != doc.end()) {
        if (!it->is_string()) throw ValidationError("label: must be a string");
        s.label = it->get<std::string>();
    }

    Section initial(doc, "initial", true);
    s.initial.v1 = initial.number("v1");
    s.initial.v2 = initial.number("v2");
    s.initial.u1 = initial.number("u1");
    s.initial.u2 = initial.number("u2");
    s.initial.tau = initial.number("tau");
    initial.reject_unknown();

    Section params(doc, "params", true);
    s.params.T1 = params.number("T1");
    s.params.T2 = params.number("T2");
    s.params.T3 = params.number("T3");
    s.params.tau_c = params.number("tau_c");
    s.params.v_c = params.number("v_c");
    s.params.tau_f3 = params.number("tau_f3");
    s.params.theta = params.number("theta");
    s.params.omega = params.number("omega");
    s.params.epsilon = params.number("epsilon");
    s.params.f1_inclusive = params.flag_or("f1_inclusive", true);
    s.params.f2_inclusive = params.flag_or("f2_inclusive", true);
    s.params.f3_inclusive = params.flag_or("f3_inclusive", false);
    params.reject_unknown();

    Section schedule(doc, "schedule", true);
    s.schedule.p0 = schedule.number("p0");
    s.schedule.t_enter = schedule.number("t_enter");
    s.schedule.min_protesters = schedule.number_or("min_protesters", 1.0);
    schedule.reject_unknown();

    Section settings(doc, "settings", false);
    const SolverSettings defaults;
    s.settings.dt = settings.number_or("dt", defaults.dt);
    s.settings.h = settings.number_or("h", defaults.h);
    s.settings.t_max = settings.number_or("t_max", defaults.t_max);
    s.settings.record_every = settings.count_or("record_every", defaults.record_every);
    settings.reject_unknown();

    validate(s);
    return s;
}

std::string write_trajectory_csv(const Trajectory& trajectory) {
    std::string out = "t,v1,v2,u1,u2,tau,p\n";
    for (std::size_t k = 0; k < trajectory.samples.size(); ++k) {
        const State& s = trajectory.samples[k];
        const double p = k < trajectory.police.size() ? trajectory.police[k] : 0.0;
        append_row(out, {format_real(s.t), format_real(s.v1), format_real(s.v2),
                         format_real(s.u1), format_real(s.u2), format_real(s.tau),
                         format_real(p)});
    }
    return out;
}

std::string write_grid_csv(const SweepGrid& grid) {
    std::string out = "axis1,axis2,police_aofa,protester_aofa,peak_agitators,duration,productive\n";
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            const CellMetrics& c = grid.at(i, j);
            append_row(out, {format_real(grid.axis1.values[i]), format_real(grid.axis2.values[j]),
                             format_real(c.total_police_aofa), format_real(c.total_protester_aofa),
                             format_real(c.peak_agitators), format_real(c.duration),
                             c.productive ? "true" : "false"});
        }
    }
    return out;
}

std::string write_envelope_csv(const EnvelopeSummary& summary) {
    std::string out = "t,output,min,q05,mean,q95,max,sd\n";
    for (std::size_t k = 0; k < summary.times.size(); ++k) {
        for (auto o : kAllOutputs) {
            const EnvelopeBand& b = summary.band(o);
            append_row(out, {format_real(summary.times[k]), to_string(o), format_real(b.min[k]),
                             format_real(b.q05[k]), format_real(b.mean[k]),
                             format_real(b.q95[k]), format_real(b.max[k]),
                             format_real(b.sd[k])});
        }
    }
    return out;
}

std::string write_sensitivity_csv(const SensitivityMatrix& matrix) {
    std::string out = "t,output,parameter,sensitivity,scaled,flagged\n";
    for (std::size_t k = 0; k < matrix.times.size(); ++k) {
        for (const auto& col : matrix.columns) {
            append_row(out, {format_real(matrix.times[k]), to_string(col.output), col.parameter,
                             format_real(col.raw[k]), format_real(col.scaled[k]),
                             col.flagged ? "true" : "false"});
        }
    }
    return out;
}

double heatmap_lightness(double value, double lo, double hi) noexcept {
    constexpr double kLightest = 95.0;
    constexpr double kDarkest = 20.0;
    if (!(hi > lo)) return kLightest;
    const double x = std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
    return kLightest - (kLightest - kDarkest) * x;
}

std::string render_heatmap_svg(const SweepGrid& grid, Metric metric) {
    const std::size_t rows = grid.rows();
    const std::size_t cols = grid.cols();
    double lo = 0.0;
    double hi = 0.0;
    if (!grid.cells.empty()) {
        lo = hi = metric_value(grid.cells.front(), metric);
        for (const auto& c : grid.cells) {
            lo = std::min(lo, metric_value(c, metric));
            hi = std::max(hi, metric_value(c, metric));
        }
    }

    // axis1 runs left to right, axis2 bottom to top.
    const double cell_w = std::clamp(600.0 / static_cast<double>(std::max<std::size_t>(rows, 1)), 4.0, 40.0);
    const double cell_h = std::clamp(400.0 / static_cast<double>(std::max<std::size_t>(cols, 1)), 4.0, 40.0);
    const double left = 80.0;
    const double top = 40.0;
    const double plot_w = cell_w * static_cast<double>(rows);
    const double plot_h = cell_h * static_cast<double>(cols);
    const double legend_x = left + plot_w + 30.0;
    const double width = legend_x + 110.0;
    const double height = top + plot_h + 70.0;

    auto fill = [&](double v) {
        return "hsl(220,70%," + format_real(heatmap_lightness(v, lo, hi)) + "%)";
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_real(width)
        << "\" height=\"" << format_real(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<title>" << svg_escape(std::string("total ") + to_string(metric) + " AofA")
        << "</title>\n";
    svg << "<text x=\"" << format_real(left) << "\" y=\"20\">" << to_string(metric) << "</text>\n";

    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const double x = left + cell_w * static_cast<double>(i);
            const double y = top + cell_h * static_cast<double>(cols - 1 - j);
            svg << "<rect class=\"cell\" x=\"" << format_real(x) << "\" y=\"" << format_real(y)
                << "\" width=\"" << format_real(cell_w) << "\" height=\"" << format_real(cell_h)
                << "\" fill=\"" << fill(metric_value(grid.at(i, j), metric)) << "\"/>\n";
        }
    }

    // Axis labels and end ticks.
    const double axis_y = top + plot_h;
    svg << "<text class=\"axis-label\" x=\"" << format_real(left + plot_w / 2.0) << "\" y=\""
        << format_real(axis_y + 40.0) << "\" text-anchor=\"middle\">"
        << to_string(grid.axis1.target) << "</text>\n";
    svg << "<text class=\"axis-label\" x=\"20\" y=\"" << format_real(top + plot_h / 2.0)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
        << format_real(top + plot_h / 2.0) << ")\">" << to_string(grid.axis2.target)
        << "</text>\n";
    if (rows > 0 && cols > 0) {
        svg << "<text x=\"" << format_real(left) << "\" y=\"" << format_real(axis_y + 16.0)
            << "\">" << format_real(grid.axis1.values.front()) << "</text>\n";
        svg << "<text x=\"" << format_real(left + plot_w) << "\" y=\""
            << format_real(axis_y + 16.0) << "\" text-anchor=\"end\">"
            << format_real(grid.axis1.values.back()) << "</text>\n";
        svg << "<text x=\"" << format_real(left - 6.0) << "\" y=\"" << format_real(axis_y)
            << "\" text-anchor=\"end\">" << format_real(grid.axis2.values.front()) << "</text>\n";
        svg << "<text x=\"" << format_real(left - 6.0) << "\" y=\"" << format_real(top + 10.0)
            << "\" text-anchor=\"end\">" << format_real(grid.axis2.values.back()) << "</text>\n";
    }

    // Colour bar, max at the top.
    constexpr int kLegendSteps = 20;
    const double step_h = plot_h / kLegendSteps;
    for (int k = 0; k < kLegendSteps; ++k) {
        const double v = lo + (hi - lo) * (static_cast<double>(k) + 0.5) / kLegendSteps;
        const double y = top + plot_h - step_h * static_cast<double>(k + 1);
        svg << "<rect class=\"legend\" x=\"" << format_real(legend_x) << "\" y=\""
            << format_real(y) << "\" width=\"20\" height=\"" << format_real(step_h)
            << "\" fill=\"" << fill(v) << "\"/>\n";
    }
    svg << "<text class=\"legend-label\" x=\"" << format_real(legend_x + 26.0) << "\" y=\""
        << format_real(top + 10.0) << "\">" << format_real(hi) << "</text>\n";
    svg << "<text class=\"legend-label\" x=\"" << format_real(legend_x + 26.0) << "\" y=\""
        << format_real(top + plot_h) << "\">" << format_real(lo) << "</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace protest
