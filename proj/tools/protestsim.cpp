// Command-line front end: single runs, case studies, sensitivity tables and
// parameter sweeps, all written as CSV (plus an optional SVG heat map).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "protest/discrete.hpp"
#include "protest/errors.hpp"
#include "protest/io.hpp"
#include "protest/ode.hpp"
#include "protest/presets.hpp"
#include "protest/sensitivity.hpp"
#include "protest/sweep.hpp"

namespace {

using namespace protest;

constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

enum class Method { discrete, ode };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
    if (!out) throw ValidationError("failed writing " + path);
}

Scenario load_scenario(const std::string& path) {
    try {
        return parse_scenario(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line(), e.column());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

/// "target:start:step:stop", e.g. "v_c:0:0.25:15".
AxisSpec parse_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
    if (parts.size() != 4) {
        throw ValidationError("axis '" + text + "': expected target:start:step:stop");
    }
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double x = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return x;
        } catch (const std::exception&) {
            throw ValidationError("axis '" + text + "': '" + s + "' is not a number");
        }
    };
    return AxisSpec::range(axis_target_from_string(parts[0]), number(parts[1]), number(parts[2]),
                           number(parts[3]));
}

Trajectory run(const Scenario& s, Method method) {
    return method == Method::discrete ? run_discrete(s) : integrate(s);
}

struct Options {
    int threads = 0;

    std::string scenario_path;
    std::string preset_id;
    std::string out_path;
    Method method = Method::ode;
    std::optional<double> dt;
    std::optional<double> h;
    std::optional<double> t_max;

    std::size_t draws = 1000;
    std::uint64_t seed = 0;
    double grid_step = 1.0;
    std::optional<double> grid_end;
    std::vector<std::string> parameters;
    double rel_step = 1e-4;

    std::string axis1;
    std::string axis2;
    std::string svg_path;
    Metric metric = Metric::police;
};

Execution execution(const Options& o) { return Execution::parallel(o.threads); }

void apply_overrides(Scenario& s, const Options& o) {
    if (o.dt) s.settings.dt = *o.dt;
    if (o.h) s.settings.h = *o.h;
    if (o.t_max) s.settings.t_max = *o.t_max;
    validate(s);
}

std::vector<double> output_grid(const Scenario& s, const Options& o) {
    return uniform_grid(o.grid_end.value_or(s.settings.t_max), o.grid_step);
}

void add_solver_options(CLI::App& cmd, Options& o) {
    const std::map<std::string, Method> methods = {{"discrete", Method::discrete},
                                                   {"ode", Method::ode}};
    cmd.add_option("--method", o.method, "discrete | ode")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    cmd.add_option("--dt", o.dt, "discrete time step");
    cmd.add_option("--h", o.h, "RK4 step");
    cmd.add_option("--t-max", o.t_max, "time horizon");
}

void add_grid_options(CLI::App& cmd, Options& o) {
    cmd.add_option("--grid-step", o.grid_step, "spacing of the output time grid")
        ->capture_default_str();
    cmd.add_option("--grid-end", o.grid_end, "last output time (default: t_max)");
}

int dispatch(int argc, char** argv) {
    Options o;
    CLI::App app{"Protest escalation model: simulations, sensitivity analysis and sweeps"};
    app.set_help_flag("--help", "print this help and exit");  // frees -h; --h is the RK4 step
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "worker threads for ensembles and sweeps (0 = all)")
        ->check(CLI::NonNegativeNumber);

    auto* simulate = app.add_subcommand("simulate", "run one scenario document");
    simulate->add_option("--scenario", o.scenario_path, "scenario JSON")->required();
    simulate->add_option("--out", o.out_path, "trajectory CSV")->required();
    add_solver_options(*simulate, o);
    simulate->get_option("--method")->required();

    auto* case_study = app.add_subcommand("case-study", "run a named preset");
    case_study->add_option("id", o.preset_id, "preset id")->required();
    case_study->add_option("--out", o.out_path, "trajectory CSV")->required();
    add_solver_options(*case_study, o);

    auto* sensitivity = app.add_subcommand("sensitivity", "global envelopes or local sensitivities");
    sensitivity->require_subcommand(1);
    auto* global = sensitivity->add_subcommand("global", "Monte Carlo range envelopes");
    global->add_option("--scenario", o.scenario_path, "scenario JSON")->required();
    global->add_option("--out", o.out_path, "envelope CSV")->required();
    global->add_option("--n", o.draws, "parameter draws")->capture_default_str();
    global->add_option("--seed", o.seed, "random seed")->capture_default_str();
    add_grid_options(*global, o);
    auto* local = sensitivity->add_subcommand("local", "finite-difference sensitivity functions");
    local->add_option("--scenario", o.scenario_path, "scenario JSON")->required();
    local->add_option("--out", o.out_path, "sensitivity CSV")->required();
    local->add_option("--rel-step", o.rel_step, "relative perturbation")->capture_default_str();
    local->add_option("--params", o.parameters, "parameters to perturb")
        ->default_str("T1 T2 theta v_c tau_c");
    add_grid_options(*local, o);

    auto* sweep = app.add_subcommand("sweep", "two-parameter sweep of the ODE model");
    auto* preset_opt = sweep->add_option("--preset", o.preset_id, "preset with built-in axes");
    auto* scenario_opt = sweep->add_option("--scenario", o.scenario_path, "scenario JSON");
    preset_opt->excludes(scenario_opt);
    auto* axis1_opt = sweep->add_option("--axis1", o.axis1, "target:start:step:stop");
    auto* axis2_opt = sweep->add_option("--axis2", o.axis2, "target:start:step:stop");
    axis1_opt->needs(axis2_opt);
    axis2_opt->needs(axis1_opt);
    sweep->add_option("--out", o.out_path, "grid CSV")->required();
    sweep->add_option("--svg", o.svg_path, "heat map SVG");
    const std::map<std::string, Metric> metrics = {{"police", Metric::police},
                                                   {"protester", Metric::protester},
                                                   {"peak_agitators", Metric::peak_agitators},
                                                   {"duration", Metric::duration}};
    sweep->add_option("--metric", o.metric, "heat map metric")
        ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case));
    add_solver_options(*sweep, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitValidation;
    }

    if (simulate->parsed()) {
        Scenario s = load_scenario(o.scenario_path);
        apply_overrides(s, o);
        write_file(o.out_path, write_trajectory_csv(run(s, o.method)));
    } else if (case_study->parsed()) {
        Scenario s = preset_scenario(o.preset_id).scenario;
        apply_overrides(s, o);
        write_file(o.out_path, write_trajectory_csv(run(s, o.method)));
    } else if (global->parsed()) {
        const Scenario s = load_scenario(o.scenario_path);
        const auto summary = global_envelopes(s, ParamRanges::defaults(), o.draws, o.seed,
                                              output_grid(s, o), execution(o));
        write_file(o.out_path, write_envelope_csv(summary));
    } else if (local->parsed()) {
        const Scenario s = load_scenario(o.scenario_path);
        if (o.parameters.empty()) o.parameters = {"T1", "T2", "theta", "v_c", "tau_c"};
        const auto matrix =
            local_sensitivity(s, o.parameters, o.rel_step, output_grid(s, o), execution(o));
        write_file(o.out_path, write_sensitivity_csv(matrix));
    } else if (sweep->parsed()) {
        Scenario base;
        std::optional<std::pair<AxisSpec, AxisSpec>> axes;
        if (!o.preset_id.empty()) {
            auto preset = preset_scenario(o.preset_id);
            base = preset.scenario;
            axes = preset.axes;
        } else if (!o.scenario_path.empty()) {
            base = load_scenario(o.scenario_path);
        } else {
            throw ValidationError("sweep: give --preset or --scenario");
        }
        if (!o.axis1.empty()) axes.emplace(parse_axis(o.axis1), parse_axis(o.axis2));
        if (!axes) throw ValidationError("sweep: --axis1 and --axis2 are required for this input");
        apply_overrides(base, o);
        const auto grid = run_sweep_2d(base, axes->first, axes->second, execution(o));
        write_file(o.out_path, write_grid_csv(grid));
        if (!o.svg_path.empty()) write_file(o.svg_path, render_heatmap_svg(grid, o.metric));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
