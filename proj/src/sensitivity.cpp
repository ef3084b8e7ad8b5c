#include "protest/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "protest/errors.hpp"
#include "protest/ode.hpp"

namespace protest {

const char* to_string(Output output) noexcept {
    switch (output) {
        case Output::v1: return "v1";
        case Output::v2: return "v2";
        case Output::u1: return "u1";
        case Output::u2: return "u2";
        case Output::tau: return "tau";
    }
    return "unknown";
}

double component(const State& s, Output output) noexcept {
    switch (output) {
        case Output::v1: return s.v1;
        case Output::v2: return s.v2;
        case Output::u1: return s.u1;
        case Output::u2: return s.u2;
        case Output::tau: return s.tau;
    }
    return 0.0;
}

ParamRanges ParamRanges::defaults() {
    return {{{"T1", 0.001, 0.2},
             {"T2", 0.0001, 0.01},
             {"theta", 0.01, 0.08},
             {"v_c", 0.0, 10.0},
             {"tau_c", 0.0, 10.0}}};
}

ParamRanges& ParamRanges::set(std::string_view name, double min, double max) {
    for (auto& e : entries) {
        if (e.name == name) {
            e.min = min;
            e.max = max;
            return *this;
        }
    }
    entries.push_back({std::string(name), min, max});
    return *this;
}

void validate(const ParamRanges& ranges) {
    if (ranges.entries.empty()) throw ValidationError("parameter ranges are empty");
    ModelParams probe;
    for (const auto& e : ranges.entries) {
        if (param_field(probe, e.name) == nullptr) {
            throw ValidationError("unknown parameter '" + e.name + "' in ranges");
        }
        if (!std::isfinite(e.min) || !std::isfinite(e.max) || e.min < 0.0) {
            throw ValidationError("range for " + e.name + " must be finite and nonnegative");
        }
        if (e.min > e.max) throw ValidationError("range for " + e.name + " is empty (min > max)");
    }
}

std::vector<ModelParams> sample_params(const ModelParams& base, const ParamRanges& ranges,
                                       std::size_t n, std::uint64_t seed) {
    validate(ranges);
    if (n == 0) throw ValidationError("draw count must be >= 1");

    // Top 53 bits of mt19937_64 map to [0, 1) identically on every platform,
    // unlike std::uniform_real_distribution.
    std::mt19937_64 engine(seed);
    auto unit = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

    std::vector<ModelParams> draws(n, base);
    for (auto& p : draws) {
        for (const auto& e : ranges.entries) {
            *param_field(p, e.name) = e.min + unit() * (e.max - e.min);
        }
    }
    return draws;
}

std::vector<double> uniform_grid(double t_end, double step) {
    if (!(step > 0.0) || !(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw ValidationError("time grid needs t_end >= 0 and step > 0");
    }
    const auto count = static_cast<std::size_t>(std::floor(t_end / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t k = 0; k < count; ++k) grid[k] = static_cast<double>(k) * step;
    return grid;
}

PointStats point_stats(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    double sum = 0.0;
    for (double v : values) sum += v;
    double mean = sum / static_cast<double>(n);
    // Rounding can push the mean of identical values off by an ulp.
    mean = std::clamp(mean, sorted.front(), sorted.back());

    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;

    auto quantile = [&sorted, n](double q) {
        const double pos = q * static_cast<double>(n - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, n - 1);
        const double frac = pos - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
    };
    return {sorted.front(), sorted.back(), mean, sd, quantile(0.05), quantile(0.95)};
}

EnvelopeSummary global_envelopes(const Scenario& base, const ParamRanges& ranges, std::size_t n,
                                 std::uint64_t seed, std::span<const double> times,
                                 Execution exec) {
    if (n < 2) throw ValidationError("global envelopes need at least 2 draws");
    if (times.empty()) throw ValidationError("global envelopes need a non-empty time grid");
    const auto draws = sample_params(base.params, ranges, n, seed);
    const std::size_t points = times.size();
    constexpr std::size_t kOutputs = kAllOutputs.size();

    // values[(draw * points + k) * kOutputs + output]
    std::vector<double> values(n * points * kOutputs);
    for_each_index(n, exec, [&](std::size_t d) {
        Scenario scenario = base;
        scenario.params = draws[d];
        Trajectory run;
        try {
            run = integrate(scenario);
        } catch (const NumericalError& e) {
            throw NumericalError("draw " + std::to_string(d) + ": " + e.what());
        }
        for (std::size_t k = 0; k < points; ++k) {
            const State s = run.at(times[k]);
            for (auto o : kAllOutputs) {
                values[(d * points + k) * kOutputs + static_cast<std::size_t>(o)] = component(s, o);
            }
        }
    });

    EnvelopeSummary summary;
    summary.times.assign(times.begin(), times.end());
    summary.draws = n;
    summary.seed = seed;
    for (auto& band : summary.bands) {
        for (auto* v : {&band.min, &band.max, &band.mean, &band.sd, &band.q05, &band.q95}) {
            v->resize(points);
        }
    }
    for_each_index(points * kOutputs, exec, [&](std::size_t idx) {
        const std::size_t k = idx / kOutputs;
        const std::size_t o = idx % kOutputs;
        std::vector<double> column(n);
        for (std::size_t d = 0; d < n; ++d) column[d] = values[(d * points + k) * kOutputs + o];
        const PointStats st = point_stats(column);
        auto& band = summary.bands[o];
        band.min[k] = st.min;
        band.max[k] = st.max;
        band.mean[k] = st.mean;
        band.sd[k] = st.sd;
        band.q05[k] = st.q05;
        band.q95[k] = st.q95;
    });
    return summary;
}

const SensitivityColumn& SensitivityMatrix::column(Output output,
                                                   std::string_view parameter) const {
    for (const auto& c : columns) {
        if (c.output == output && c.parameter == parameter) return c;
    }
    throw ValidationError("no sensitivity column for " + std::string(to_string(output)) + "/" +
                          std::string(parameter));
}

SensitivityMatrix local_sensitivity(const Scenario& base, std::span<const std::string> parameters,
                                    double rel_step, std::span<const double> times,
                                    Execution exec) {
    if (!(rel_step > 0.0) || !std::isfinite(rel_step)) {
        throw ValidationError("rel_step must be > 0");
    }
    if (parameters.empty()) throw ValidationError("no parameters given for local sensitivity");
    if (times.empty()) throw ValidationError("local sensitivity needs a non-empty time grid");

    std::vector<double> steps(parameters.size());
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        const double value = param_value(base.params, parameters[i]);
        steps[i] = rel_step * std::max(std::abs(value), 1e-8);
    }

    // Run 2i is the +step perturbation of parameter i, run 2i + 1 the -step.
    const Trajectory reference = integrate(base);
    std::vector<Trajectory> runs(2 * parameters.size());
    for_each_index(runs.size(), exec, [&](std::size_t r) {
        Scenario s = base;
        const std::size_t i = r / 2;
        *param_field(s.params, parameters[i]) += (r % 2 == 0 ? steps[i] : -steps[i]);
        runs[r] = integrate(s);
    });

    SensitivityMatrix out;
    out.times.assign(times.begin(), times.end());
    out.parameters.assign(parameters.begin(), parameters.end());
    for (std::size_t i = 0; i < parameters.size(); ++i) {
        const Trajectory& plus = runs[2 * i];
        const Trajectory& minus = runs[2 * i + 1];
        const bool flagged = plus.regime_changes != minus.regime_changes;
        const double value = param_value(base.params, parameters[i]);
        for (auto o : kAllOutputs) {
            SensitivityColumn col{o, parameters[i], {}, {}, flagged};
            col.raw.reserve(times.size());
            col.scaled.reserve(times.size());
            for (double t : times) {
                const double d =
                    (component(plus.at(t), o) - component(minus.at(t), o)) / (2.0 * steps[i]);
                const double scale = std::max(std::abs(component(reference.at(t), o)), 1.0);
                col.raw.push_back(d);
                col.scaled.push_back(d * value / scale);
            }
            out.columns.push_back(std::move(col));
        }
    }
    return out;
}

std::vector<std::pair<std::string, double>> rank_parameters(const SensitivityMatrix& matrix) {
    std::vector<std::pair<std::string, double>> ranking;
    for (const auto& name : matrix.parameters) {
        double ss = 0.0;
        std::size_t count = 0;
        for (const auto& col : matrix.columns) {
            if (col.parameter != name) continue;
            for (double x : col.scaled) ss += x * x;
            count += col.scaled.size();
        }
        ranking.emplace_back(name, count ? std::sqrt(ss / static_cast<double>(count)) : 0.0);
    }
    std::stable_sort(ranking.begin(), ranking.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return ranking;
}

}  // namespace protest
