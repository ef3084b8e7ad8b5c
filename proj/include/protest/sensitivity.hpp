#pragma once

// Monte Carlo range envelopes and finite-difference sensitivity functions
// over the five state outputs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "protest/parallel.hpp"
#include "protest/scenario.hpp"

namespace protest {

enum class Output : std::size_t { v1 = 0, v2, u1, u2, tau };

inline constexpr std::array<Output, 5> kAllOutputs = {Output::v1, Output::v2, Output::u1,
                                                      Output::u2, Output::tau};

[[nodiscard]] const char* to_string(Output output) noexcept;
[[nodiscard]] double component(const State& s, Output output) noexcept;

struct ParamRange {
    std::string name;
    double min = 0.0;
    double max = 0.0;
};

struct ParamRanges {
    std::vector<ParamRange> entries;

    /// T1 [0.001, 0.2], T2 [1e-4, 0.01], theta [0.01, 0.08],
    /// v_c [0, 10], tau_c [0, 10].
    [[nodiscard]] static ParamRanges defaults();

    /// Replaces the interval of an existing entry (or appends one).
    ParamRanges& set(std::string_view name, double min, double max);
};

/// Throws ValidationError on an empty list, unknown names, min > max or
/// negative/non-finite bounds.
void validate(const ParamRanges& ranges);

/// n independent uniform draws per ranged parameter, overlaid on `base`.
/// Draw k consumes one 64-bit variate per entry in entry order, so the list
/// is fully determined by (base, ranges, n, seed).
[[nodiscard]] std::vector<ModelParams> sample_params(const ModelParams& base,
                                                     const ParamRanges& ranges, std::size_t n,
                                                     std::uint64_t seed);

/// Evenly spaced grid 0, step, 2 step, ... up to and including t_end.
[[nodiscard]] std::vector<double> uniform_grid(double t_end, double step);

struct EnvelopeBand {
    std::vector<double> min, max, mean, sd, q05, q95;
};

struct EnvelopeSummary {
    std::vector<double> times;
    std::array<EnvelopeBand, 5> bands;  // indexed by Output
    std::size_t draws = 0;
    std::uint64_t seed = 0;

    [[nodiscard]] const EnvelopeBand& band(Output o) const noexcept {
        return bands[static_cast<std::size_t>(o)];
    }
};

/// Integrates the ODE once per parameter draw and reduces the trajectories
/// pointwise on `times`. Runs that end early are held at their final state.
/// Quantiles use linear interpolation between order statistics; sd is the
/// n - 1 sample deviation.
[[nodiscard]] EnvelopeSummary global_envelopes(const Scenario& base, const ParamRanges& ranges,
                                               std::size_t n, std::uint64_t seed,
                                               std::span<const double> times,
                                               Execution exec = Execution::parallel());

/// Pointwise statistics for one (time, output) cell; exposed for tests.
struct PointStats {
    double min, max, mean, sd, q05, q95;
};
[[nodiscard]] PointStats point_stats(std::span<const double> values);

struct SensitivityColumn {
    Output output = Output::v1;
    std::string parameter;
    std::vector<double> raw;     // d output / d parameter
    std::vector<double> scaled;  // raw * parameter / max(|output|, 1)
    bool flagged = false;        // perturbed runs switched regimes differently
};

struct SensitivityMatrix {
    std::vector<double> times;
    std::vector<std::string> parameters;
    std::vector<SensitivityColumn> columns;  // parameter-major, then output

    [[nodiscard]] const SensitivityColumn& column(Output output, std::string_view parameter) const;
};

/// Central differences (y(p + d) - y(p - d)) / (2 d) with
/// d = rel_step * max(|p|, 1e-8), for every output and named parameter.
[[nodiscard]] SensitivityMatrix local_sensitivity(const Scenario& base,
                                                  std::span<const std::string> parameters,
                                                  double rel_step, std::span<const double> times,
                                                  Execution exec = Execution::parallel());

/// Parameters ordered by the root-mean-square of their scaled sensitivities
/// over all outputs and times, largest first.
[[nodiscard]] std::vector<std::pair<std::string, double>> rank_parameters(
    const SensitivityMatrix& matrix);

}  // namespace protest
