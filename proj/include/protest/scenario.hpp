#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "protest/model.hpp"

namespace protest {

struct SolverSettings {
    double dt = 0.1;      // discrete-game time step
    double h = 0.01;      // RK4 step
    double t_max = 2000.0;
    std::size_t record_every = 10;

    friend bool operator==(const SolverSettings&, const SolverSettings&) = default;
};

void validate(const SolverSettings& settings);

struct Scenario {
    State initial;
    ModelParams params;
    PoliceSchedule schedule;
    SolverSettings settings;
    std::string label;

    /// Total protester count at t = 0.
    [[nodiscard]] double crowd_size() const noexcept { return initial.protesters(); }

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Validates every component plus initial.t == 0.
void validate(const Scenario& scenario);

enum class Termination { protesters_depleted, horizon_reached };

[[nodiscard]] const char* to_string(Termination reason) noexcept;

/// Bitmask of which branches of the dynamics are switched on.
enum RegimeBits : std::uint8_t {
    kAgitatorsActive = 1U << 0,
    kPoliceActive = 1U << 1,
    kConversionActive = 1U << 2,
    kPolicePresent = 1U << 3,
};

[[nodiscard]] std::uint8_t regime_of(const State& s, double police, const ModelParams& params) noexcept;

struct RegimeChange {
    std::size_t step = 0;
    std::uint8_t regime = 0;

    friend bool operator==(const RegimeChange&, const RegimeChange&) = default;
};

/// Recorded run. `police[i]` is the officer count in effect at samples[i].
/// `regime_changes` lists every step at which a step function or the police
/// presence switched; two runs with equal lists crossed no threshold
/// differently.
struct Trajectory {
    std::vector<State> samples;
    std::vector<double> police;
    Termination terminated_by = Termination::horizon_reached;
    std::vector<RegimeChange> regime_changes;

    [[nodiscard]] bool empty() const noexcept { return samples.empty(); }
    [[nodiscard]] const State& front() const { return samples.front(); }
    [[nodiscard]] const State& back() const { return samples.back(); }

    /// Component value at time t by linear interpolation between samples;
    /// held constant past the last sample.
    [[nodiscard]] State at(double t) const;
};

}  // namespace protest
