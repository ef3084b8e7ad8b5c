#pragma once

// Test-only generators and helpers.

#include <algorithm>
#include <cmath>
#include <random>

#include "protest/scenario.hpp"

namespace protest::testing {

/// Uniform draw from the global-sensitivity box (independent of
/// sample_params so generator bugs cannot mask each other).
inline ModelParams random_table_params(std::mt19937_64& rng, ModelParams base) {
    auto u = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    base.T1 = u(0.001, 0.2);
    base.T2 = u(0.0001, 0.01);
    base.theta = u(0.01, 0.08);
    base.v_c = u(0.0, 10.0);
    base.tau_c = u(0.0, 10.0);
    return base;
}

/// Scenario with tau(0) < tau_c, no AofA yet, v_c in [0.1, 10]; the
/// population and police are arbitrary.
inline Scenario random_quiet_scenario(std::mt19937_64& rng) {
    auto u = [&rng](double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    };
    Scenario s;
    s.params.T3 = 0.1;
    s.params.tau_f3 = u(0.0, 6.0);
    s.params.omega = u(0.005, 0.05);
    s.params.epsilon = u(0.01, 0.05);
    s.params = random_table_params(rng, s.params);
    s.params.v_c = u(0.1, 10.0);
    s.params.tau_c = u(0.1, 10.0);
    s.initial.tau = u(0.0, s.params.tau_c * (1.0 - 1e-9));
    s.initial.u1 = std::floor(u(0.0, 300.0));
    s.initial.u2 = std::floor(u(0.0, 500.0));
    s.schedule = {std::floor(u(0.0, 200.0)), u(0.0, 20.0), 1.0};
    return s;
}

inline double max_norm_distance(const State& a, const State& b) {
    return std::max({std::abs(a.v1 - b.v1), std::abs(a.v2 - b.v2), std::abs(a.u1 - b.u1),
                     std::abs(a.u2 - b.u2), std::abs(a.tau - b.tau)});
}

}  // namespace protest::testing
