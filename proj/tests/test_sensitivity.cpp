#include <doctest.h>

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "protest/errors.hpp"
#include "protest/ode.hpp"
#include "protest/presets.hpp"
#include "protest/sensitivity.hpp"

using namespace protest;

namespace {

// Smooth scenario: every branch is switched on from t = 0 and stays on,
// so finite differences never straddle a threshold.
Scenario smooth_scenario() {
    Scenario s = preset_scenario("cs1ii").scenario;
    s.initial.u1 = 50.0;
    s.initial.u2 = 450.0;
    s.initial.tau = 4.0;
    s.params.tau_c = 0.0;
    s.params.v_c = 0.0;
    s.params.tau_f3 = 2.0;
    s.settings.t_max = 100.0;
    return s;
}

}  // namespace

TEST_CASE("sample_params") {
    const auto ranges = ParamRanges::defaults();
    const ModelParams base = preset_scenario("cs2i").scenario.params;

    SUBCASE("deterministic given the seed") {
        CHECK(sample_params(base, ranges, 50, 7) == sample_params(base, ranges, 50, 7));
        CHECK_FALSE(sample_params(base, ranges, 50, 7) == sample_params(base, ranges, 50, 8));
    }
    SUBCASE("draws stay inside the box and keep unswept fields") {
        for (const auto& p : sample_params(base, ranges, 500, 3)) {
            CHECK((p.T1 >= 0.001 && p.T1 <= 0.2));
            CHECK((p.T2 >= 0.0001 && p.T2 <= 0.01));
            CHECK((p.theta >= 0.01 && p.theta <= 0.08));
            CHECK((p.v_c >= 0.0 && p.v_c <= 10.0));
            CHECK((p.tau_c >= 0.0 && p.tau_c <= 10.0));
            CHECK(p.epsilon == base.epsilon);
            CHECK(p.omega == base.omega);
            CHECK(p.tau_f3 == base.tau_f3);
        }
    }
    SUBCASE("uniform mean") {
        constexpr std::size_t n = 10000;
        const auto draws = sample_params(base, ranges, n, 42);
        double mean = 0.0;
        for (const auto& p : draws) mean += p.T1 / n;
        const double sd = (0.2 - 0.001) / std::sqrt(12.0);
        CHECK(std::abs(mean - 0.1005) <= 3.0 * sd / std::sqrt(double(n)));
    }
    SUBCASE("rejects bad ranges") {
        CHECK_THROWS_AS((void)sample_params(base, ParamRanges{}, 5, 0), ValidationError);
        auto bad = ranges;
        bad.set("T1", 0.3, 0.2);
        CHECK_THROWS_AS((void)sample_params(base, bad, 5, 0), ValidationError);
        CHECK_THROWS_AS((void)sample_params(base, ParamRanges{{{"bogus", 0, 1}}}, 5, 0),
                        ValidationError);
        CHECK_THROWS_AS((void)sample_params(base, ranges, 0, 0), ValidationError);
    }
}

TEST_CASE("point statistics") {
    const std::vector<double> same = {3.25, 3.25};
    const auto s = point_stats(same);
    CHECK(s.min == 3.25);
    CHECK(s.max == 3.25);
    CHECK(s.mean == 3.25);
    CHECK(s.sd == 0.0);

    std::vector<double> ramp(101);
    std::iota(ramp.begin(), ramp.end(), 0.0);
    const auto r = point_stats(ramp);
    CHECK(r.q05 == doctest::Approx(5.0));
    CHECK(r.q95 == doctest::Approx(95.0));
    CHECK(r.mean == doctest::Approx(50.0));
    // sample variance of 0..100 is 101 * 102 / 12
    CHECK(r.sd == doctest::Approx(std::sqrt(858.5)).epsilon(1e-12));
}

TEST_CASE("global envelopes") {
    const auto grid = uniform_grid(400.0, 5.0);

    SUBCASE("homogeneous moderates without police AofA show no spread") {
        auto ranges = ParamRanges::defaults();
        ranges.set("v_c", 0.1, 10.0);
        const auto summary =
            global_envelopes(preset_scenario("cs1i").scenario, ranges, 50, 1, grid);
        for (auto o : kAllOutputs) {
            const auto& b = summary.band(o);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                CHECK(b.min[k] == b.max[k]);
                CHECK(b.sd[k] == 0.0);
            }
        }
        CHECK(summary.band(Output::v1).max.back() == 0.0);
        CHECK(summary.band(Output::v2).max.back() == 0.0);
    }
    SUBCASE("police AofA never decreases on average") {
        const auto summary = global_envelopes(preset_scenario("cs1ii").scenario,
                                              ParamRanges::defaults(), 60, 2, grid);
        const auto& mean = summary.band(Output::v2).mean;
        for (std::size_t k = 1; k < mean.size(); ++k) CHECK(mean[k] >= mean[k - 1]);
        CHECK(mean.front() == 1.0);
    }
    SUBCASE("ordering invariant") {
        const auto summary = global_envelopes(preset_scenario("cs2ii").scenario,
                                              ParamRanges::defaults(), 40, 3, grid);
        for (auto o : kAllOutputs) {
            const auto& b = summary.band(o);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                CHECK(b.min[k] <= b.q05[k]);
                CHECK(b.q05[k] <= b.q95[k]);
                CHECK(b.q95[k] <= b.max[k]);
                CHECK(b.min[k] <= b.mean[k]);
                CHECK(b.mean[k] <= b.max[k]);
                CHECK(b.sd[k] >= 0.0);
            }
        }
    }
    SUBCASE("identical draws collapse") {
        auto ranges = ParamRanges::defaults();
        for (auto& e : ranges.entries) e.max = e.min;
        const auto summary = global_envelopes(preset_scenario("cs2i").scenario, ranges, 2, 0, grid);
        for (auto o : kAllOutputs) {
            const auto& b = summary.band(o);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                CHECK(b.min[k] == b.max[k]);
                CHECK(b.mean[k] == b.min[k]);
                CHECK(b.sd[k] == 0.0);
            }
        }
    }
    SUBCASE("needs two draws") {
        CHECK_THROWS_AS((void)global_envelopes(preset_scenario("cs2i").scenario,
                                               ParamRanges::defaults(), 1, 0, grid),
                        ValidationError);
    }
}

TEST_CASE("local sensitivity: inert parameters give exact zeros") {
    const std::vector<std::string> names = {"T1", "T2", "theta", "tau_c", "v_c"};
    const auto grid = uniform_grid(300.0, 1.0);
    const auto m = local_sensitivity(preset_scenario("cs1i").scenario, names, 1e-4, grid);
    for (auto o : kAllOutputs) {
        for (double x : m.column(o, "T2").raw) CHECK(x == 0.0);
        for (double x : m.column(o, "T1").raw) CHECK(x == 0.0);
    }
}

TEST_CASE("local sensitivity against a forward-difference oracle") {
    const Scenario base = smooth_scenario();
    const std::vector<std::string> names = {"T1", "T2", "theta", "epsilon"};
    const auto grid = uniform_grid(100.0, 5.0);
    const auto m = local_sensitivity(base, names, 1e-4, grid);

    const auto reference = integrate(base);
    for (const auto& x : reference.samples) REQUIRE(x.tau > base.params.tau_f3);

    for (const auto& name : names) {
        Scenario bumped = base;
        const double step = 1e-5 * param_value(base.params, name);
        *param_field(bumped.params, name) += step;
        const auto forward = integrate(bumped);
        for (auto o : kAllOutputs) {
            const auto& col = m.column(o, name);
            CHECK_FALSE(col.flagged);
            double largest = 0.0;
            for (double x : col.raw) largest = std::max(largest, std::abs(x));
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const double oracle =
                    (component(forward.at(grid[k]), o) - component(reference.at(grid[k]), o)) / step;
                if (std::abs(oracle) <= 1e-6 * largest) continue;
                CHECK(std::abs(col.raw[k] - oracle) <= 1e-3 * std::abs(oracle));
            }
        }
    }
}

TEST_CASE("local sensitivity: halving the step changes smooth entries at second order") {
    const Scenario base = smooth_scenario();
    const std::vector<std::string> names = {"T1", "theta"};
    const auto grid = uniform_grid(100.0, 10.0);
    const auto coarse = local_sensitivity(base, names, 1e-2, grid);
    const auto fine = local_sensitivity(base, names, 5e-3, grid);
    const auto finer = local_sensitivity(base, names, 2.5e-3, grid);
    for (const auto& name : names) {
        for (auto o : kAllOutputs) {
            const auto& a = coarse.column(o, name).raw;
            const auto& b = fine.column(o, name).raw;
            const auto& c = finer.column(o, name).raw;
            for (std::size_t k = 1; k < grid.size(); ++k) {
                const double d1 = std::abs(a[k] - b[k]);
                const double d2 = std::abs(b[k] - c[k]);
                if (d1 < 1e-9 * std::max(std::abs(a[k]), 1.0)) continue;
                // O(step^2): each halving cuts the change by about 4
                CHECK(d1 / d2 > 3.0);
            }
        }
    }
}

TEST_CASE("local sensitivity flags threshold crossings") {
    Scenario s = preset_scenario("cs2i").scenario;
    s.params.tau_c = 0.0;
    s.params.v_c = 2.0;
    const std::vector<std::string> names = {"v_c"};
    const auto m = local_sensitivity(s, names, 1e-3, uniform_grid(50.0, 1.0));
    CHECK(m.column(Output::v2, "v_c").flagged);
}

TEST_CASE("local sensitivity: aggression counts react most to the intensities") {
    Scenario s = preset_scenario("cs1ii").scenario;
    s.params.tau_c = 0.0;
    s.params.v_c = 0.0;
    const std::vector<std::string> names = {"T1", "T2", "theta"};
    const auto m = local_sensitivity(s, names, 1e-4, uniform_grid(200.0, 2.0));
    const auto ranking = rank_parameters(m);
    REQUIRE(ranking.size() == 3);
    CHECK(ranking[2].first == "theta");
}

TEST_CASE("local sensitivity rejects bad input") {
    const Scenario s = preset_scenario("cs2i").scenario;
    const std::vector<std::string> names = {"T1"};
    const auto grid = uniform_grid(10.0, 1.0);
    CHECK_THROWS_AS((void)local_sensitivity(s, names, 0.0, grid), ValidationError);
    const std::vector<std::string> bogus = {"bogus"};
    CHECK_THROWS_AS((void)local_sensitivity(s, bogus, 1e-4, grid), ValidationError);
}
