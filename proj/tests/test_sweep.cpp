#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>

#include "protest/errors.hpp"
#include "protest/presets.hpp"
#include "protest/sweep.hpp"

using namespace protest;

namespace {

// Coarse slice of the heat-map grid, cheap enough for unit tests.
SweepGrid coarse_heatmap(const std::string& id, Execution exec = Execution::parallel()) {
    const auto preset = preset_scenario(id);
    return run_sweep_2d(preset.scenario, AxisSpec::range(AxisTarget::tau_c, 0.0, 1.0, 10.0),
                        AxisSpec::range(AxisTarget::v_c, 0.0, 1.5, 15.0), exec);
}

std::size_t count_police_cells(const SweepGrid& grid) {
    return static_cast<std::size_t>(std::count_if(grid.cells.begin(), grid.cells.end(),
                                                  [](const CellMetrics& c) {
                                                      return c.total_police_aofa > 0.0;
                                                  }));
}

}  // namespace

TEST_CASE("axis ranges") {
    const auto axis = AxisSpec::range(AxisTarget::v_c, 0.0, 0.25, 15.0);
    REQUIRE(axis.values.size() == 61);
    CHECK(axis.values.front() == 0.0);
    CHECK(axis.values.back() == 15.0);
    CHECK(axis.values[3] == 0.75);

    CHECK_THROWS_AS(validate(AxisSpec{AxisTarget::v_c, {}}), ValidationError);
    CHECK_THROWS_AS(validate(AxisSpec{AxisTarget::v_c, {1.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(validate(AxisSpec{AxisTarget::v_c, {-1.0, 1.0}}), ValidationError);
    CHECK(axis_target_from_string("entrance_time") == AxisTarget::entrance_time);
    CHECK_THROWS_AS((void)axis_target_from_string("bogus"), ValidationError);
}

TEST_CASE("apply_axis keeps the crowd size") {
    const Scenario base = preset_scenario("entrance-T1-0.1").scenario;
    const Scenario s = apply_axis(base, AxisTarget::initial_agitators, 120.0);
    CHECK(s.initial.u1 == 120.0);
    CHECK(s.initial.u1 + s.initial.u2 == base.crowd_size());
    CHECK(apply_axis(base, AxisTarget::entrance_time, 7.0).schedule.t_enter == 7.0);
    CHECK_THROWS_AS((void)apply_axis(base, AxisTarget::initial_agitators, 501.0), ValidationError);
}

TEST_CASE("grid shape and row-major layout") {
    Scenario base = preset_scenario("heatmap-A20").scenario;
    base.settings.t_max = 50.0;
    const AxisSpec a1{AxisTarget::tau_c, {0.0, 3.0, 6.0}};
    const AxisSpec a2{AxisTarget::v_c, {0.0, 1.0, 2.0, 4.0}};
    const auto grid = run_sweep_2d(base, a1, a2);
    REQUIRE(grid.cells.size() == 12);
    CHECK(grid.rows() == 3);
    CHECK(grid.cols() == 4);
    Scenario probe = apply_axis(apply_axis(base, AxisTarget::tau_c, 3.0), AxisTarget::v_c, 2.0);
    CHECK(grid.at(1, 2) == evaluate_cell(probe));
}

TEST_CASE("sweep rejects duplicate targets and oversized agitator counts") {
    const Scenario base = preset_scenario("heatmap-A20").scenario;
    const AxisSpec a{AxisTarget::v_c, {0.0, 1.0}};
    CHECK_THROWS_AS((void)run_sweep_2d(base, a, a), ValidationError);
    const AxisSpec agitators{AxisTarget::initial_agitators, {0.0, 600.0}};
    CHECK_THROWS_AS((void)run_sweep_2d(base, agitators, a), ValidationError);
}

TEST_CASE("cell metrics") {
    const Scenario s = preset_scenario("cs1i").scenario;
    const auto cell = evaluate_cell(s);
    CHECK(cell.total_police_aofa == 0.0);
    CHECK(cell.total_protester_aofa == 0.0);
    CHECK(cell.peak_agitators == 0.0);
    CHECK(cell.productive);
    CHECK(cell.duration > 0.0);
    CHECK(cell.duration < s.settings.t_max);
}

TEST_CASE("tension threshold above the initial tension silences both sides") {
    const auto grid = coarse_heatmap("heatmap-A20");
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        if (grid.axis1.values[i] <= 5.0) continue;
        for (std::size_t j = 0; j < grid.cols(); ++j) {
            const auto& c = grid.at(i, j);
            if (grid.axis2.values[j] > 0.0) {
                CHECK(c.total_protester_aofa == 0.0);
                CHECK(c.total_police_aofa == 0.0);
            } else {
                CHECK(c.total_police_aofa > 0.0);
            }
        }
    }
}

TEST_CASE("more agitators never shrink the police-aggression region") {
    const auto a20 = count_police_cells(coarse_heatmap("heatmap-A20"));
    const auto a40 = count_police_cells(coarse_heatmap("heatmap-A40"));
    const auto a50 = count_police_cells(coarse_heatmap("heatmap-A50"));
    CHECK(a20 <= a40);
    CHECK(a40 <= a50);
}

TEST_CASE("phase boundary") {
    SUBCASE("uniform grid has none") {
        SweepGrid grid;
        grid.axis1 = {AxisTarget::tau_c, {0.0, 1.0, 2.0}};
        grid.axis2 = {AxisTarget::v_c, {0.0, 1.0}};
        grid.cells.assign(6, CellMetrics{3.0, 3.0, 1.0, 10.0, false});
        CHECK(detect_phase_boundary(grid, Metric::police).empty());
    }
    SUBCASE("single step column") {
        SweepGrid grid;
        grid.axis1 = {AxisTarget::tau_c, {0.0, 1.0}};
        grid.axis2 = {AxisTarget::v_c, {0.0, 1.0, 2.0}};
        grid.cells.assign(6, CellMetrics{});
        grid.cells[0].total_police_aofa = 5.0;  // (0, 0)
        grid.cells[3].total_police_aofa = 5.0;  // (1, 0)
        const auto pairs = detect_phase_boundary(grid, Metric::police);
        REQUIRE(pairs.size() == 2);
        CHECK(pairs[0] == BoundaryPair{{0, 0}, {0, 1}});
        CHECK(pairs[1] == BoundaryPair{{1, 0}, {1, 1}});
    }
}

TEST_CASE("parallel sweeps match the serial reference exactly") {
    const auto serial = coarse_heatmap("heatmap-A40", Execution::serial());
    CHECK(coarse_heatmap("heatmap-A40", Execution::parallel(1)) == serial);
    CHECK(coarse_heatmap("heatmap-A40", Execution::parallel(4)) == serial);

    // cells are independent of the order they are visited in
    const auto base = preset_scenario("heatmap-A40").scenario;
    std::vector<std::size_t> order(serial.cells.size());
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    for (std::size_t k : order) {
        const std::size_t i = k / serial.cols();
        const std::size_t j = k % serial.cols();
        const Scenario s = apply_axis(apply_axis(base, AxisTarget::tau_c, serial.axis1.values[i]),
                                      AxisTarget::v_c, serial.axis2.values[j]);
        CHECK(evaluate_cell(s) == serial.cells[k]);
    }
}

TEST_CASE("later police entry lets aggression build up first") {
    Scenario base = preset_scenario("entrance-T1-0.1").scenario;
    base.params.v_c = 0.0;
    double previous = -1.0;
    for (double entry : {0.0, 10.0, 20.0, 40.0}) {
        const auto cell = evaluate_cell(apply_axis(base, AxisTarget::entrance_time, entry));
        CHECK(cell.total_protester_aofa >= previous);
        previous = cell.total_protester_aofa;
    }
}

TEST_CASE("presets") {
    const auto cs = preset_scenario("cs1ii");
    CHECK(cs.scenario.initial.u2 == 500.0);
    CHECK(cs.scenario.initial.v2 == 1.0);
    CHECK(cs.scenario.schedule.p0 == 100.0);
    CHECK_FALSE(cs.axes.has_value());

    const auto heat = preset_scenario("heatmap-A20");
    CHECK(heat.scenario.initial.u1 == 100.0);
    CHECK(heat.scenario.initial.u2 == 400.0);
    REQUIRE(heat.axes.has_value());
    CHECK(heat.axes->first.target == AxisTarget::tau_c);
    CHECK(heat.axes->second.values.size() == 61);

    CHECK_THROWS_WITH_AS((void)preset_scenario("bogus"), doctest::Contains("cs1i"),
                         ValidationError);
    for (auto id : preset_ids()) CHECK_NOTHROW(validate(preset_scenario(id).scenario));
}
