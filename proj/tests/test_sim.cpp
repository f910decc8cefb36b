#include "eq/sim.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace eq;

namespace {

Scenario make_scenario(std::vector<double> v_init, double duration, double dt = 0.5) {
    Scenario sc;
    sc.n = static_cast<int>(v_init.size());
    sc.cells.assign(static_cast<std::size_t>(sc.n), CellParams{});
    sc.v_init = std::move(v_init);
    sc.dt = dt;
    sc.duration_s = duration;
    return sc;
}

}  // namespace

TEST_CASE("a balanced stack at rest never activates the equalizer") {
    Scenario sc = make_scenario({3.60, 3.60, 3.60, 3.60}, 300.0);
    RunResult r = run(sc, EqualizerConfig{}, ConverterParams{});
    CHECK(r.summary.rounds == 0);
    CHECK(r.summary.total_switch_transitions == 0);
    CHECK(r.summary.energy_in_wh == 0.0);
    CHECK(r.summary.converged);
    CHECK(r.summary.convergence_time_s == 0.0);  // never left the band
    CHECK(r.summary.final_spread_v == 0.0);
}

TEST_CASE("row count covers the whole duration at the fixed step") {
    Scenario sc = make_scenario({3.60, 3.60}, 100.0);
    RunResult r = run(sc, EqualizerConfig{}, ConverterParams{});
    CHECK(r.telemetry.row_count() == 200);
    CHECK(r.telemetry.at(0, r.telemetry.col_t()) == 0.0);
    CHECK(r.telemetry.at(199, r.telemetry.col_t()) == doctest::Approx(99.5));

    sc.duration_s = 99.9;  // partial trailing step still runs
    RunResult r2 = run(sc, EqualizerConfig{}, ConverterParams{});
    CHECK(r2.telemetry.row_count() == 200);
}

TEST_CASE("two-cell imbalance is corrected while bystander cells stay untouched") {
    Scenario sc = make_scenario({3.62, 3.60, 3.60, 3.58}, 1800.0);
    RunResult r = run(sc, EqualizerConfig{}, ConverterParams{});
    const Telemetry& t = r.telemetry;

    CHECK(r.summary.rounds >= 1);
    CHECK(r.summary.converged);
    // the single round consumes the whole spread while the converter runs,
    // so no settled sample is ever out of band and the clock reads zero
    CHECK(r.summary.convergence_time_s == 0.0);
    CHECK(r.summary.final_spread_v < 0.04);

    // with no stack current, cells 2 and 3 carry nothing: their terminal
    // voltage must be bit-identical in every row
    double vb2 = t.at(0, t.col_vb(2)), vb3 = t.at(0, t.col_vb(3));
    bool only_extremes = true, bystanders_fixed = true;
    for (std::size_t row = 0; row < t.row_count(); ++row) {
        int src = static_cast<int>(t.at(row, t.col_src()));
        int snk = static_cast<int>(t.at(row, t.col_snk()));
        if (src != 0 && src != 1) only_extremes = false;
        if (snk != 0 && snk != 4) only_extremes = false;
        if (t.at(row, t.col_vb(2)) != vb2 || t.at(row, t.col_vb(3)) != vb3) {
            bystanders_fixed = false;
        }
    }
    CHECK(only_extremes);
    CHECK(bystanders_fixed);
}

TEST_CASE("energy accounting balances and the loss is the exact difference") {
    Scenario sc = make_scenario({3.65, 3.60, 3.60, 3.55}, 1800.0);
    RunResult r = run(sc, EqualizerConfig{}, ConverterParams{});
    CHECK(r.summary.energy_in_wh > 0.0);
    CHECK(r.summary.energy_out_wh > 0.0);
    CHECK(r.summary.energy_out_wh < r.summary.energy_in_wh);
    CHECK(r.summary.energy_loss_wh ==
          doctest::Approx(r.summary.energy_in_wh - r.summary.energy_out_wh).epsilon(1e-15));
    // converter efficiency band: the realized ratio stays near the curve
    double ratio = r.summary.energy_out_wh / r.summary.energy_in_wh;
    CHECK(ratio > 0.85);
    CHECK(ratio < 0.95);
}

TEST_CASE("summary can be recomputed from telemetry alone") {
    Scenario sc = make_scenario({3.63, 3.60, 3.60, 3.57}, 1200.0);
    EqualizerConfig cfg;
    RunResult r = run(sc, cfg, ConverterParams{});
    Summary again = summarize(r.telemetry, cfg);
    CHECK(again.converged == r.summary.converged);
    CHECK(again.convergence_time_s == r.summary.convergence_time_s);
    CHECK(again.rounds == r.summary.rounds);
    CHECK(again.max_switch_transitions == r.summary.max_switch_transitions);
    CHECK(again.total_switch_transitions == r.summary.total_switch_transitions);
    CHECK(again.energy_in_wh == r.summary.energy_in_wh);
    CHECK(again.final_spread_v == r.summary.final_spread_v);
}

TEST_CASE("reruns are byte-identical") {
    Scenario sc = make_scenario({3.66, 3.59, 3.61, 3.54}, 900.0);
    std::ostringstream a, b;
    write_csv(run(sc, EqualizerConfig{}, ConverterParams{}).telemetry, a);
    write_csv(run(sc, EqualizerConfig{}, ConverterParams{}).telemetry, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().substr(0, 8) == "t_s,vb_1");
}

TEST_CASE("halving the step preserves the outcome") {
    Scenario coarse = make_scenario({3.62, 3.60, 3.60, 3.58}, 1800.0, 0.5);
    Scenario fine = make_scenario({3.62, 3.60, 3.60, 3.58}, 1800.0, 0.25);
    RunResult rc = run(coarse, EqualizerConfig{}, ConverterParams{});
    RunResult rf = run(fine, EqualizerConfig{}, ConverterParams{});
    REQUIRE(rc.summary.converged);
    REQUIRE(rf.summary.converged);
    CHECK(rc.summary.rounds == rf.summary.rounds);
    CHECK(rc.summary.convergence_time_s ==
          doctest::Approx(rf.summary.convergence_time_s).epsilon(0.25));
}

TEST_CASE("skipping recovery compensation costs extra rounds") {
    Scenario sc = make_scenario({3.62, 3.60, 3.60, 3.58}, 1800.0);
    EqualizerConfig on;
    EqualizerConfig off;
    off.compensation = false;
    RunResult r_on = run(sc, on, ConverterParams{});
    RunResult r_off = run(sc, off, ConverterParams{});
    REQUIRE(r_on.summary.converged);
    CHECK(r_off.summary.rounds > r_on.summary.rounds);
    CHECK(r_off.summary.total_switch_transitions > r_on.summary.total_switch_transitions);
}

TEST_CASE("proportional charge current clamps to its limit and dies at the setpoint") {
    std::vector<double> low(4, 3.5), at(4, 4.0), above(4, 4.1);
    CHECK(cv_charge_current(4.0, low, 1.3, std::nullopt) == doctest::Approx(1.3));
    CHECK(cv_charge_current(4.0, at, 1.3, std::nullopt) == doctest::Approx(0.0));
    CHECK(cv_charge_current(4.0, above, 1.3, std::nullopt) == doctest::Approx(0.0));
    // default gain saturates at 50 mV of per-cell error
    std::vector<double> edge(4, 3.95);
    CHECK(cv_charge_current(4.0, edge, 1.3, std::nullopt) == doctest::Approx(1.3));
    std::vector<double> half(4, 3.975);
    CHECK(cv_charge_current(4.0, half, 1.3, std::nullopt) == doctest::Approx(0.65));
    // explicit gain scales linearly below the clamp
    CHECK(cv_charge_current(4.0, half, 1.3, 2.0) == doctest::Approx(0.2));
    CHECK_THROWS_AS(cv_charge_current(-1.0, low, 1.3, std::nullopt), std::invalid_argument);
}

TEST_CASE("profile segments hand over on their own end conditions") {
    Scenario sc = make_scenario({3.60, 3.60}, 100.0);
    sc.profile = {RestSeg{10.0}, CCSeg{-1.0, 20.0, std::nullopt},
                  StepSeg{{{0.0, 0.3}, {5.0, 0.7}}, 10.0}};
    ProfileRunner pr(sc);
    std::vector<double> v(2, 3.6);
    CHECK(pr.current(0.0, v) == 0.0);
    CHECK(pr.current(9.5, v) == 0.0);
    CHECK(pr.current(10.0, v) == doctest::Approx(-1.0));
    CHECK(pr.current(29.5, v) == doctest::Approx(-1.0));
    CHECK(pr.current(30.0, v) == doctest::Approx(0.3));
    CHECK(pr.current(35.0, v) == doctest::Approx(0.7));
    CHECK(pr.current(40.0, v) == 0.0);  // profile exhausted
    CHECK(pr.current(99.0, v) == 0.0);
}

TEST_CASE("constant-current segment stops at its voltage limit") {
    Scenario sc = make_scenario({3.60, 3.60}, 100.0);
    sc.profile = {CCSeg{1.0, std::nullopt, 3.8}};
    ProfileRunner pr(sc);
    std::vector<double> below{3.7, 3.75}, hit{3.7, 3.80};
    CHECK(pr.current(0.0, below) == doctest::Approx(1.0));
    CHECK(pr.current(1.0, hit) == 0.0);  // limit reached, segment retires
}

TEST_CASE("validation failures name the offending config key") {
    EqualizerConfig cfg;
    Scenario sc = make_scenario({3.6, 3.6}, 100.0);

    Scenario bad_dt = sc;
    bad_dt.dt = 5.0;  // min(time_gap, delta_t)/10 = 2
    CHECK_THROWS_WITH_AS(validate(bad_dt, cfg), doctest::Contains("[sim].dt"),
                         std::invalid_argument);

    EqualizerConfig bad_round = cfg;
    bad_round.max_round_duration = 10.0;
    CHECK_THROWS_WITH_AS(validate(sc, bad_round),
                         doctest::Contains("[equalizer].max_round_duration"),
                         std::invalid_argument);

    Scenario bad_vinit = sc;
    bad_vinit.v_init.pop_back();
    CHECK_THROWS_WITH_AS(validate(bad_vinit, cfg), doctest::Contains("[cells].v_init"),
                         std::invalid_argument);

    Scenario tiny = sc;
    tiny.n = 1;
    CHECK_THROWS_WITH_AS(validate(tiny, cfg), doctest::Contains("[stack].n"),
                         std::invalid_argument);

    Scenario bad_step = sc;
    bad_step.profile = {StepSeg{{{5.0, 0.1}, {5.0, 0.2}}, std::nullopt}};
    CHECK_THROWS_AS(validate(bad_step, cfg), std::invalid_argument);
}
