#pragma once

#include "eq/cell.hpp"
#include "eq/controller.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace eq {

// Stack load profile segments. Currents are charging-positive and flow
// through every cell in the series stack.
struct RestSeg {
    double duration_s = 0;
};

// Runs until its duration elapses or a cell hits the voltage limit: the
// highest cell when charging, the lowest when discharging.
struct CCSeg {
    double current_a = 0;
    std::optional<double> duration_s;
    std::optional<double> v_limit;
};

// Per-cell voltage setpoint regulated through proportional feedback on the
// stack sum; ends when the commanded current falls to the cutoff.
struct CVSeg {
    double v_set = 4.0;
    double i_limit = 1.3;
    double i_cutoff = 0.065;
    std::optional<double> gain;  // amperes per volt of stack error
};

// Piecewise-constant schedule of (time offset, current); holds the last
// value until the segment duration elapses.
struct StepSeg {
    std::vector<std::pair<double, double>> points;
    std::optional<double> duration_s;  // defaults to the rest of the run
};

using Segment = std::variant<RestSeg, CCSeg, CVSeg, StepSeg>;

struct Scenario {
    int n = 8;
    std::vector<CellParams> cells;  // size n
    std::vector<double> v_init;     // resting terminal voltages, inverted through OCV
    std::vector<Segment> profile;
    double dt = 0.5;
    double duration_s = 3600;
    long seed = 0;  // recorded for reproducibility; scenarios are deterministic
};

// Proportional CV charging current: gain * (n*v_set - sum(v)), clamped to
// [0, i_limit]. The default gain reaches the limit at 50 mV/cell of error.
double cv_charge_current(double v_set, const std::vector<double>& cell_v, double i_limit,
                         std::optional<double> gain);

// Stack-current evaluator that walks the profile segments in order, applying
// each segment's own end condition.
class ProfileRunner {
public:
    explicit ProfileRunner(const Scenario& sc);

    // Current for the step starting at time t, given measured voltages.
    double current(double t, const std::vector<double>& cell_v);

private:
    const Scenario& sc_;
    std::size_t idx_ = 0;
    double seg_start_ = 0;
};

// Throws std::invalid_argument naming the problem when the scenario violates
// its structural constraints (cell count mismatches, dt too coarse for the
// controller's timing, non-positive durations).
void validate(const Scenario& sc, const EqualizerConfig& cfg);

}  // namespace eq
