#pragma once

#include "eq/curve.hpp"

namespace eq {

// Thevenin battery cell: open-circuit voltage as a function of state of
// charge, a series resistance, and one parallel RC branch that captures the
// slow relaxation after a load change. Currents are charging-positive.
struct CellParams {
    double capacity_ah = 2.6;
    double r0_ohm = 0.060;
    double r1_ohm = 0.030;
    double c1_farad = 500.0;
    PiecewiseLinear ocv_curve{{{0.2, 3.4}, {0.9, 3.8}}};

    double tau_s() const { return r1_ohm * c1_farad; }
};

struct CellState {
    double soc = 0.5;
    double v_rc = 0.0;  // voltage across the RC branch, volts
};

struct StepResult {
    CellState next;
    bool clamped = false;  // state of charge hit 0 or 1 during this step
};

// Advances the cell by dt seconds under a constant current. The RC branch
// uses the exact discretization of the continuous-time solution, so splitting
// a step into smaller sub-steps gives the same trajectory.
StepResult step_cell(const CellParams& p, const CellState& s, double current_a, double dt_s);

double terminal_voltage(const CellParams& p, const CellState& s, double current_a);

// State of charge whose open-circuit voltage matches v (lowest on ties).
double soc_from_voltage(const CellParams& p, double v);

}  // namespace eq
