#pragma once

#include "eq/converter.hpp"
#include "eq/scenario.hpp"
#include "eq/telemetry.hpp"

namespace eq {

struct Summary {
    bool converged = false;
    double convergence_time_s = 0;  // 0 when settled voltages never left the band
    long max_switch_transitions = 0;
    long total_switch_transitions = 0;
    double energy_in_wh = 0;    // drawn from source cells
    double energy_out_wh = 0;   // delivered to sink cells
    double energy_loss_wh = 0;  // converter dissipation
    double final_spread_v = 0;
    long rounds = 0;
    long clamp_events = 0;  // cell state-of-charge hit 0 or 1 during a step
};

struct RunResult {
    Telemetry telemetry;
    Summary summary;
    std::vector<CellState> final_states;
    std::vector<CellState> initial_states;
};

// Fixed-step run. Each step measures terminal voltages with the currents of
// the previous step (so a just-selected cell reads its resting voltage),
// asks the controller for commands, applies the converter transfer to the
// two selected cells on top of the profile's stack current, then advances
// every cell. Fully deterministic.
RunResult run(const Scenario& sc, const EqualizerConfig& cfg, const ConverterParams& conv);

// Everything in Summary except clamp_events is recomputed from telemetry
// alone; convergence uses settled samples, meaning the converter has been
// off for at least time_gap.
Summary summarize(const Telemetry& t, const EqualizerConfig& cfg);

}  // namespace eq
