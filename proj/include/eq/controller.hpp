#pragma once

#include "eq/switch_state.hpp"

#include <utility>
#include <vector>

namespace eq {

struct EqualizerConfig {
    double v_tol = 0.010;             // half-width of the acceptance band, volts
    double delta_t = 20.0;            // wait before sampling the impedance rise, seconds
    double time_gap = 20.0;           // settle gap between switching transitions, seconds
    double i_eq = 0.5;                // regulated source-port current, amperes
    bool compensation = true;         // stop early by the measured impedance rise
    double max_round_duration = 600.0;  // hard stop per round, seconds
};

struct BandCheck {
    double v_avg = 0;
    std::vector<int> out;  // 1-based indices of cells outside v_avg +/- v_tol
};

BandCheck check_band(const std::vector<double>& v, double v_tol);

// (source, sink) as 1-based cell indices: highest and lowest voltage, ties
// broken toward the lowest index.
std::pair<int, int> choose_pair(const std::vector<double>& v);

// Magnitude of the terminal-voltage change over the measurement wait. It
// estimates the voltage the cell will recover by once current stops.
double measure_vimp(double v_start, double v_after_delta_t);

enum class CellRole { Source, Sink };

// Voltage at which the active cell's transfer stops. The sink overshoots the
// average by v_imp and the source undershoots it, so both land near v_avg
// after recovery. With compensation off the threshold is v_avg itself.
double stop_threshold(CellRole role, double v_avg, double v_imp, bool compensation);

enum class Phase { Idle = 0, MeasuringVimp = 1, Equalizing = 2, Settling = 3 };

const char* phase_name(Phase p);

struct ControllerState {
    Phase phase = Phase::Idle;
    int src = 0;  // 1-based; 0 = none
    int snk = 0;
    double v_avg_snapshot = 0;
    double v_start_src = 0;
    double v_start_snk = 0;
    double v_imp_src = 0;
    double v_imp_snk = 0;
    double phase_time = 0;  // seconds spent in the current phase
    double round_time = 0;  // seconds since this round's switches closed
    long rounds = 0;

    explicit ControllerState(int n = 0) : switches(n) {}
    SwitchState switches;
};

struct Commands {
    SwitchState switches;
    bool converter_on = false;
    int src = 0;
    int snk = 0;
};

// One decision step of the state machine, advancing the state by dt.
//
// Idle: when a cell leaves the band, snapshot v_avg, pick the pair, close
// the selection switches with the converter off, and note each chosen cell's
// resting voltage. MeasuringVimp: converter on; after delta_t store the
// observed rises. Equalizing: converter on until either cell crosses its
// stop threshold or the round times out; stop checks are held off until
// time_gap has passed since the switches closed, preserving the minimum
// dwell between transitions. On stop the converter disables and all switches
// open in the same step. Settling: everything off for time_gap, then Idle.
Commands controller_step(ControllerState& st, const std::vector<double>& v,
                         const EqualizerConfig& cfg, double dt);

}  // namespace eq
