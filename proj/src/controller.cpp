#include "eq/controller.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eq {

BandCheck check_band(const std::vector<double>& v, double v_tol) {
    if (v.size() < 2) throw std::invalid_argument("need at least two voltages");
    BandCheck b;
    b.v_avg = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i] - b.v_avg) > v_tol) b.out.push_back(static_cast<int>(i) + 1);
    }
    return b;
}

std::pair<int, int> choose_pair(const std::vector<double>& v) {
    if (v.size() < 2) throw std::invalid_argument("need at least two voltages");
    auto hi = std::max_element(v.begin(), v.end());
    auto lo = std::min_element(v.begin(), v.end());
    if (*hi == *lo) throw std::invalid_argument("all voltages equal; no pair to choose");
    return {static_cast<int>(hi - v.begin()) + 1, static_cast<int>(lo - v.begin()) + 1};
}

double measure_vimp(double v_start, double v_after_delta_t) {
    return std::abs(v_after_delta_t - v_start);
}

double stop_threshold(CellRole role, double v_avg, double v_imp, bool compensation) {
    double comp = compensation ? v_imp : 0.0;
    return role == CellRole::Sink ? v_avg + comp : v_avg - comp;
}

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Idle: return "idle";
        case Phase::MeasuringVimp: return "measuring_vimp";
        case Phase::Equalizing: return "equalizing";
        case Phase::Settling: return "settling";
    }
    return "?";
}

namespace {

void open_round(ControllerState& st) {
    st.switches = SwitchState(st.switches.n);
    st.src = 0;
    st.snk = 0;
    st.phase = Phase::Settling;
    st.phase_time = 0;
}

}  // namespace

Commands controller_step(ControllerState& st, const std::vector<double>& v,
                         const EqualizerConfig& cfg, double dt) {
    int n = st.switches.n;
    if (static_cast<int>(v.size()) != n) {
        throw std::invalid_argument("voltage vector does not match cell count");
    }

    bool converter_on = false;
    switch (st.phase) {
        case Phase::Idle: {
            BandCheck band = check_band(v, cfg.v_tol);
            if (!band.out.empty()) {
                auto [src, snk] = choose_pair(v);
                int k = std::max(src, snk);
                int l = std::min(src, snk);
                st.switches = select_pair(k, l, n);
                st.src = src;
                st.snk = snk;
                st.v_avg_snapshot = band.v_avg;
                st.v_start_src = v[static_cast<std::size_t>(src - 1)];
                st.v_start_snk = v[static_cast<std::size_t>(snk - 1)];
                st.v_imp_src = 0;
                st.v_imp_snk = 0;
                st.phase = Phase::MeasuringVimp;
                st.phase_time = 0;
                st.round_time = 0;
                ++st.rounds;
                // Switches close in this step with the converter still off;
                // current starts flowing from the next step.
            }
            break;
        }
        case Phase::MeasuringVimp: {
            converter_on = true;
            st.phase_time += dt;
            st.round_time += dt;
            if (st.phase_time >= cfg.delta_t) {
                st.v_imp_src = measure_vimp(st.v_start_src, v[static_cast<std::size_t>(st.src - 1)]);
                st.v_imp_snk = measure_vimp(st.v_start_snk, v[static_cast<std::size_t>(st.snk - 1)]);
                st.phase = Phase::Equalizing;
                st.phase_time = 0;
            }
            break;
        }
        case Phase::Equalizing: {
            converter_on = true;
            st.phase_time += dt;
            st.round_time += dt;
            bool stop = false;
            if (st.round_time >= cfg.time_gap) {
                stop = st.round_time >= cfg.max_round_duration;
                double v_src = v[static_cast<std::size_t>(st.src - 1)];
                double v_snk = v[static_cast<std::size_t>(st.snk - 1)];
                if (v_src <= stop_threshold(CellRole::Source, st.v_avg_snapshot, st.v_imp_src,
                                            cfg.compensation)) {
                    stop = true;
                }
                if (v_snk >= stop_threshold(CellRole::Sink, st.v_avg_snapshot, st.v_imp_snk,
                                            cfg.compensation)) {
                    stop = true;
                }
            }
            if (stop) {
                converter_on = false;
                open_round(st);
            }
            break;
        }
        case Phase::Settling: {
            st.phase_time += dt;
            if (st.phase_time >= cfg.time_gap) {
                st.phase = Phase::Idle;
                st.phase_time = 0;
            }
            break;
        }
    }

    Commands cmd;
    cmd.switches = st.switches;
    cmd.converter_on = converter_on;
    cmd.src = st.src;
    cmd.snk = st.snk;
    return cmd;
}

}  // namespace eq
