#include "eq/sim.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace eq {

RunResult run(const Scenario& sc, const EqualizerConfig& cfg, const ConverterParams& conv) {
    validate(sc, cfg);

    int n = sc.n;
    std::vector<CellState> states(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        states[static_cast<std::size_t>(i)].soc =
            soc_from_voltage(sc.cells[static_cast<std::size_t>(i)], sc.v_init[static_cast<std::size_t>(i)]);
        states[static_cast<std::size_t>(i)].v_rc = 0;
    }

    RunResult result{Telemetry(n), Summary{}, {}, states};

    ControllerState ctrl(n);
    ProfileRunner profile(sc);
    TransitionTally tally(ctrl.switches.flat_size());
    SwitchState prev_switches(n);

    std::vector<double> i_prev(static_cast<std::size_t>(n), 0.0);
    std::vector<double> v_meas(static_cast<std::size_t>(n), 0.0);
    std::vector<double> i_cell(static_cast<std::size_t>(n), 0.0);
    std::vector<double> row(result.telemetry.columns().size(), 0.0);

    long steps = static_cast<long>(std::ceil(sc.duration_s / sc.dt));
    long clamp_events = 0;

    for (long s = 0; s < steps; ++s) {
        double t = static_cast<double>(s) * sc.dt;

        // Voltages carry the previous step's currents, so a cell chosen while
        // the converter is off is sampled at rest.
        for (int i = 0; i < n; ++i) {
            v_meas[static_cast<std::size_t>(i)] =
                terminal_voltage(sc.cells[static_cast<std::size_t>(i)],
                                 states[static_cast<std::size_t>(i)], i_prev[static_cast<std::size_t>(i)]);
        }

        double i_stack = profile.current(t, v_meas);
        Commands cmd = controller_step(ctrl, v_meas, cfg, sc.dt);

        double i_src = 0, i_snk = 0, vc1 = 0, vc2 = 0;
        if (cmd.converter_on) {
            TransferResult tr = transfer(conv, v_meas[static_cast<std::size_t>(cmd.src - 1)],
                                         v_meas[static_cast<std::size_t>(cmd.snk - 1)]);
            i_src = tr.i_src_a;
            i_snk = tr.i_sink_a;
            int k = std::max(cmd.src, cmd.snk);
            int l = std::min(cmd.src, cmd.snk);
            std::tie(vc1, vc2) = capacitor_voltages(k, l, v_meas);
        }

        for (int i = 0; i < n; ++i) i_cell[static_cast<std::size_t>(i)] = i_stack;
        if (cmd.converter_on) {
            i_cell[static_cast<std::size_t>(cmd.src - 1)] -= i_src;
            i_cell[static_cast<std::size_t>(cmd.snk - 1)] += i_snk;
        }

        tally.apply(prev_switches, cmd.switches);
        prev_switches = cmd.switches;

        row[result.telemetry.col_t()] = t;
        for (int i = 1; i <= n; ++i) {
            row[result.telemetry.col_vb(i)] = v_meas[static_cast<std::size_t>(i - 1)];
        }
        row[result.telemetry.col_i_stack()] = i_stack;
        row[result.telemetry.col_src()] = cmd.src;
        row[result.telemetry.col_snk()] = cmd.snk;
        row[result.telemetry.col_i_src()] = i_src;
        row[result.telemetry.col_i_sink()] = i_snk;
        row[result.telemetry.col_phase()] = static_cast<double>(static_cast<int>(ctrl.phase));
        row[result.telemetry.col_vc1()] = vc1;
        row[result.telemetry.col_vc2()] = vc2;
        for (int i = 0; i < ctrl.switches.flat_size(); ++i) {
            row[result.telemetry.col_trans(i)] = static_cast<double>(tally.counts[static_cast<std::size_t>(i)]);
        }
        result.telemetry.append_row(row);

        for (int i = 0; i < n; ++i) {
            StepResult r = step_cell(sc.cells[static_cast<std::size_t>(i)],
                                     states[static_cast<std::size_t>(i)],
                                     i_cell[static_cast<std::size_t>(i)], sc.dt);
            states[static_cast<std::size_t>(i)] = r.next;
            clamp_events += r.clamped;
        }
        i_prev = i_cell;
    }

    result.final_states = states;
    result.summary = summarize(result.telemetry, cfg);
    result.summary.clamp_events = clamp_events;
    return result;
}

Summary summarize(const Telemetry& t, const EqualizerConfig& cfg) {
    Summary s;
    int n = t.cell_count();
    std::size_t rows = t.row_count();
    if (rows == 0) return s;

    double dt = rows > 1 ? t.at(1, t.col_t()) - t.at(0, t.col_t()) : 0;

    for (int i = 0; i < n + 4; ++i) {
        long c = static_cast<long>(t.at(rows - 1, t.col_trans(i)));
        s.max_switch_transitions = std::max(s.max_switch_transitions, c);
        s.total_switch_transitions += c;
    }

    double e_in = 0, e_out = 0;
    double off_time = 0;
    long last_bad = -1;
    long first_good_after = -1;
    bool any_settled = false;

    for (std::size_t r = 0; r < rows; ++r) {
        int phase = static_cast<int>(t.at(r, t.col_phase()));
        if (phase == static_cast<int>(Phase::MeasuringVimp) &&
            (r == 0 || static_cast<int>(t.at(r - 1, t.col_phase())) !=
                           static_cast<int>(Phase::MeasuringVimp))) {
            ++s.rounds;
        }

        double i_src = t.at(r, t.col_i_src());
        if (i_src > 0) {
            int src = static_cast<int>(t.at(r, t.col_src()));
            int snk = static_cast<int>(t.at(r, t.col_snk()));
            double p_in = t.at(r, t.col_vb(src)) * i_src;
            double p_out = t.at(r, t.col_vb(snk)) * t.at(r, t.col_i_sink());
            e_in += p_in * dt;
            e_out += p_out * dt;
            off_time = 0;
        } else {
            off_time += dt;
        }

        if (i_src == 0 && off_time >= cfg.time_gap) {
            any_settled = true;
            double mean = 0;
            for (int i = 1; i <= n; ++i) mean += t.at(r, t.col_vb(i));
            mean /= n;
            bool in_band = true;
            for (int i = 1; i <= n; ++i) {
                if (std::abs(t.at(r, t.col_vb(i)) - mean) > cfg.v_tol) {
                    in_band = false;
                    break;
                }
            }
            if (!in_band) {
                last_bad = static_cast<long>(r);
                first_good_after = -1;
            } else if (first_good_after < 0) {
                first_good_after = static_cast<long>(r);
            }
        }
    }

    s.energy_in_wh = e_in / 3600.0;
    s.energy_out_wh = e_out / 3600.0;
    s.energy_loss_wh = (e_in - e_out) / 3600.0;

    if (any_settled && first_good_after >= 0) {
        s.converged = true;
        s.convergence_time_s = last_bad < 0 ? 0 : t.at(static_cast<std::size_t>(first_good_after), t.col_t());
    }

    double hi = t.at(rows - 1, t.col_vb(1)), lo = hi;
    for (int i = 2; i <= n; ++i) {
        double v = t.at(rows - 1, t.col_vb(i));
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    s.final_spread_v = hi - lo;
    return s;
}

}  // namespace eq
