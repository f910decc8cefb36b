#include "eq/sweep.hpp"

#include "eq/telemetry.hpp"

#include <sstream>

namespace eq {

std::vector<std::vector<std::string>> expand_grid(const std::vector<SweepAxis>& axes) {
    long total = 1;
    for (const auto& axis : axes) {
        total *= static_cast<long>(axis.values.size());
        if (total > 10000) {
            throw ConfigError("sweep grid exceeds 10000 points; refusing to expand");
        }
    }

    std::vector<std::vector<std::string>> grid;
    grid.reserve(static_cast<std::size_t>(total));
    std::vector<std::size_t> idx(axes.size(), 0);
    for (long p = 0; p < total; ++p) {
        std::vector<std::string> tuple;
        tuple.reserve(axes.size());
        for (std::size_t a = 0; a < axes.size(); ++a) {
            tuple.push_back(axes[a].values[idx[a]]);
        }
        grid.push_back(std::move(tuple));
        for (std::size_t a = axes.size(); a-- > 0;) {
            if (++idx[a] < axes[a].values.size()) break;
            idx[a] = 0;
        }
    }
    return grid;
}

SweepResult run_sweep(const SimSetup& base, bool parallel) {
    SweepResult result;
    result.axes = base.sweep_axes;
    auto grid = expand_grid(base.sweep_axes);
    result.points.resize(grid.size());

    auto run_point = [&](std::size_t p) {
        SweepPoint& point = result.points[p];
        point.values = grid[p];
        try {
            SimSetup setup = base;
            setup.sweep_axes.clear();
            for (std::size_t a = 0; a < result.axes.size(); ++a) {
                apply_key(setup, result.axes[a].section, result.axes[a].key, grid[p][a]);
            }
            point.summary = run(setup.scenario, setup.equalizer, setup.converter).summary;
        } catch (const std::exception& e) {
            point.failed = true;
            point.error = e.what();
        }
    };

    if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (long p = 0; p < static_cast<long>(grid.size()); ++p) {
            run_point(static_cast<std::size_t>(p));
        }
    } else {
        for (std::size_t p = 0; p < grid.size(); ++p) run_point(p);
    }
    return result;
}

std::string sweep_csv(const SweepResult& r) {
    std::ostringstream out;
    out << "point";
    for (const auto& axis : r.axes) out << ',' << axis.section << '.' << axis.key;
    out << ",converged,convergence_time_s,max_switch_transitions,total_switch_transitions,"
           "rounds,final_spread_v,energy_in_wh,energy_out_wh,energy_loss_wh,error\n";
    for (std::size_t p = 0; p < r.points.size(); ++p) {
        const SweepPoint& pt = r.points[p];
        out << p;
        for (const auto& v : pt.values) out << ',' << v;
        if (pt.failed) {
            out << ",,,,,,,,,," << pt.error << '\n';
            continue;
        }
        const Summary& s = pt.summary;
        out << ',' << (s.converged ? 1 : 0) << ',' << format_number(s.convergence_time_s) << ','
            << s.max_switch_transitions << ',' << s.total_switch_transitions << ',' << s.rounds
            << ',' << format_number(s.final_spread_v) << ',' << format_number(s.energy_in_wh)
            << ',' << format_number(s.energy_out_wh) << ',' << format_number(s.energy_loss_wh)
            << ",\n";
    }
    return out.str();
}

std::string compensation_ratio_report(const SweepResult& r) {
    std::size_t comp_axis = r.axes.size();
    for (std::size_t a = 0; a < r.axes.size(); ++a) {
        if (r.axes[a].section == "equalizer" && r.axes[a].key == "compensation" &&
            r.axes[a].values.size() == 2) {
            comp_axis = a;
        }
    }
    if (comp_axis == r.axes.size()) return "";

    std::ostringstream out;
    out << "compensation ratios: '" << r.axes[comp_axis].values[1] << "' over '"
        << r.axes[comp_axis].values[0] << "' (max per-switch transitions, convergence time)\n";

    // Pair points that agree on every other axis.
    for (std::size_t p = 0; p < r.points.size(); ++p) {
        const SweepPoint& on_pt = r.points[p];
        if (on_pt.failed) continue;
        // Treat the first axis value as the reference arm.
        if (on_pt.values[comp_axis] != r.axes[comp_axis].values[0]) continue;
        for (std::size_t q = 0; q < r.points.size(); ++q) {
            const SweepPoint& off_pt = r.points[q];
            if (q == p || off_pt.failed) continue;
            if (off_pt.values[comp_axis] != r.axes[comp_axis].values[1]) continue;
            bool match = true;
            for (std::size_t a = 0; a < r.axes.size(); ++a) {
                if (a != comp_axis && on_pt.values[a] != off_pt.values[a]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;

            out << "point " << p << " (" << r.axes[comp_axis].values[0] << ") vs point " << q
                << " (" << r.axes[comp_axis].values[1] << "): ";
            if (on_pt.summary.max_switch_transitions > 0) {
                double ratio = static_cast<double>(off_pt.summary.max_switch_transitions) /
                               static_cast<double>(on_pt.summary.max_switch_transitions);
                out << "transitions " << format_number(ratio) << "x";
            } else {
                out << "transitions n/a";
            }
            if (on_pt.summary.convergence_time_s > 0) {
                double ratio = off_pt.summary.convergence_time_s / on_pt.summary.convergence_time_s;
                out << ", time " << format_number(ratio) << "x";
            } else {
                out << ", time n/a";
            }
            out << '\n';
        }
    }
    return out.str();
}

nlohmann::json summary_json(const Summary& s) {
    return nlohmann::json{
        {"converged", s.converged},
        {"convergence_time_s", s.convergence_time_s},
        {"max_switch_transitions", s.max_switch_transitions},
        {"total_switch_transitions", s.total_switch_transitions},
        {"energy_in_wh", s.energy_in_wh},
        {"energy_out_wh", s.energy_out_wh},
        {"energy_loss_wh", s.energy_loss_wh},
        {"final_spread_v", s.final_spread_v},
        {"rounds", s.rounds},
        {"clamp_events", s.clamp_events},
    };
}

}  // namespace eq
