#include "eq/scenario.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eq {

double cv_charge_current(double v_set, const std::vector<double>& cell_v, double i_limit,
                         std::optional<double> gain) {
    if (v_set <= 0 || i_limit <= 0) throw std::invalid_argument("cv setpoint and limit must be positive");
    double n = static_cast<double>(cell_v.size());
    double g = gain.value_or(i_limit / (n * 0.05));
    double err = v_set * n;
    for (double v : cell_v) err -= v;
    return std::clamp(g * err, 0.0, i_limit);
}

ProfileRunner::ProfileRunner(const Scenario& sc) : sc_(sc) {}

double ProfileRunner::current(double t, const std::vector<double>& cell_v) {
    while (idx_ < sc_.profile.size()) {
        const Segment& seg = sc_.profile[idx_];
        double elapsed = t - seg_start_;

        if (const auto* rest = std::get_if<RestSeg>(&seg)) {
            if (elapsed >= rest->duration_s) {
                ++idx_;
                seg_start_ = t;
                continue;
            }
            return 0;
        }
        if (const auto* cc = std::get_if<CCSeg>(&seg)) {
            bool done = cc->duration_s && elapsed >= *cc->duration_s;
            if (!done && cc->v_limit) {
                if (cc->current_a > 0) {
                    done = *std::max_element(cell_v.begin(), cell_v.end()) >= *cc->v_limit;
                } else if (cc->current_a < 0) {
                    done = *std::min_element(cell_v.begin(), cell_v.end()) <= *cc->v_limit;
                }
            }
            if (done) {
                ++idx_;
                seg_start_ = t;
                continue;
            }
            return cc->current_a;
        }
        if (const auto* cv = std::get_if<CVSeg>(&seg)) {
            double i = cv_charge_current(cv->v_set, cell_v, cv->i_limit, cv->gain);
            if (i <= cv->i_cutoff) {
                ++idx_;
                seg_start_ = t;
                continue;
            }
            return i;
        }
        const auto& step = std::get<StepSeg>(seg);
        if (step.duration_s && elapsed >= *step.duration_s) {
            ++idx_;
            seg_start_ = t;
            continue;
        }
        double i = 0;
        for (const auto& [offset, current] : step.points) {
            if (elapsed >= offset) i = current;
        }
        return i;
    }
    return 0;
}

void validate(const Scenario& sc, const EqualizerConfig& cfg) {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };

    if (sc.n < 2) fail("[stack].n: need at least two cells");
    if (static_cast<int>(sc.cells.size()) != sc.n) fail("[cells]: expected one parameter set per cell");
    if (static_cast<int>(sc.v_init.size()) != sc.n) fail("[cells].v_init: expected one voltage per cell");
    if (sc.dt <= 0) fail("[sim].dt: must be positive");
    if (sc.duration_s <= 0) fail("[sim].duration: must be positive");
    if (cfg.v_tol <= 0) fail("[equalizer].v_tol: must be positive");
    if (cfg.delta_t <= 0) fail("[equalizer].delta_t: must be positive");
    if (cfg.time_gap <= 0) fail("[equalizer].time_gap: must be positive");
    if (cfg.i_eq <= 0) fail("[equalizer].i_eq: must be positive");
    double coarse = std::min(cfg.time_gap, cfg.delta_t) / 10.0;
    if (sc.dt > coarse) {
        fail("[sim].dt: must be at most min(time_gap, delta_t)/10 = " + std::to_string(coarse));
    }
    if (cfg.max_round_duration < cfg.delta_t + cfg.time_gap) {
        fail("[equalizer].max_round_duration: must cover delta_t plus time_gap");
    }
    for (const auto& c : sc.cells) {
        if (c.capacity_ah <= 0) fail("[cells].capacity_ah: must be positive");
        if (c.r0_ohm < 0) fail("[cells].r0_ohm: must be non-negative");
        if (c.r1_ohm <= 0 || c.c1_farad <= 0) fail("[cells]: r1_ohm and c1_farad must be positive");
    }
    for (const auto& seg : sc.profile) {
        if (const auto* rest = std::get_if<RestSeg>(&seg)) {
            if (rest->duration_s <= 0) fail("[profile]: rest duration must be positive");
        } else if (const auto* cc = std::get_if<CCSeg>(&seg)) {
            if (cc->duration_s && *cc->duration_s <= 0) fail("[profile]: cc duration must be positive");
        } else if (const auto* cv = std::get_if<CVSeg>(&seg)) {
            if (cv->v_set <= 0 || cv->i_limit <= 0) fail("[profile]: cv setpoint and limit must be positive");
            if (cv->i_cutoff < 0) fail("[profile]: cv cutoff must be non-negative");
        } else if (const auto* st = std::get_if<StepSeg>(&seg)) {
            if (st->points.empty()) fail("[profile]: step schedule needs at least one point");
            for (std::size_t i = 1; i < st->points.size(); ++i) {
                if (st->points[i - 1].first >= st->points[i].first) {
                    fail("[profile]: step schedule times must increase");
                }
            }
            if (st->duration_s && *st->duration_s <= 0) fail("[profile]: step duration must be positive");
        }
    }
}

}  // namespace eq
