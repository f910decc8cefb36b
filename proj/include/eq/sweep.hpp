#pragma once

#include "eq/config.hpp"
#include "eq/sim.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace eq {

struct SweepPoint {
    // Parallel to the axis list: the value each axis takes at this point.
    std::vector<std::string> values;
    Summary summary;
    bool failed = false;
    std::string error;
};

struct SweepResult {
    std::vector<SweepAxis> axes;
    std::vector<SweepPoint> points;
};

// Cartesian expansion of the axes into per-point value tuples, first axis
// slowest. Throws ConfigError beyond 10^4 points. No axes gives the single
// empty tuple (one unmodified run).
std::vector<std::vector<std::string>> expand_grid(const std::vector<SweepAxis>& axes);

// Runs every grid point: each applies its values onto a copy of the base
// setup through apply_key, then simulates. Points are independent, so with
// parallel=true they fan out across OpenMP threads; per-point failures are
// captured in the result rather than thrown. Point order matches
// expand_grid either way.
SweepResult run_sweep(const SimSetup& base, bool parallel);

// Aggregate table, one row per point: axis values, then the summary metrics.
std::string sweep_csv(const SweepResult& r);

// When a two-valued equalizer.compensation axis is present, pairs up points
// that differ only in that axis and reports off/on ratios of max per-switch
// transitions and convergence time.
std::string compensation_ratio_report(const SweepResult& r);

nlohmann::json summary_json(const Summary& s);

}  // namespace eq
