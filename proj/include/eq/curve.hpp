#pragma once

#include <utility>
#include <vector>

namespace eq {

// Piecewise-linear curve over sorted breakpoints. Evaluation is flat beyond
// the first and last breakpoints, so callers can feed out-of-range inputs
// without special-casing.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    // Points must be sorted by x, strictly increasing, at least one point.
    explicit PiecewiseLinear(std::vector<std::pair<double, double>> points);

    double operator()(double x) const;

    // Inverse lookup for non-decreasing curves. On a flat segment every x in
    // the segment maps to the same y; this returns the lowest such x.
    double inverse(double y) const;

    const std::vector<std::pair<double, double>>& points() const { return pts_; }

private:
    std::vector<std::pair<double, double>> pts_;
};

}  // namespace eq
