#include "eq/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace eq {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> points)
    : pts_(std::move(points)) {
    if (pts_.empty()) {
        throw std::invalid_argument("curve needs at least one point");
    }
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        if (!(pts_[i - 1].first < pts_[i].first)) {
            throw std::invalid_argument("curve x values must be strictly increasing");
        }
    }
}

double PiecewiseLinear::operator()(double x) const {
    if (x <= pts_.front().first) return pts_.front().second;
    if (x >= pts_.back().first) return pts_.back().second;
    auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
                               [](double v, const auto& p) { return v < p.first; });
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    double t = (x - x0) / (x1 - x0);
    return y0 + t * (y1 - y0);
}

double PiecewiseLinear::inverse(double y) const {
    if (y <= pts_.front().second) return pts_.front().first;
    if (y >= pts_.back().second) return pts_.back().first;
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        const auto& [x0, y0] = pts_[i - 1];
        const auto& [x1, y1] = pts_[i];
        if (y0 <= y && y <= y1) {
            if (y1 == y0) return x0;
            double t = (y - y0) / (y1 - y0);
            return x0 + t * (x1 - x0);
        }
    }
    return pts_.back().first;
}

}  // namespace eq
