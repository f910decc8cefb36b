#include "eq/converter.hpp"

#include <cmath>
#include <stdexcept>

namespace eq {

std::pair<double, double> capacitor_voltages(int k, int l, const std::vector<double>& cell_v) {
    int n = static_cast<int>(cell_v.size());
    if (l < 1 || k > n || k <= l) throw std::invalid_argument("require 1 <= l < k <= n");
    double vc1 = 0;
    for (int j = l; j <= k; ++j) vc1 += cell_v[static_cast<std::size_t>(j - 1)];
    double vc2 = 0;
    for (int j = l + 1; j <= k - 1; ++j) vc2 += cell_v[static_cast<std::size_t>(j - 1)];
    return {vc1, vc2};
}

double efficiency(const ConverterParams& p, double p_out_w) {
    if (p_out_w < 0) throw std::invalid_argument("output power must be non-negative");
    return p.efficiency_curve(p_out_w);
}

TransferResult transfer(const ConverterParams& p, double v_src, double v_sink) {
    if (v_src <= 0 || v_sink <= 0) throw std::invalid_argument("port voltages must be positive");

    TransferResult r;
    r.i_src_a = p.i_eq_a;
    r.p_in_w = v_src * p.i_eq_a;

    // The curve is indexed by output power, which depends on the efficiency
    // itself; iterate p_out = eff(p_out) * p_in to the fixed point.
    double p_out = r.p_in_w;
    r.converged = false;
    for (int iter = 0; iter < 50; ++iter) {
        double next = efficiency(p, p_out) * r.p_in_w;
        if (std::abs(next - p_out) <= 1e-9) {
            p_out = next;
            r.converged = true;
            break;
        }
        p_out = next;
    }
    r.p_out_w = p_out;
    r.p_loss_w = r.p_in_w - p_out;
    r.i_sink_a = p_out / v_sink;
    return r;
}

}  // namespace eq
