#pragma once

#include "eq/curve.hpp"

#include <utility>
#include <vector>

namespace eq {

// Averaged model of the shared bidirectional converter. The port serving the
// source cell is current-regulated at i_eq; the efficiency curve maps output
// power to the transfer efficiency, so the sink current follows from power
// bookkeeping.
struct ConverterParams {
    double i_eq_a = 0.5;
    double rated_power_w = 2.0;
    PiecewiseLinear efficiency_curve{{{0.2, 0.905}, {0.9, 0.929}, {2.0, 0.901}}};
};

// Blocking-capacitor voltages for the selected pair (k > l): the first spans
// cells l..k, the second the cells strictly between them (zero for adjacent
// pairs).
std::pair<double, double> capacitor_voltages(int k, int l, const std::vector<double>& cell_v);

// Efficiency at a given output power, flat beyond the curve's ends.
double efficiency(const ConverterParams& p, double p_out_w);

struct TransferResult {
    double i_src_a = 0;
    double i_sink_a = 0;
    double p_in_w = 0;
    double p_out_w = 0;
    double p_loss_w = 0;
    bool converged = true;  // fixed-point solve for the operating efficiency
};

// Source-side current fixed at i_eq; efficiency solved self-consistently at
// the resulting output power. The identity p_in = p_out + p_loss holds by
// construction.
TransferResult transfer(const ConverterParams& p, double v_src, double v_sink);

}  // namespace eq
