#include "eq/cell.hpp"

#include <algorithm>
#include <cmath>

namespace eq {

StepResult step_cell(const CellParams& p, const CellState& s, double current_a, double dt_s) {
    StepResult r;
    double decay = std::exp(-dt_s / p.tau_s());
    r.next.v_rc = s.v_rc * decay + current_a * p.r1_ohm * (1.0 - decay);

    double soc = s.soc + current_a * dt_s / (3600.0 * p.capacity_ah);
    double clamped_soc = std::clamp(soc, 0.0, 1.0);
    r.clamped = clamped_soc != soc;
    r.next.soc = clamped_soc;
    return r;
}

double terminal_voltage(const CellParams& p, const CellState& s, double current_a) {
    return p.ocv_curve(s.soc) + current_a * p.r0_ohm + s.v_rc;
}

double soc_from_voltage(const CellParams& p, double v) {
    return p.ocv_curve.inverse(v);
}

}  // namespace eq
