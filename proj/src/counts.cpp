#include "eq/counts.hpp"

#include <stdexcept>

namespace eq {

namespace {

void require_n(int n) {
    if (n < 2) throw std::invalid_argument("need at least two cells");
}

}  // namespace

const std::vector<std::string>& selection_topologies() {
    static const std::vector<std::string> ids = {
        "flyback_matrix", "resonant_matrix", "boost_matrix", "selective_ladder"};
    return ids;
}

SelectionComparison selection_comparison(std::string_view topology, SwitchImpl impl, int n) {
    require_n(n);
    SelectionComparison c;
    c.id = std::string(topology);

    auto matrix_switches = [&] {
        if (impl == SwitchImpl::Mosfet) {
            c.sel_mosfet = 8L * n;
        } else {
            c.sel_dpdt = 2L * n;
        }
    };

    if (topology == "flyback_matrix") {
        matrix_switches();
        c.conv_mosfet = 1;
        c.conv_capacitor = 2;
        c.conv_transformer = 1;
        c.conv_diode = 1;
        c.eff_min = c.eff_max = 59.4;
    } else if (topology == "resonant_matrix") {
        matrix_switches();
        c.conv_mosfet = 2;
        c.conv_capacitor = 2;
        c.conv_transformer = 1;
        c.conv_diode = 2;
        c.eff_min = 85.3;
        c.eff_max = 89.5;
    } else if (topology == "boost_matrix") {
        matrix_switches();
        c.conv_mosfet = 5;
        c.conv_capacitor = 2;
        c.conv_inductor = 2;
        c.conv_diode = 5;
        c.eff_min = 98.6;
        c.eff_max = 99.5;
    } else if (topology == "selective_ladder") {
        if (impl == SwitchImpl::Mosfet) {
            c.sel_mosfet = 4L * n + 10;
        } else {
            c.sel_dpdt = n + 2L;
            c.sel_spst = 2;
        }
        c.conv_mosfet = 2;
        c.conv_capacitor = 2;
        c.conv_inductor = 2;
        c.eff_min = 90.1;
        c.eff_max = 92.9;
    } else {
        throw std::invalid_argument("unknown topology id: " + std::string(topology));
    }
    return c;
}

const std::vector<std::string>& equalizer_rows() {
    static const std::vector<std::string> ids = {
        "adjacent_resonant",   "stack_multiwinding",   "switched_cap_star",
        "dual_active_bridge",  "cell_to_stack_mosfet", "cell_to_stack_relay",
        "cell_to_cell_mosfet", "cell_to_cell_relay"};
    return ids;
}

EqualizerComparison equalizer_comparison(std::string_view row, int n) {
    require_n(n);
    EqualizerComparison c;
    c.id = std::string(row);

    if (row == "adjacent_resonant") {
        c.mosfet = 2L * n;
        c.capacitor = 2L * n - 1;
        c.inductor = n - 1L;
        c.drivers_hf = 2L * n;
        c.eff_min = c.eff_max = 98.2;
    } else if (row == "stack_multiwinding") {
        c.mosfet = n + 1L;
        c.capacitor = n;
        c.transformer = 1;  // one core carrying n+1 windings
        c.drivers_hf = n + 1L;
        c.eff_min = c.eff_max = 84.8;
    } else if (row == "switched_cap_star") {
        c.mosfet = 2L * n;
        c.capacitor = 2L * n;
        c.drivers_hf = 2L * n;
    } else if (row == "dual_active_bridge") {
        c.mosfet = 3L * n;
        c.capacitor = n;
        c.transformer = n / 2L;
        c.drivers_hf = 3L * n;
        c.eff_min = c.eff_max = 84.5;
    } else if (row == "cell_to_stack_mosfet") {
        c.mosfet = 4L * n + 2;
        c.diode = 2;
        c.capacitor = 2;
        c.transformer = 2;
        c.drivers_hf = 2;
        c.drivers_lf = 4L * n;
        c.eff_min = c.eff_max = 92.0;
    } else if (row == "cell_to_stack_relay") {
        c.mosfet = 1;
        c.diode = 1;
        c.spst = 2L * n;
        c.capacitor = 2;
        c.inductor = 2;
        c.drivers_hf = 1;
        c.drivers_lf = 2L * n;
    } else if (row == "cell_to_cell_mosfet") {
        c.mosfet = 4L * n + 12;
        c.capacitor = 2;
        c.inductor = 2;
        c.drivers_hf = 2;
        c.drivers_lf = 4L * n + 10;
        c.eff_min = 90.1;
        c.eff_max = 92.9;
    } else if (row == "cell_to_cell_relay") {
        c.mosfet = 2;
        c.dpdt = n + 2L;
        c.spst = 2;
        c.capacitor = 2;
        c.inductor = 2;
        c.drivers_hf = 2;
        c.drivers_lf = n + 2L;
        c.eff_min = 90.1;
        c.eff_max = 92.9;
    } else {
        throw std::invalid_argument("unknown comparison row id: " + std::string(row));
    }
    return c;
}

}  // namespace eq
