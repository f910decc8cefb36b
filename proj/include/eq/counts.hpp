#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eq {

enum class SwitchImpl { Mosfet, Relay };

// Bill of materials for a pair-selection equalizer: the selection switches
// plus the shared dc-dc converter, with the converter's published efficiency
// range. Formulas are closed-form in the cell count n.
struct SelectionComparison {
    std::string id;
    long sel_mosfet = 0;
    long sel_dpdt = 0;
    long sel_spst = 0;
    int conv_mosfet = 0;
    int conv_capacitor = 0;
    int conv_inductor = 0;
    int conv_transformer = 0;
    int conv_diode = 0;
    double eff_min = 0;
    double eff_max = 0;
};

// Topology ids: "selective_ladder" (this project's network), and three
// published full-matrix alternatives distinguished by their converter:
// "flyback_matrix", "resonant_matrix", "boost_matrix".
SelectionComparison selection_comparison(std::string_view topology, SwitchImpl impl, int n);

const std::vector<std::string>& selection_topologies();

// Whole-equalizer comparison row across architecture families: component
// totals, gate/coil driver counts split by switching frequency, and the
// published efficiency where one was reported.
struct EqualizerComparison {
    std::string id;
    long mosfet = 0;
    long diode = 0;
    long dpdt = 0;
    long spst = 0;
    long capacitor = 0;
    long inductor = 0;
    long transformer = 0;
    long drivers_hf = 0;
    long drivers_lf = 0;
    std::optional<double> eff_min;
    std::optional<double> eff_max;
};

// Row ids: "adjacent_resonant", "stack_multiwinding", "switched_cap_star",
// "dual_active_bridge", "cell_to_stack_mosfet", "cell_to_stack_relay",
// "cell_to_cell_mosfet", "cell_to_cell_relay" (the last two are this
// project's network in its two realizations).
EqualizerComparison equalizer_comparison(std::string_view row, int n);

const std::vector<std::string>& equalizer_rows();

}  // namespace eq
