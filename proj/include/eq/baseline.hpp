#pragma once

#include "eq/resolve.hpp"

#include <cstdint>
#include <vector>

namespace eq {

// Conventional selection network kept for comparison: two selector switches
// per cell, each a changeover contact that can rest open or route its stack
// tap to one of the two converter ports. Switch 2j-1 serves tap N_j toward a
// positive rail, switch 2j serves tap N_{j-1} toward a negative rail.
enum class SelectorPos : std::uint8_t { Off = 0, Port1 = 1, Port2 = 2 };

struct MatrixState {
    int n = 0;
    std::vector<SelectorPos> plus_sel;   // per cell j: N_j toward P1+ or P2+
    std::vector<SelectorPos> minus_sel;  // per cell j: N_{j-1} toward P1- or P2-

    explicit MatrixState(int cell_count = 0)
        : n(cell_count),
          plus_sel(static_cast<std::size_t>(cell_count), SelectorPos::Off),
          minus_sel(static_cast<std::size_t>(cell_count), SelectorPos::Off) {}
};

// Routes cell k across port 1 and cell l across port 2; four selectors end
// up engaged and no polarity or shorting switches are needed.
MatrixState matrix_select_pair(int k, int l, int n);

Resolution resolve_matrix(const MatrixState& st);

long matrix_active_count(const MatrixState& st);

}  // namespace eq
