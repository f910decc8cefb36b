#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eq {

// On/off assignment for every switch in the selection network: one relay per
// cell (S1..Sn), two polarity relays, and a ganged pair of shorting contacts
// used for adjacent-cell transfers. Flat ordering for counters and telemetry
// is S1..Sn, pol1, pol2, short_a, short_b.
struct SwitchState {
    int n = 0;
    std::vector<std::uint8_t> s;  // s[j-1] is cell relay S_j
    bool pol1 = false;
    bool pol2 = false;
    bool short_a = false;
    bool short_b = false;

    explicit SwitchState(int cell_count = 0)
        : n(cell_count), s(static_cast<std::size_t>(cell_count), 0) {}

    int flat_size() const { return n + 4; }
    bool flat(int idx) const;

    bool operator==(const SwitchState&) const = default;
};

// Name of the switch at a flat index: "S1".."Sn", "Spol1", "Spol2",
// "Sshort_a", "Sshort_b".
std::string flat_name(int n, int idx);

// Switch pattern that routes cell k to the source port and cell l to the
// sink port, k > l, both in [1, n]. Cell relays S_k, S_{k-1}, S_l, S_{l-1}
// close (S_0 does not exist and is skipped); each polarity relay closes when
// its cell index is even; for adjacent selections the shorting contacts also
// close, handing the ports' shared stack node to the sink's + terminal.
SwitchState select_pair(int k, int l, int n);

// Indices of switches that differ between two states of equal size.
std::vector<int> transition_increments(const SwitchState& prev, const SwitchState& next);

// Per-switch running count of state changes.
struct TransitionTally {
    std::vector<long> counts;

    explicit TransitionTally(int flat_size = 0)
        : counts(static_cast<std::size_t>(flat_size), 0) {}

    void apply(const SwitchState& prev, const SwitchState& next);
    long max() const;
    long total() const;
};

}  // namespace eq
