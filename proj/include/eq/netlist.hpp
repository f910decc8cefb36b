#pragma once

#include "eq/switch_state.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eq {

// One contact of a switch: nodes a and b are tied together whenever the
// switch's on/off state equals when_on. A form-C pole contributes one edge
// for each throw; a normally-open contact contributes only a when_on edge.
struct CondEdge {
    int node_a = -1;
    int node_b = -1;
    bool when_on = true;
};

// Wiring of the selection network as conditional edges grouped per switch.
// Reserved node names: "N0".."N<n>" are the cell stack taps (cell j sits
// between N<j-1> and N<j>), "P1+"/"P1-"/"P2+"/"P2-" are the converter port
// terminals. Every other name is an internal wire.
class Netlist {
public:
    explicit Netlist(int cell_count = 0);

    // The wiring this project ships for the relay selection network.
    //
    // Four rail wires run past the cell relays: primaries XO/XE and
    // secondaries YO/YE, one pair per stack-position parity. Relay S_j is
    // threaded on the two same-parity rails. Off, both poles pass the rails
    // through. On, the first pole taps N_j onto the primary segment above S_j
    // (disconnecting the segment below), and the second pole splices that
    // severed lower primary segment into the secondary above S_j. One
    // polarity relay swaps the primary heads onto P1+/P1-, the other swaps
    // the secondary heads onto P2+/P2-.
    //
    // Two exceptions make the bottom of the stack reachable within the relay
    // budget. S1's second pole is repurposed as a gate from N0 to wire G,
    // and the P2 polarity relay carries an extra normally-closed contact
    // from G to P2-, so N0 reaches the sink port exactly when cell 1 is
    // selected as the low cell. The ganged shorting contacts bridge P1- to
    // P2+ through M for adjacent selections, where both ports share a stack
    // node and the secondary rails carry nothing.
    static Netlist selection_ladder(int n);

    static Netlist parse(const std::string& text);
    std::string serialize() const;

    int cell_count() const { return n_; }
    int node_count() const { return static_cast<int>(names_.size()); }
    const std::string& node_name(int id) const { return names_[static_cast<std::size_t>(id)]; }
    // -1 when the name is absent.
    int node_id(std::string_view name) const;
    int ensure_node(const std::string& name);
    // Stack tap index for a node id ("N<j>" gives j), -1 for internal wires.
    int stack_index(int node_id) const { return stack_idx_[static_cast<std::size_t>(node_id)]; }

    // Edges grouped by flat switch index; entry i belongs to flat_name(n, i).
    const std::vector<std::vector<CondEdge>>& elements() const { return elements_; }
    void add_edge(int flat_index, const std::string& a, const std::string& b, bool when_on);

private:
    int n_ = 0;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;
    std::vector<int> stack_idx_;
    std::vector<std::vector<CondEdge>> elements_;
};

// Flat switch index for a switch name ("S3", "Spol1", ...), -1 if unknown.
int switch_index(int n, std::string_view name);

}  // namespace eq
