#pragma once

#include "eq/netlist.hpp"
#include "eq/switch_state.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eq {

enum class FaultKind {
    Short,             // distinct stack taps conduct, or a port's own terminals do
    FloatingTerminal,  // a port terminal reaches no stack tap
    MultiCellSpan,     // a port's terminals bracket more than one cell
};

struct Fault {
    FaultKind kind;
    std::string detail;
};

enum class Polarity { Correct, Reversed };

struct PortResolution {
    std::optional<int> plus_stack;   // stack tap index under the + terminal
    std::optional<int> minus_stack;  // stack tap index under the - terminal
    std::optional<int> cell;         // set when the port brackets exactly one cell
    Polarity polarity = Polarity::Correct;  // meaningful only when cell is set
};

struct Resolution {
    PortResolution port1;
    PortResolution port2;
    std::vector<Fault> faults;

    bool ok() const { return faults.empty(); }
};

// Collapses the netlist under a switch assignment and reports what each
// converter port sees. Conducting paths are those whose edges match the
// assignment. Faults are data, not exceptions: shorted stack sections or
// port terminals, dangling terminals, and multi-cell spans. A port cleanly
// bracketing one cell the wrong way round is reported through polarity.
Resolution resolve_connectivity(const Netlist& nl, const SwitchState& st);

const char* fault_kind_name(FaultKind k);

// Shared port classification given the stack taps under the two terminals
// and whether the terminals conduct to each other.
void classify_port(const std::string& label, std::optional<int> plus_tap,
                   std::optional<int> minus_tap, bool terminals_joined,
                   PortResolution& out, std::vector<Fault>& faults);

// Disjoint-set forest over dense integer ids.
class UnionFind {
public:
    explicit UnionFind(int size);
    int find(int x);
    void unite(int a, int b);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

}  // namespace eq
