#pragma once

#include "eq/netlist.hpp"
#include "eq/resolve.hpp"

#include <string>
#include <vector>

namespace eq {

struct Violation {
    int k = 0;
    int l = 0;
    std::vector<Fault> faults;
    std::string message;  // also covers wrong-cell routing with no wiring fault
};

struct VerifyReport {
    int n = 0;
    long pairs_checked = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Exercises every ordered pair (k, l) with k > l against the netlist: the
// collapsed wiring must put cell k across port 1 and cell l across port 2,
// correctly polarized, with no fault anywhere. With parallel=true the pair
// fan-out runs multi-threaded when built with OpenMP; results are ordered
// identically either way.
VerifyReport verify_network(const Netlist& nl, bool parallel = true);

}  // namespace eq
