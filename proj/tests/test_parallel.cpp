#include "eq/netlist.hpp"
#include "eq/sweep.hpp"
#include "eq/verify.hpp"

#include <doctest.h>

using namespace eq;

// The OpenMP fan-outs must be bit-for-bit interchangeable with their serial
// reference paths: same ordering, same content.

TEST_CASE("pair verification: parallel path matches the serial reference") {
    for (int n : {2, 5, 16, 33}) {
        CAPTURE(n);
        Netlist nl = Netlist::selection_ladder(n);
        VerifyReport serial = verify_network(nl, false);
        VerifyReport parallel = verify_network(nl, true);
        CHECK(serial.pairs_checked == parallel.pairs_checked);
        REQUIRE(serial.violations.size() == parallel.violations.size());
        for (std::size_t i = 0; i < serial.violations.size(); ++i) {
            CHECK(serial.violations[i].k == parallel.violations[i].k);
            CHECK(serial.violations[i].l == parallel.violations[i].l);
            CHECK(serial.violations[i].message == parallel.violations[i].message);
        }
    }
}

TEST_CASE("parallel verification keeps violations in pair order on a broken netlist") {
    // deliberately cripple the wiring by dropping the shorting-bridge edges,
    // so every adjacent pair fails and ordering is observable
    const int n = 12;
    Netlist good = Netlist::selection_ladder(n);
    Netlist bad(n);
    int bridge_a = switch_index(n, "Sshort_a");
    for (std::size_t i = 0; i < good.elements().size(); ++i) {
        if (static_cast<int>(i) == bridge_a) continue;
        for (const CondEdge& e : good.elements()[i]) {
            bad.add_edge(static_cast<int>(i), good.node_name(e.node_a), good.node_name(e.node_b),
                         e.when_on);
        }
    }

    VerifyReport serial = verify_network(bad, false);
    VerifyReport parallel = verify_network(bad, true);
    REQUIRE(!serial.violations.empty());
    REQUIRE(serial.violations.size() == parallel.violations.size());
    for (std::size_t i = 0; i < serial.violations.size(); ++i) {
        CHECK(serial.violations[i].k == parallel.violations[i].k);
        CHECK(serial.violations[i].l == parallel.violations[i].l);
        CHECK(serial.violations[i].message == parallel.violations[i].message);
    }
    // exactly the adjacent pairs lose their sink connection
    for (const Violation& v : serial.violations) CHECK(v.k == v.l + 1);
}

TEST_CASE("sweep: parallel execution reproduces the serial table byte for byte") {
    const char* cfg = R"(
[stack]
n = 4
[cells]
v_init = 3.63 3.60 3.60 3.57
[sim]
dt = 0.5
duration = 900
[sweep]
vary = equalizer.i_eq = 0.4, 0.5
vary = equalizer.compensation = on, off
)";
    SimSetup setup = parse_config(cfg);
    SweepResult serial = run_sweep(setup, false);
    SweepResult parallel = run_sweep(setup, true);
    REQUIRE(serial.points.size() == 4);
    REQUIRE(parallel.points.size() == 4);
    CHECK(sweep_csv(serial) == sweep_csv(parallel));
    CHECK(compensation_ratio_report(serial) == compensation_ratio_report(parallel));
}

TEST_CASE("sweep captures per-point validation failures without aborting the grid") {
    const char* cfg = R"(
[stack]
n = 4
[cells]
v_init = 3.63 3.60 3.60 3.57
[sim]
dt = 0.5
duration = 300
[sweep]
vary = sim.dt = 0.5, 99
)";
    SweepResult r = run_sweep(parse_config(cfg), true);
    REQUIRE(r.points.size() == 2);
    CHECK_FALSE(r.points[0].failed);
    CHECK(r.points[1].failed);
    CHECK(r.points[1].error.find("[sim].dt") != std::string::npos);
}
