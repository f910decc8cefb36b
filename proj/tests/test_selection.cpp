#include "eq/switch_state.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>
#include <string>

using namespace eq;

namespace {

// Names of the switches that are on, for readable failure output.
std::set<std::string> on_names(const SwitchState& st) {
    std::set<std::string> out;
    for (int i = 0; i < st.flat_size(); ++i) {
        if (st.flat(i)) out.insert(flat_name(st.n, i));
    }
    return out;
}

}  // namespace

TEST_CASE("non-adjacent pair engages two switches per cell plus sink polarity") {
    auto st = select_pair(7, 2, 8);
    CHECK(on_names(st) == std::set<std::string>{"S1", "S2", "S6", "S7", "Spol2"});
}

TEST_CASE("adjacent pair additionally closes both shorting switches") {
    auto st = select_pair(5, 4, 8);
    CHECK(on_names(st) ==
          std::set<std::string>{"S3", "S4", "S5", "Spol2", "Sshort_a", "Sshort_b"});
}

TEST_CASE("bottom pair skips the nonexistent switch below cell 1") {
    auto st = select_pair(2, 1, 8);
    CHECK(on_names(st) == std::set<std::string>{"S1", "S2", "Spol1", "Sshort_a", "Sshort_b"});
}

TEST_CASE("polarity relays track the parity of each selected cell") {
    // odd source, odd sink: both polarity relays stay in the resting position
    CHECK(on_names(select_pair(7, 3, 8)) == std::set<std::string>{"S2", "S3", "S6", "S7"});
    // even source: the source-port polarity relay energizes
    auto st = select_pair(6, 3, 8);
    CHECK(st.pol1);
    CHECK_FALSE(st.pol2);
}

TEST_CASE("top pair at the stack boundary") {
    auto st = select_pair(8, 7, 8);
    CHECK(on_names(st) ==
          std::set<std::string>{"S6", "S7", "S8", "Spol1", "Sshort_a", "Sshort_b"});
}

TEST_CASE("selection validates its arguments") {
    CHECK_THROWS_AS(select_pair(2, 1, 1), std::invalid_argument);   // too few cells
    CHECK_THROWS_AS(select_pair(1, 1, 8), std::invalid_argument);   // k == l
    CHECK_THROWS_AS(select_pair(2, 3, 8), std::invalid_argument);   // k < l
    CHECK_THROWS_AS(select_pair(9, 1, 8), std::invalid_argument);   // k out of range
    CHECK_THROWS_AS(select_pair(5, 0, 8), std::invalid_argument);   // l out of range
}

TEST_CASE("transition count from the all-open state equals the number of closed contacts") {
    SwitchState idle{8};
    auto st = select_pair(7, 2, 8);
    CHECK(transition_increments(idle, st).size() == 5);
}

TEST_CASE("round-to-round transition toggles exactly the differing contacts") {
    auto a = select_pair(7, 2, 8);  // S1 S2 S6 S7 pol2
    auto b = select_pair(5, 4, 8);  // S3 S4 S5 pol2 short_a short_b
    auto inc = transition_increments(a, b);
    // S1,S2,S6,S7 open; S3,S4,S5 close; pol2 holds; both shorting switches close
    CHECK(inc.size() == 9);
}

TEST_CASE("transition count is symmetric and zero between identical states") {
    auto a = select_pair(6, 1, 8);
    auto b = select_pair(3, 2, 8);
    CHECK(transition_increments(a, b).size() == transition_increments(b, a).size());
    CHECK(transition_increments(a, a).empty());
}

TEST_CASE("tally accumulates per-switch counts and exposes the worst case") {
    SwitchState idle{8};
    auto a = select_pair(7, 2, 8);
    TransitionTally tally(idle.flat_size());
    tally.apply(idle, a);  // 5 contacts move
    tally.apply(a, idle);  // the same 5 move back
    CHECK(tally.total() == 10);
    CHECK(tally.max() == 2);
    TransitionTally fresh(idle.flat_size());
    CHECK(fresh.total() == 0);
    CHECK(fresh.max() == 0);
}
