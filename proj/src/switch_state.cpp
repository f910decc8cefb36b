#include "eq/switch_state.hpp"

#include <algorithm>
#include <stdexcept>

namespace eq {

bool SwitchState::flat(int idx) const {
    if (idx < n) return s[static_cast<std::size_t>(idx)] != 0;
    switch (idx - n) {
        case 0: return pol1;
        case 1: return pol2;
        case 2: return short_a;
        case 3: return short_b;
    }
    throw std::out_of_range("switch index");
}

std::string flat_name(int n, int idx) {
    if (idx < n) return "S" + std::to_string(idx + 1);
    switch (idx - n) {
        case 0: return "Spol1";
        case 1: return "Spol2";
        case 2: return "Sshort_a";
        case 3: return "Sshort_b";
    }
    throw std::out_of_range("switch index");
}

SwitchState select_pair(int k, int l, int n) {
    if (n < 2) throw std::invalid_argument("need at least two cells");
    if (l < 1 || k > n || k <= l) throw std::invalid_argument("require 1 <= l < k <= n");

    SwitchState st(n);
    for (int j : {k, k - 1, l, l - 1}) {
        if (j >= 1) st.s[static_cast<std::size_t>(j - 1)] = 1;
    }
    st.pol1 = k % 2 == 0;
    st.pol2 = l % 2 == 0;
    bool adjacent = k == l + 1;
    st.short_a = adjacent;
    st.short_b = adjacent;
    return st;
}

std::vector<int> transition_increments(const SwitchState& prev, const SwitchState& next) {
    if (prev.n != next.n) throw std::invalid_argument("switch state size mismatch");
    std::vector<int> changed;
    for (int i = 0; i < prev.flat_size(); ++i) {
        if (prev.flat(i) != next.flat(i)) changed.push_back(i);
    }
    return changed;
}

void TransitionTally::apply(const SwitchState& prev, const SwitchState& next) {
    for (int idx : transition_increments(prev, next)) {
        ++counts[static_cast<std::size_t>(idx)];
    }
}

long TransitionTally::max() const {
    if (counts.empty()) return 0;
    return *std::max_element(counts.begin(), counts.end());
}

long TransitionTally::total() const {
    long t = 0;
    for (long c : counts) t += c;
    return t;
}

}  // namespace eq
