#include "eq/resolve.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace eq {

UnionFind::UnionFind(int size)
    : parent_(static_cast<std::size_t>(size)), rank_(static_cast<std::size_t>(size), 0) {
    for (int i = 0; i < size; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

int UnionFind::find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
        auto& p = parent_[static_cast<std::size_t>(x)];
        p = parent_[static_cast<std::size_t>(p)];
        x = p;
    }
    return x;
}

void UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) {
        ++rank_[static_cast<std::size_t>(a)];
    }
}

const char* fault_kind_name(FaultKind k) {
    switch (k) {
        case FaultKind::Short: return "short";
        case FaultKind::FloatingTerminal: return "floating_terminal";
        case FaultKind::MultiCellSpan: return "multi_cell_span";
    }
    return "?";
}

void classify_port(const std::string& label, std::optional<int> plus_tap,
                   std::optional<int> minus_tap, bool terminals_joined,
                   PortResolution& out, std::vector<Fault>& faults) {
    out.plus_stack = plus_tap;
    out.minus_stack = minus_tap;
    if (terminals_joined) {
        faults.push_back({FaultKind::Short, label + " terminals conduct to each other"});
        return;
    }
    if (!plus_tap) {
        faults.push_back({FaultKind::FloatingTerminal, label + "+ reaches no stack tap"});
    }
    if (!minus_tap) {
        faults.push_back({FaultKind::FloatingTerminal, label + "- reaches no stack tap"});
    }
    if (!plus_tap || !minus_tap) return;

    int hi = *plus_tap;
    int lo = *minus_tap;
    if (hi == lo + 1) {
        out.cell = hi;
        out.polarity = Polarity::Correct;
    } else if (lo == hi + 1) {
        out.cell = lo;
        out.polarity = Polarity::Reversed;
    } else {
        faults.push_back({FaultKind::MultiCellSpan, label + " spans N" + std::to_string(std::min(hi, lo)) +
                                                        " to N" + std::to_string(std::max(hi, lo))});
    }
}

Resolution resolve_connectivity(const Netlist& nl, const SwitchState& st) {
    if (st.n != nl.cell_count()) {
        throw std::invalid_argument("switch state does not match netlist cell count");
    }

    UnionFind uf(nl.node_count());
    const auto& elements = nl.elements();
    for (int i = 0; i < st.flat_size(); ++i) {
        bool on = st.flat(i);
        for (const CondEdge& e : elements[static_cast<std::size_t>(i)]) {
            if (e.when_on == on) uf.unite(e.node_a, e.node_b);
        }
    }

    // Stack taps reachable from each component root, deduplicated.
    std::map<int, std::vector<int>> taps;
    for (int id = 0; id < nl.node_count(); ++id) {
        int tap = nl.stack_index(id);
        if (tap < 0) continue;
        taps[uf.find(id)].push_back(tap);
    }

    Resolution res;
    for (auto& [root, list] : taps) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (list.size() < 2) continue;
        std::string detail = "stack taps";
        for (int t : list) detail += " N" + std::to_string(t);
        detail += " conduct to each other";
        res.faults.push_back({FaultKind::Short, detail});
    }

    // Lowest tap on the terminal's conductor; a shorted conductor is already
    // reported above, so classification still proceeds deterministically.
    auto terminal_tap = [&](int id) -> std::optional<int> {
        if (id < 0) return std::nullopt;
        auto it = taps.find(uf.find(id));
        if (it == taps.end() || it->second.empty()) return std::nullopt;
        return it->second.front();
    };
    auto joined = [&](int a, int b) { return a >= 0 && b >= 0 && uf.find(a) == uf.find(b); };

    int p1p = nl.node_id("P1+"), p1m = nl.node_id("P1-");
    int p2p = nl.node_id("P2+"), p2m = nl.node_id("P2-");
    classify_port("port1", terminal_tap(p1p), terminal_tap(p1m), joined(p1p, p1m),
                  res.port1, res.faults);
    classify_port("port2", terminal_tap(p2p), terminal_tap(p2m), joined(p2p, p2m),
                  res.port2, res.faults);
    return res;
}

}  // namespace eq
