#include "eq/baseline.hpp"

#include <stdexcept>

namespace eq {

MatrixState matrix_select_pair(int k, int l, int n) {
    if (n < 2) throw std::invalid_argument("need at least two cells");
    if (l < 1 || k > n || k <= l) throw std::invalid_argument("require 1 <= l < k <= n");
    MatrixState st(n);
    st.plus_sel[static_cast<std::size_t>(k - 1)] = SelectorPos::Port1;
    st.minus_sel[static_cast<std::size_t>(k - 1)] = SelectorPos::Port1;
    st.plus_sel[static_cast<std::size_t>(l - 1)] = SelectorPos::Port2;
    st.minus_sel[static_cast<std::size_t>(l - 1)] = SelectorPos::Port2;
    return st;
}

Resolution resolve_matrix(const MatrixState& st) {
    // Node ids: 0..n stack taps, then P1+, P1-, P2+, P2-.
    int n = st.n;
    int p1p = n + 1, p1m = n + 2, p2p = n + 3, p2m = n + 4;
    UnionFind uf(n + 5);

    for (int j = 1; j <= n; ++j) {
        switch (st.plus_sel[static_cast<std::size_t>(j - 1)]) {
            case SelectorPos::Off: break;
            case SelectorPos::Port1: uf.unite(j, p1p); break;
            case SelectorPos::Port2: uf.unite(j, p2p); break;
        }
        switch (st.minus_sel[static_cast<std::size_t>(j - 1)]) {
            case SelectorPos::Off: break;
            case SelectorPos::Port1: uf.unite(j - 1, p1m); break;
            case SelectorPos::Port2: uf.unite(j - 1, p2m); break;
        }
    }

    Resolution res;
    std::vector<std::vector<int>> taps(static_cast<std::size_t>(n + 5));
    for (int tap = 0; tap <= n; ++tap) {
        taps[static_cast<std::size_t>(uf.find(tap))].push_back(tap);
    }
    for (const auto& list : taps) {
        if (list.size() < 2) continue;
        std::string detail = "stack taps";
        for (int t : list) detail += " N" + std::to_string(t);
        detail += " conduct to each other";
        res.faults.push_back({FaultKind::Short, detail});
    }

    auto terminal_tap = [&](int id) -> std::optional<int> {
        const auto& list = taps[static_cast<std::size_t>(uf.find(id))];
        if (list.empty()) return std::nullopt;
        return list.front();
    };
    auto joined = [&](int a, int b) { return uf.find(a) == uf.find(b); };

    classify_port("port1", terminal_tap(p1p), terminal_tap(p1m), joined(p1p, p1m),
                  res.port1, res.faults);
    classify_port("port2", terminal_tap(p2p), terminal_tap(p2m), joined(p2p, p2m),
                  res.port2, res.faults);
    return res;
}

long matrix_active_count(const MatrixState& st) {
    long c = 0;
    for (auto p : st.plus_sel) c += p != SelectorPos::Off;
    for (auto p : st.minus_sel) c += p != SelectorPos::Off;
    return c;
}

}  // namespace eq
