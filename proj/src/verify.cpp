#include "eq/verify.hpp"

#include <optional>

namespace eq {

namespace {

std::optional<Violation> check_pair(const Netlist& nl, int k, int l) {
    Resolution res = resolve_connectivity(nl, select_pair(k, l, nl.cell_count()));

    Violation v;
    v.k = k;
    v.l = l;
    v.faults = res.faults;
    if (!res.faults.empty()) {
        v.message = "wiring fault";
        for (const Fault& f : res.faults) {
            v.message += std::string("; ") + fault_kind_name(f.kind) + ": " + f.detail;
        }
        return v;
    }
    auto check = [&](const char* label, const PortResolution& port, int want) -> bool {
        if (port.cell != want) {
            v.message = std::string(label) + " routed to cell " +
                        (port.cell ? std::to_string(*port.cell) : std::string("none")) +
                        ", expected " + std::to_string(want);
            return false;
        }
        if (port.polarity != Polarity::Correct) {
            v.message = std::string(label) + " polarity reversed on cell " + std::to_string(want);
            return false;
        }
        return true;
    };
    if (!check("port1", res.port1, k)) return v;
    if (!check("port2", res.port2, l)) return v;
    return std::nullopt;
}

}  // namespace

VerifyReport verify_network(const Netlist& nl, bool parallel) {
    int n = nl.cell_count();

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int k = 2; k <= n; ++k) {
        for (int l = 1; l < k; ++l) pairs.emplace_back(k, l);
    }

    std::vector<std::optional<Violation>> results(pairs.size());
    if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (long i = 0; i < static_cast<long>(pairs.size()); ++i) {
            auto [k, l] = pairs[static_cast<std::size_t>(i)];
            results[static_cast<std::size_t>(i)] = check_pair(nl, k, l);
        }
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            results[i] = check_pair(nl, pairs[i].first, pairs[i].second);
        }
    }

    VerifyReport report;
    report.n = n;
    report.pairs_checked = static_cast<long>(pairs.size());
    for (auto& r : results) {
        if (r) report.violations.push_back(std::move(*r));
    }
    return report;
}

}  // namespace eq
