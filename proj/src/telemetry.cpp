#include "eq/telemetry.hpp"

#include "eq/switch_state.hpp"

#include <cstdio>
#include <stdexcept>

namespace eq {

Telemetry::Telemetry(int n) : n_(n) {
    columns_.reserve(static_cast<std::size_t>(2 * n + 13));
    columns_.push_back("t_s");
    for (int i = 1; i <= n; ++i) columns_.push_back("vb_" + std::to_string(i));
    columns_.push_back("i_stack_A");
    columns_.push_back("src_idx");
    columns_.push_back("sink_idx");
    columns_.push_back("i_src_A");
    columns_.push_back("i_sink_A");
    columns_.push_back("phase");
    columns_.push_back("vc1_V");
    columns_.push_back("vc2_V");
    for (int i = 0; i < n + 4; ++i) columns_.push_back("trans_" + flat_name(n, i));
}

void Telemetry::append_row(const std::vector<double>& row) {
    if (row.size() != columns_.size()) throw std::invalid_argument("telemetry row width mismatch");
    rows_.insert(rows_.end(), row.begin(), row.end());
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_csv(const Telemetry& t, std::ostream& out) {
    const auto& cols = t.columns();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) out << ',';
        out << cols[c];
    }
    out << '\n';
    for (std::size_t r = 0; r < t.row_count(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c) out << ',';
            out << format_number(t.at(r, c));
        }
        out << '\n';
    }
}

}  // namespace eq
