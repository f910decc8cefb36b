#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eq {

// Per-step record of a run, stored as flat numeric rows with a fixed column
// layout: t_s, vb_1..vb_n, i_stack_A, src_idx, sink_idx, i_src_A, i_sink_A,
// phase, vc1_V, vc2_V, trans_S1..trans_Sn, trans_Spol1, trans_Spol2,
// trans_Sshort_a, trans_Sshort_b. Transition columns are cumulative.
class Telemetry {
public:
    explicit Telemetry(int n = 0);

    int cell_count() const { return n_; }
    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t row_count() const { return rows_.size() / columns_.size(); }
    double at(std::size_t row, std::size_t col) const { return rows_[row * columns_.size() + col]; }

    void append_row(const std::vector<double>& row);

    // Column indices for consumers.
    std::size_t col_t() const { return 0; }
    std::size_t col_vb(int cell_1based) const { return static_cast<std::size_t>(cell_1based); }
    std::size_t col_i_stack() const { return static_cast<std::size_t>(n_) + 1; }
    std::size_t col_src() const { return static_cast<std::size_t>(n_) + 2; }
    std::size_t col_snk() const { return static_cast<std::size_t>(n_) + 3; }
    std::size_t col_i_src() const { return static_cast<std::size_t>(n_) + 4; }
    std::size_t col_i_sink() const { return static_cast<std::size_t>(n_) + 5; }
    std::size_t col_phase() const { return static_cast<std::size_t>(n_) + 6; }
    std::size_t col_vc1() const { return static_cast<std::size_t>(n_) + 7; }
    std::size_t col_vc2() const { return static_cast<std::size_t>(n_) + 8; }
    std::size_t col_trans(int flat_index) const {
        return static_cast<std::size_t>(n_) + 9 + static_cast<std::size_t>(flat_index);
    }

private:
    int n_ = 0;
    std::vector<std::string> columns_;
    std::vector<double> rows_;
};

// Fixed six-significant-digit formatting so reruns diff byte-for-byte.
void write_csv(const Telemetry& t, std::ostream& out);

std::string format_number(double v);

}  // namespace eq
