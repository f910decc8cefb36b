#include "eq/netlist.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace eq {

namespace {

// "N<digits>" with no leading zeros beyond "N0" itself.
int parse_stack_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'N') return -1;
    int value = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
    if (ec != std::errc{} || ptr != name.data() + name.size()) return -1;
    if (name.size() > 2 && name[1] == '0') return -1;
    return value;
}

std::string seg(const char* wire, int j) {
    return std::string(wire) + "_a" + std::to_string(j);
}

}  // namespace

Netlist::Netlist(int cell_count) : n_(cell_count) {
    elements_.resize(static_cast<std::size_t>(cell_count) + 4);
}

int Netlist::node_id(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    return it == ids_.end() ? -1 : it->second;
}

int Netlist::ensure_node(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    ids_.emplace(name, id);
    stack_idx_.push_back(parse_stack_index(name));
    return id;
}

void Netlist::add_edge(int flat_index, const std::string& a, const std::string& b, bool when_on) {
    if (flat_index < 0 || flat_index >= static_cast<int>(elements_.size())) {
        throw std::out_of_range("switch index out of range for netlist");
    }
    CondEdge e;
    e.node_a = ensure_node(a);
    e.node_b = ensure_node(b);
    e.when_on = when_on;
    elements_[static_cast<std::size_t>(flat_index)].push_back(e);
}

Netlist Netlist::selection_ladder(int n) {
    if (n < 2) throw std::invalid_argument("need at least two cells");
    Netlist nl(n);

    // Make reserved names dense at the front so serialized output is stable.
    for (int j = 0; j <= n; ++j) nl.ensure_node("N" + std::to_string(j));
    for (const char* p : {"P1+", "P1-", "P2+", "P2-"}) nl.ensure_node(p);

    for (int parity = 1; parity >= 0; --parity) {
        bool odd = parity == 1;
        const char* X = odd ? "XO" : "XE";
        const char* Y = odd ? "YO" : "YE";
        int lowest = odd ? 1 : 2;
        int top = n % 2 == parity % 2 ? n : n - 1;
        if (top < lowest) continue;  // n=2 has no even... only possible for malformed n

        for (int j = top; j >= lowest; j -= 2) {
            int flat = j - 1;
            std::string x_above = seg(X, j);
            std::string x_below = j - 2 >= lowest ? seg(X, j - 2) : std::string(X) + "_tail";
            nl.add_edge(flat, x_above, x_below, false);
            nl.add_edge(flat, x_above, "N" + std::to_string(j), true);

            if (j == 1) {
                // S1's second pole gates the bottom of the stack instead of
                // threading the secondary rail.
                nl.add_edge(flat, "N0", "G", true);
                continue;
            }
            int y_lowest = odd ? 3 : 2;
            std::string y_above = seg(Y, j);
            std::string y_below = j - 2 >= y_lowest ? seg(Y, j - 2) : std::string(Y) + "_tail";
            nl.add_edge(flat, y_above, y_below, false);
            nl.add_edge(flat, y_above, x_below, true);
        }
    }

    int top_odd = n % 2 == 1 ? n : n - 1;
    int top_even = n % 2 == 0 ? n : n - 1;
    std::string xo_head = seg("XO", top_odd);
    std::string xe_head = seg("XE", top_even);
    // A secondary rail with no threaded switch is a bare stub of wire.
    std::string yo_head = top_odd >= 3 ? seg("YO", top_odd) : "YO_tail";
    std::string ye_head = seg("YE", top_even);

    int pol1 = n, pol2 = n + 1, short_a = n + 2, short_b = n + 3;
    nl.add_edge(pol1, xo_head, "P1+", false);
    nl.add_edge(pol1, xe_head, "P1-", false);
    nl.add_edge(pol1, xo_head, "P1-", true);
    nl.add_edge(pol1, xe_head, "P1+", true);

    nl.add_edge(pol2, yo_head, "P2+", false);
    nl.add_edge(pol2, ye_head, "P2-", false);
    nl.add_edge(pol2, "G", "P2-", false);
    nl.add_edge(pol2, yo_head, "P2-", true);
    nl.add_edge(pol2, ye_head, "P2+", true);

    nl.add_edge(short_a, "P1-", "M", true);
    nl.add_edge(short_b, "M", "P2+", true);
    return nl;
}

int switch_index(int n, std::string_view name) {
    if (name == "Spol1") return n;
    if (name == "Spol2") return n + 1;
    if (name == "Sshort_a") return n + 2;
    if (name == "Sshort_b") return n + 3;
    if (name.size() >= 2 && name[0] == 'S') {
        int j = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), j);
        if (ec == std::errc{} && ptr == name.data() + name.size() && j >= 1 && j <= n) {
            return j - 1;
        }
    }
    return -1;
}

std::string Netlist::serialize() const {
    std::ostringstream out;
    out << "version 1\n";
    out << "n " << n_ << "\n";
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        for (const CondEdge& e : elements_[i]) {
            out << "edge " << flat_name(n_, static_cast<int>(i)) << ' '
                << node_name(e.node_a) << ' ' << node_name(e.node_b) << ' '
                << (e.when_on ? "on" : "off") << "\n";
        }
    }
    return out.str();
}

Netlist Netlist::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int version = -1;
    int n = -1;
    Netlist nl(0);
    bool header_done = false;
    int line_no = 0;

    auto fail = [&](const std::string& what) {
        throw std::runtime_error("netlist line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;

        if (tok == "version") {
            if (!(ls >> version) || version != 1) fail("unsupported version");
        } else if (tok == "n") {
            if (!(ls >> n) || n < 2) fail("bad cell count");
            nl = Netlist(n);
            header_done = true;
        } else if (tok == "edge") {
            if (!header_done) fail("edge before n header");
            std::string sw, a, b, state;
            if (!(ls >> sw >> a >> b >> state)) fail("expected: edge <switch> <a> <b> <on|off>");
            int flat = switch_index(n, sw);
            if (flat < 0) fail("unknown switch " + sw);
            if (state != "on" && state != "off") fail("state must be on or off");
            nl.add_edge(flat, a, b, state == "on");
        } else {
            fail("unknown directive " + tok);
        }
    }
    if (version != 1) throw std::runtime_error("netlist: missing version header");
    if (!header_done) throw std::runtime_error("netlist: missing n header");
    return nl;
}

}  // namespace eq
