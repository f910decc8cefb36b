#include "eq/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace eq {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad(const std::string& section, const std::string& key, const std::string& what) {
    throw ConfigError("[" + section + "]." + key + ": " + what);
}

double to_double(const std::string& section, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        double d = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    bad(section, key, "expected a number, got '" + v + "'");
}

long to_long(const std::string& section, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        long d = std::stol(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    bad(section, key, "expected an integer, got '" + v + "'");
}

bool to_bool(const std::string& section, const std::string& key, const std::string& v) {
    std::string s = trim(v);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "on" || s == "true" || s == "1" || s == "yes") return true;
    if (s == "off" || s == "false" || s == "0" || s == "no") return false;
    bad(section, key, "expected on/off, got '" + v + "'");
}

std::vector<double> to_doubles(const std::string& section, const std::string& key,
                               const std::string& v) {
    std::vector<double> out;
    std::string spaced = v;  // commas and spaces both separate list entries
    for (char& ch : spaced) {
        if (ch == ',') ch = ' ';
    }
    std::istringstream in(spaced);
    std::string tok;
    while (in >> tok) out.push_back(to_double(section, key, tok));
    if (out.empty()) bad(section, key, "expected a list of numbers");
    return out;
}

// "x:y x:y ..." pairs for curves.
std::vector<std::pair<double, double>> to_pairs(const std::string& section, const std::string& key,
                                                const std::string& v) {
    std::vector<std::pair<double, double>> out;
    std::istringstream in(v);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) bad(section, key, "expected x:y pairs, got '" + tok + "'");
        out.emplace_back(to_double(section, key, tok.substr(0, colon)),
                         to_double(section, key, tok.substr(colon + 1)));
    }
    if (out.empty()) bad(section, key, "expected x:y pairs");
    return out;
}

Segment parse_segment(const std::string& value) {
    const std::string section = "profile", key = "segment";
    std::istringstream in(value);
    std::string kind;
    if (!(in >> kind)) bad(section, key, "empty segment");

    auto next_number = [&](const char* what) {
        std::string tok;
        if (!(in >> tok)) bad(section, key, std::string("missing ") + what);
        return to_double(section, key, tok);
    };

    if (kind == "rest") {
        RestSeg seg;
        seg.duration_s = next_number("duration");
        return seg;
    }
    if (kind == "cc") {
        CCSeg seg;
        seg.current_a = next_number("current");
        std::string tok;
        while (in >> tok) {
            if (tok == "duration") {
                seg.duration_s = next_number("duration value");
            } else if (tok == "v_limit") {
                seg.v_limit = next_number("v_limit value");
            } else {
                bad(section, key, "unknown cc option '" + tok + "'");
            }
        }
        return seg;
    }
    if (kind == "cv") {
        CVSeg seg;
        seg.v_set = next_number("setpoint");
        bool have_limit = false, have_cutoff = false;
        std::string tok;
        while (in >> tok) {
            if (tok == "limit") {
                seg.i_limit = next_number("limit value");
                have_limit = true;
            } else if (tok == "cutoff") {
                seg.i_cutoff = next_number("cutoff value");
                have_cutoff = true;
            } else if (tok == "gain") {
                seg.gain = next_number("gain value");
            } else {
                bad(section, key, "unknown cv option '" + tok + "'");
            }
        }
        if (!have_limit || !have_cutoff) bad(section, key, "cv needs 'limit' and 'cutoff'");
        return seg;
    }
    if (kind == "step") {
        StepSeg seg;
        std::string tok;
        while (in >> tok) {
            if (tok == "duration") {
                seg.duration_s = next_number("duration value");
            } else {
                auto colon = tok.find(':');
                if (colon == std::string::npos) {
                    bad(section, key, "expected t:current, got '" + tok + "'");
                }
                seg.points.emplace_back(to_double(section, key, tok.substr(0, colon)),
                                        to_double(section, key, tok.substr(colon + 1)));
            }
        }
        if (seg.points.empty()) bad(section, key, "step needs at least one t:current point");
        return seg;
    }
    bad(section, key, "unknown segment kind '" + kind + "'");
}

// Indexed [cells] override like "r0_3"; returns (field, cell index) or
// nullopt when the key is not of that shape.
std::optional<std::pair<std::string, int>> split_indexed(const std::string& key) {
    auto us = key.rfind('_');
    if (us == std::string::npos || us + 1 >= key.size()) return std::nullopt;
    std::string suffix = key.substr(us + 1);
    if (!std::all_of(suffix.begin(), suffix.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    return std::pair{key.substr(0, us), std::stoi(suffix)};
}

void apply_cells_key(SimSetup& setup, const std::string& key, const std::string& value) {
    const std::string section = "cells";
    auto& cells = setup.scenario.cells;
    if (cells.empty()) bad(section, key, "set [stack].n before any [cells] key");

    if (key == "capacity_ah") {
        double d = to_double(section, key, value);
        for (auto& c : cells) c.capacity_ah = d;
    } else if (key == "r0_ohm") {
        double d = to_double(section, key, value);
        for (auto& c : cells) c.r0_ohm = d;
    } else if (key == "r1_ohm") {
        double d = to_double(section, key, value);
        for (auto& c : cells) c.r1_ohm = d;
    } else if (key == "c1_farad") {
        double d = to_double(section, key, value);
        for (auto& c : cells) c.c1_farad = d;
    } else if (key == "ocv") {
        PiecewiseLinear curve(to_pairs(section, key, value));
        for (auto& c : cells) c.ocv_curve = curve;
    } else if (key == "v_init") {
        auto vals = to_doubles(section, key, value);
        if (vals.size() != cells.size()) {
            bad(section, key, "expected " + std::to_string(cells.size()) + " voltages, got " +
                                  std::to_string(vals.size()));
        }
        setup.scenario.v_init = vals;
    } else if (auto indexed = split_indexed(key)) {
        auto [field, idx] = *indexed;
        if (idx < 1 || idx > static_cast<int>(cells.size())) {
            bad(section, key, "cell index out of range");
        }
        CellParams& c = cells[static_cast<std::size_t>(idx - 1)];
        double d = to_double(section, key, value);
        if (field == "capacity") {
            c.capacity_ah = d;
        } else if (field == "r0") {
            c.r0_ohm = d;
        } else if (field == "r1") {
            c.r1_ohm = d;
        } else if (field == "c1") {
            c.c1_farad = d;
        } else {
            bad(section, key, "unknown key");
        }
    } else {
        bad(section, key, "unknown key");
    }
}

}  // namespace

void apply_key(SimSetup& setup, const std::string& section, const std::string& key,
               const std::string& value) {
    if (section == "stack") {
        if (key == "n") {
            long n = to_long(section, key, value);
            if (n < 2 || n > 1024) bad(section, key, "cell count out of range");
            setup.scenario.n = static_cast<int>(n);
            setup.scenario.cells.assign(static_cast<std::size_t>(n), CellParams{});
            setup.scenario.v_init.clear();
        } else {
            bad(section, key, "unknown key");
        }
    } else if (section == "cells") {
        apply_cells_key(setup, key, value);
    } else if (section == "equalizer") {
        if (key == "v_tol") {
            setup.equalizer.v_tol = to_double(section, key, value);
        } else if (key == "delta_t") {
            setup.equalizer.delta_t = to_double(section, key, value);
        } else if (key == "time_gap") {
            setup.equalizer.time_gap = to_double(section, key, value);
        } else if (key == "i_eq") {
            setup.equalizer.i_eq = to_double(section, key, value);
            setup.converter.i_eq_a = setup.equalizer.i_eq;
        } else if (key == "compensation") {
            setup.equalizer.compensation = to_bool(section, key, value);
        } else if (key == "max_round_duration") {
            setup.equalizer.max_round_duration = to_double(section, key, value);
        } else {
            bad(section, key, "unknown key");
        }
    } else if (section == "converter") {
        if (key == "i_eq") {
            setup.converter.i_eq_a = to_double(section, key, value);
            setup.equalizer.i_eq = setup.converter.i_eq_a;
        } else if (key == "efficiency") {
            setup.converter.efficiency_curve = PiecewiseLinear(to_pairs(section, key, value));
        } else if (key == "rated_power") {
            setup.converter.rated_power_w = to_double(section, key, value);
        } else {
            bad(section, key, "unknown key");
        }
    } else if (section == "profile") {
        if (key == "segment") {
            setup.scenario.profile.push_back(parse_segment(value));
        } else {
            bad(section, key, "unknown key");
        }
    } else if (section == "sim") {
        if (key == "dt") {
            setup.scenario.dt = to_double(section, key, value);
        } else if (key == "duration") {
            setup.scenario.duration_s = to_double(section, key, value);
        } else if (key == "seed") {
            setup.scenario.seed = to_long(section, key, value);
        } else {
            bad(section, key, "unknown key");
        }
    } else if (section == "sweep") {
        if (key == "vary") {
            auto eq_pos = value.find('=');
            if (eq_pos == std::string::npos) {
                bad(section, key, "expected 'section.key = v1, v2, ...'");
            }
            std::string target = trim(value.substr(0, eq_pos));
            auto dot = target.find('.');
            if (dot == std::string::npos || dot == 0 || dot + 1 >= target.size()) {
                bad(section, key, "target must be section.key, got '" + target + "'");
            }
            SweepAxis axis;
            axis.section = target.substr(0, dot);
            axis.key = target.substr(dot + 1);
            std::string rest = value.substr(eq_pos + 1);
            std::size_t start = 0;
            while (start <= rest.size()) {
                auto comma = rest.find(',', start);
                std::string item = trim(comma == std::string::npos ? rest.substr(start)
                                                                   : rest.substr(start, comma - start));
                if (!item.empty()) axis.values.push_back(item);
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            if (axis.values.empty()) bad(section, key, "axis has no values");
            setup.sweep_axes.push_back(std::move(axis));
        } else {
            bad(section, key, "unknown key");
        }
    } else {
        throw ConfigError("[" + section + "]: unknown section");
    }
}

namespace {

SimSetup parse_json_config(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("JSON config must be an object of sections");

    auto scalar = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "on" : "off";
        return v.dump();
    };

    SimSetup setup;
    // [stack] first so the cell array exists before [cells] keys apply.
    const char* order[] = {"stack", "cells", "equalizer", "converter", "profile", "sim", "sweep"};
    for (const auto& item : j.items()) {
        bool known = std::any_of(std::begin(order), std::end(order),
                                 [&](const char* s) { return item.key() == s; });
        if (!known) throw ConfigError("[" + item.key() + "]: unknown section");
    }
    for (const char* section : order) {
        if (!j.contains(section)) continue;
        const auto& obj = j.at(section);
        if (!obj.is_object()) throw ConfigError("[" + std::string(section) + "]: must be an object");
        for (const auto& [key, v] : obj.items()) {
            // Plural array forms map onto the repeatable text keys.
            if (v.is_array() && (key == "segments" || key == "vary")) {
                std::string singular = key == "segments" ? "segment" : "vary";
                for (const auto& item : v) {
                    apply_key(setup, section, singular, scalar(item));
                }
            } else if (v.is_array() && (key == "ocv" || key == "efficiency")) {
                std::string joined;
                for (const auto& p : v) {
                    if (!p.is_array() || p.size() != 2) {
                        throw ConfigError("[" + std::string(section) + "]." + key +
                                          ": expected [[x, y], ...]");
                    }
                    if (!joined.empty()) joined += ' ';
                    joined += p[0].dump() + ":" + p[1].dump();
                }
                apply_key(setup, section, key, joined);
            } else if (v.is_array()) {
                std::string joined;
                for (const auto& item : v) {
                    if (!joined.empty()) joined += ' ';
                    joined += scalar(item);
                }
                apply_key(setup, section, key, joined);
            } else {
                apply_key(setup, section, key, scalar(v));
            }
        }
    }
    return setup;
}

}  // namespace

SimSetup parse_config(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_json_config(text);
    }

    SimSetup setup;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) {
                throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
            }
            continue;
        }
        auto eq_pos = line.find('=');
        if (eq_pos == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        if (section.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key before any [section]");
        }
        apply_key(setup, section, trim(line.substr(0, eq_pos)), trim(line.substr(eq_pos + 1)));
    }
    return setup;
}

SimSetup load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace eq
