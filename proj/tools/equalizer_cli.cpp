#include "eq/baseline.hpp"
#include "eq/config.hpp"
#include "eq/counts.hpp"
#include "eq/netlist.hpp"
#include "eq/sim.hpp"
#include "eq/sweep.hpp"
#include "eq/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, bool verbose) {
    eq::SimSetup setup = eq::load_config_file(config_path);
    eq::RunResult result = eq::run(setup.scenario, setup.equalizer, setup.converter);

    fs::create_directories(out_dir);
    std::ostringstream csv;
    eq::write_csv(result.telemetry, csv);
    write_file(fs::path(out_dir) / "telemetry.csv", csv.str());
    write_file(fs::path(out_dir) / "summary.json",
               eq::summary_json(result.summary).dump(2) + "\n");

    const eq::Summary& s = result.summary;
    std::cout << "simulated " << setup.scenario.duration_s << " s, " << result.telemetry.row_count()
              << " steps\n"
              << "converged=" << (s.converged ? "yes" : "no")
              << " convergence_time_s=" << eq::format_number(s.convergence_time_s)
              << " rounds=" << s.rounds << " max_transitions=" << s.max_switch_transitions
              << " total_transitions=" << s.total_switch_transitions
              << " final_spread_v=" << eq::format_number(s.final_spread_v) << "\n";
    if (verbose) {
        std::cout << "energy_in_wh=" << eq::format_number(s.energy_in_wh)
                  << " energy_out_wh=" << eq::format_number(s.energy_out_wh)
                  << " energy_loss_wh=" << eq::format_number(s.energy_loss_wh)
                  << " clamp_events=" << s.clamp_events << "\n";
    }
    std::cout << "wrote " << (fs::path(out_dir) / "telemetry.csv").string() << " and summary.json\n";
    return kExitOk;
}

int cmd_verify(int n, const std::string& netlist_path, bool verbose) {
    eq::Netlist nl = netlist_path.empty()
                         ? eq::Netlist::selection_ladder(n)
                         : [&] {
                               std::ifstream in(netlist_path, std::ios::binary);
                               if (!in) throw std::runtime_error("cannot open " + netlist_path);
                               std::ostringstream buf;
                               buf << in.rdbuf();
                               return eq::Netlist::parse(buf.str());
                           }();

    eq::VerifyReport report = eq::verify_network(nl);
    if (verbose) {
        for (const auto& v : report.violations) {
            std::cout << "pair (" << v.k << "," << v.l << "): " << v.message << "\n";
        }
    }
    std::cout << "n=" << report.n << " pairs=" << report.pairs_checked
              << " violations=" << report.violations.size() << "\n";
    return report.ok() ? kExitOk : kExitVerification;
}

int cmd_compare(int n) {
    std::cout << "pair-selection networks at n=" << n << "\n";
    std::cout << "topology,impl,sel_mosfet,sel_dpdt,sel_spst,conv_mosfet,conv_cap,conv_ind,"
                 "conv_trans,conv_diode,eff_min,eff_max\n";
    for (const auto& id : eq::selection_topologies()) {
        for (auto impl : {eq::SwitchImpl::Mosfet, eq::SwitchImpl::Relay}) {
            auto c = eq::selection_comparison(id, impl, n);
            std::cout << c.id << ',' << (impl == eq::SwitchImpl::Mosfet ? "mosfet" : "relay") << ','
                      << c.sel_mosfet << ',' << c.sel_dpdt << ',' << c.sel_spst << ','
                      << c.conv_mosfet << ',' << c.conv_capacitor << ',' << c.conv_inductor << ','
                      << c.conv_transformer << ',' << c.conv_diode << ','
                      << eq::format_number(c.eff_min) << ',' << eq::format_number(c.eff_max)
                      << "\n";
        }
    }

    auto ladder = eq::selection_comparison("selective_ladder", eq::SwitchImpl::Relay, n);
    auto matrix = eq::selection_comparison("flyback_matrix", eq::SwitchImpl::Relay, n);
    std::cout << "dpdt ratio (this network / full matrix) = "
              << eq::format_number(static_cast<double>(ladder.sel_dpdt) /
                                   static_cast<double>(matrix.sel_dpdt))
              << "\n\n";

    std::cout << "equalizer architectures at n=" << n << "\n";
    std::cout << "architecture,mosfet,diode,dpdt,spst,capacitor,inductor,transformer,"
                 "drivers_hf,drivers_lf,eff_min,eff_max\n";
    for (const auto& id : eq::equalizer_rows()) {
        auto c = eq::equalizer_comparison(id, n);
        std::cout << c.id << ',' << c.mosfet << ',' << c.diode << ',' << c.dpdt << ',' << c.spst
                  << ',' << c.capacitor << ',' << c.inductor << ',' << c.transformer << ','
                  << c.drivers_hf << ',' << c.drivers_lf << ','
                  << (c.eff_min ? eq::format_number(*c.eff_min) : "-") << ','
                  << (c.eff_max ? eq::format_number(*c.eff_max) : "-") << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              const std::vector<std::string>& grid_args, bool verbose) {
    eq::SimSetup setup = eq::load_config_file(config_path);
    for (const std::string& g : grid_args) {
        // Same grammar as a [sweep] vary line: section.key=v1,v2,...
        eq::apply_key(setup, "sweep", "vary", g);
    }

    eq::SweepResult result = eq::run_sweep(setup, true);

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "sweep.csv", eq::sweep_csv(result));
    for (std::size_t p = 0; p < result.points.size(); ++p) {
        fs::path dir = fs::path(out_dir) / ("point_" + std::to_string(p));
        fs::create_directories(dir);
        if (result.points[p].failed) {
            write_file(dir / "error.txt", result.points[p].error + "\n");
        } else {
            write_file(dir / "summary.json",
                       eq::summary_json(result.points[p].summary).dump(2) + "\n");
        }
    }
    std::string ratios = eq::compensation_ratio_report(result);
    if (!ratios.empty()) {
        write_file(fs::path(out_dir) / "ratios.txt", ratios);
        if (verbose) std::cout << ratios;
    }

    std::size_t failed = 0;
    for (const auto& p : result.points) failed += p.failed;
    std::cout << "swept " << result.points.size() << " points (" << failed << " failed), wrote "
              << (fs::path(out_dir) / "sweep.csv").string() << "\n";
    return failed == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selection-switch cell-to-cell equalizer simulator and verifier"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", netlist_path;
    std::vector<std::string> grid_args;
    int n = 8;
    bool verbose = false;
    app.add_flag("--verbose", verbose, "print extra detail");

    auto* sim = app.add_subcommand("simulate", "run one scenario, write telemetry and summary");
    sim->add_option("--config", config_path, "scenario config file")->required();
    sim->add_option("--out", out_dir, "output directory")->envname("EQUALIZER_OUT");

    auto* ver = app.add_subcommand("verify-network", "check every pair selection for wiring faults");
    ver->add_option("--n", n, "cell count for the built-in wiring");
    ver->add_option("--netlist", netlist_path, "verify a wiring loaded from a netlist file");

    auto* cmp = app.add_subcommand("compare", "print component-count comparison tables");
    cmp->add_option("--n", n, "cell count the closed-form counts are evaluated at");

    auto* swp = app.add_subcommand("sweep", "run a parameter grid of scenarios");
    swp->add_option("--config", config_path, "scenario config file with a [sweep] section")
        ->required();
    swp->add_option("--out", out_dir, "output directory")->envname("EQUALIZER_OUT");
    swp->add_option("--grid", grid_args,
                    "extra axis 'section.key=v1,v2,...' (repeatable, adds to [sweep])");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Collapse the parser's per-error-class codes onto the documented
        // contract: 0 for --help, 1 for any bad command line.
        return app.exit(e) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (sim->parsed()) return cmd_simulate(config_path, out_dir, verbose);
        if (ver->parsed()) {
            if (n < 2) {
                std::cerr << "error: --n must be at least 2\n";
                return kExitValidation;
            }
            return cmd_verify(n, netlist_path, verbose);
        }
        if (cmp->parsed()) {
            if (n < 2) {
                std::cerr << "error: --n must be at least 2\n";
                return kExitValidation;
            }
            return cmd_compare(n);
        }
        if (swp->parsed()) return cmd_sweep(config_path, out_dir, grid_args, verbose);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
