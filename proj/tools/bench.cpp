// Timing harness for the two OpenMP fan-outs (pair verification, parameter
// sweeps) against their serial reference paths.  Speedups track the core
// count of the host; on a single-core box both columns should be ~equal.
#include "eq/config.hpp"
#include "eq/netlist.hpp"
#include "eq/sweep.hpp"
#include "eq/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_s(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void bench_verify(int n) {
    eq::Netlist nl = eq::Netlist::selection_ladder(n);
    std::size_t pairs = 0;
    double serial = time_s([&] { pairs = eq::verify_network(nl, false).pairs_checked; });
    double parallel = time_s([&] { (void)eq::verify_network(nl, true); });
    std::printf("verify  n=%-4d pairs=%-6zu serial=%8.4fs parallel=%8.4fs speedup=%.2fx\n", n,
                pairs, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

void bench_sweep() {
    const char* cfg = R"([stack]
n = 8
[cells]
v_init = 3.75 3.62 3.59 3.65 3.55 3.68 3.60 3.63
[equalizer]
v_tol = 0.01
[sim]
dt = 0.5
duration = 1200
[sweep]
vary = equalizer.i_eq = 0.3, 0.4, 0.5, 0.6
vary = equalizer.compensation = on, off
)";
    eq::SimSetup setup = eq::parse_config(cfg);
    std::size_t points = 0;
    double serial = time_s([&] { points = eq::run_sweep(setup, false).points.size(); });
    double parallel = time_s([&] { (void)eq::run_sweep(setup, true); });
    std::printf("sweep   points=%-4zu           serial=%8.4fs parallel=%8.4fs speedup=%.2fx\n",
                points, serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads=%d\n", omp_get_max_threads());
#else
    std::printf("openmp not available; both paths run serially\n");
#endif
    for (int n : {16, 64, 128, 256}) bench_verify(n);
    bench_sweep();
    return 0;
}
