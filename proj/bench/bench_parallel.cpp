// Copyright 2026 The mzent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compares the OpenMP kernels against their serial references and checks
// that both produce identical output while timing them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzent/optimizer.hpp"
#include "mzent/scenario.hpp"
#include "mzent/sweep.hpp"

using namespace mzent;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::string_view(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const int n = quick ? 400 : 1500;
        std::vector<HeatmapCell> ser, par;
        const double t_ser = time_ms([&] { ser = heatmap_cells_serial(n); });
        const double t_par = time_ms([&] { par = heatmap_cells(n); });
        bool same = ser.size() == par.size();
        for (std::size_t k = 0; same && k < ser.size(); ++k) {
            same = ser[k].x1 == par[k].x1 && ser[k].x2 == par[k].x2 && ser[k].entropy == par[k].entropy;
        }
        char label[64];
        std::snprintf(label, sizeof label, "heatmap %dx%d", n, n);
        row(label, t_ser, t_par, same);
    }

    {
        const int n = quick ? 200 : 2000;
        const CouplingAngle theta{std::numbers::pi / 2.0};
        std::vector<DecoherenceRow> ser, par;
        const double t_ser = time_ms([&] { ser = decoherence_sweep_serial(theta, n); });
        const double t_par = time_ms([&] { par = decoherence_sweep(theta, n); });
        bool same = ser.size() == par.size();
        for (std::size_t k = 0; same && k < ser.size(); ++k) {
            same = ser[k].gamma == par[k].gamma && ser[k].negativity == par[k].negativity &&
                   ser[k].concurrence == par[k].concurrence;
        }
        char label[64];
        std::snprintf(label, sizeof label, "decohere sweep n=%d", n);
        row(label, t_ser, t_par, same);
    }

    {
        GainConfig g;
        g.gain_G = 1.0;
        g.loss_L = 1.0;
        g.w_grid = quick ? 11 : 21;
        g.su2_grid = quick ? 7 : 11;
        g.refine_iters = 1;
        const Scenario s{CouplingAngle{std::numbers::pi / 3.0}, CouplingAngle{std::numbers::pi / 3.0},
                         EnvOverlap{}};
        OptimizationResult ser, par;
        const double t_ser = time_ms([&] { ser = optimize_serial(s, g); });
        const double t_par = time_ms([&] { par = optimize(s, g); });
        const bool same = ser.n_star == par.n_star && ser.w_star == par.w_star &&
                          ser.u_angles == par.u_angles && ser.probe_count == par.probe_count;
        char label[64];
        std::snprintf(label, sizeof label, "optimize %dx%d^3 grid", g.w_grid, g.su2_grid);
        row(label, t_ser, t_par, same);
    }

    return 0;
}
