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

#include "mzent/sweep.hpp"

#include <stdexcept>

#include "mzent/entanglement.hpp"

namespace mzent {

namespace {

void require_grid(int grid_n) {
    if (grid_n < 2) {
        throw std::invalid_argument("sweep: grid must have at least 2 points");
    }
}

HeatmapCell heatmap_cell(int grid_n, long long flat) {
    const int n = grid_n;
    const int i = static_cast<int>(flat) / n;
    const int j = static_cast<int>(flat) % n;
    const double step = 1.0 / static_cast<double>(n - 1);
    double x1 = static_cast<double>(i) * step;
    double x2 = static_cast<double>(j) * step;
    if (i == 0 && j == 0) {
        x1 = step;  // keep the corner inside the domain; stays on the diagonal
        x2 = step;
    }
    return HeatmapCell{x1, x2, analytic_entropy(x1, x2).value};
}

DecoherenceRow decoherence_row(CouplingAngle theta, int grid_n, long long flat) {
    const int k = static_cast<int>(flat) / 2;
    const Port port = flat % 2 == 0 ? Port::R : Port::U;
    const double gamma = static_cast<double>(k) / static_cast<double>(grid_n - 1);
    const Scenario s{theta, theta, EnvOverlap{Cx{gamma, 0.0}}};
    const DensityMatrix rho = postselect_mixed(s, port);
    return DecoherenceRow{gamma, port, negativity(rho).value, concurrence(rho).value};
}

}  // namespace

std::vector<HeatmapCell> heatmap_cells(int grid_n) {
    require_grid(grid_n);
    const long long total = static_cast<long long>(grid_n) * grid_n;
    std::vector<HeatmapCell> cells(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
    for (long long flat = 0; flat < total; ++flat) {
        cells[static_cast<std::size_t>(flat)] = heatmap_cell(grid_n, flat);
    }
    return cells;
}

std::vector<HeatmapCell> heatmap_cells_serial(int grid_n) {
    require_grid(grid_n);
    const long long total = static_cast<long long>(grid_n) * grid_n;
    std::vector<HeatmapCell> cells(static_cast<std::size_t>(total));
    for (long long flat = 0; flat < total; ++flat) {
        cells[static_cast<std::size_t>(flat)] = heatmap_cell(grid_n, flat);
    }
    return cells;
}

std::vector<DecoherenceRow> decoherence_sweep(CouplingAngle theta, int grid_n) {
    require_grid(grid_n);
    if (theta.theta() <= 0.0) {
        throw std::invalid_argument("decoherence_sweep: theta must lie in (0, pi/2]");
    }
    const long long total = 2LL * grid_n;
    std::vector<DecoherenceRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
    for (long long flat = 0; flat < total; ++flat) {
        rows[static_cast<std::size_t>(flat)] = decoherence_row(theta, grid_n, flat);
    }
    return rows;
}

std::vector<DecoherenceRow> decoherence_sweep_serial(CouplingAngle theta, int grid_n) {
    require_grid(grid_n);
    if (theta.theta() <= 0.0) {
        throw std::invalid_argument("decoherence_sweep: theta must lie in (0, pi/2]");
    }
    const long long total = 2LL * grid_n;
    std::vector<DecoherenceRow> rows(static_cast<std::size_t>(total));
    for (long long flat = 0; flat < total; ++flat) {
        rows[static_cast<std::size_t>(flat)] = decoherence_row(theta, grid_n, flat);
    }
    return rows;
}

}  // namespace mzent
