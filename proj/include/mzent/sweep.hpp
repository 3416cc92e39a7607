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

#ifndef MZENT_SWEEP_HPP
#define MZENT_SWEEP_HPP

#include <vector>

#include "mzent/postselection.hpp"
#include "mzent/scenario.hpp"

namespace mzent {

// Grid kernels behind the CLI sweeps. Each kernel has an OpenMP-parallel
// entry point and a plain serial reference; cells land in a fixed row-major
// order either way, so the two are byte-identical.

struct HeatmapCell {
    double x1 = 0.0;
    double x2 = 0.0;
    double entropy = 0.0;
};

/// R-port entropy surface over a uniform grid_n x grid_n grid on [0, 1]^2,
/// row-major in (x1, x2). The undefined corner x1 = x2 = 0 is clamped to the
/// smallest positive grid value on both axes (it stays on the diagonal, so
/// its entropy is exactly 1).
std::vector<HeatmapCell> heatmap_cells(int grid_n);
std::vector<HeatmapCell> heatmap_cells_serial(int grid_n);

struct DecoherenceRow {
    double gamma = 0.0;
    Port port = Port::R;
    double negativity = 0.0;
    double concurrence = 0.0;
};

/// Mixed-state entanglement of both ports over real gamma uniform on [0, 1],
/// grid_n samples, two rows (R then U) per gamma. Requires theta in
/// (0, pi/2].
std::vector<DecoherenceRow> decoherence_sweep(CouplingAngle theta, int grid_n);
std::vector<DecoherenceRow> decoherence_sweep_serial(CouplingAngle theta, int grid_n);

}  // namespace mzent

#endif  // MZENT_SWEEP_HPP
