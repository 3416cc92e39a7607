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

#ifndef MZENT_OPTIMIZER_HPP
#define MZENT_OPTIMIZER_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "mzent/entanglement.hpp"
#include "mzent/feedback.hpp"
#include "mzent/postselection.hpp"
#include "mzent/scenario.hpp"

namespace mzent {

/// Settings for the net-gain search: utility G per unit of entanglement,
/// cost L per discarded pair, and grid resolutions for the retain fraction w
/// and the three ZYZ angles of the subsystem-2 unitary.
struct GainConfig {
    double gain_G = 1.0;
    double loss_L = 0.0;
    int w_grid = 41;
    int su2_grid = 11;
    int refine_iters = 2;
    Measure e1_measure = Measure::formation;  // formation or negativity

    void validate() const;
};

struct OptimizationResult {
    double w_star = 0.0;
    std::array<double, 3> u_angles{};  // ZYZ angles of u_star
    LocalUnitary u_star = LocalUnitary::identity_on(2);
    double n_star = 0.0;
    EntanglementValue e1_at_opt;
    std::int64_t probe_count = 0;
};

/// Best net gain over the unitary grid at one retain fraction.
struct WProfilePoint {
    double w = 0.0;
    double best_n = 0.0;
};

/// Rz(alpha) Ry(beta) Rz(delta) on subsystem 2, global phase dropped.
LocalUnitary zyz_unitary(double alpha, double beta, double delta);

/// Pooled state of the retained pairs, normalized to unit trace:
///   rho(w, U) proportional to |Psi_R><Psi_R| + w U |Psi_U><Psi_U| U^dagger.
/// Requires theta1 = theta2; an empty pool (nothing retained) is an error.
DensityMatrix retained_state(const Scenario& s, double w, const LocalUnitary& u);

/// Net gain for retain fraction w and correction U:
///   N = (G/2) [sin^2 t + w (1 + cos^2 t)] E1[rho(w, U)]
///       - (L/2) (1 - w) (1 + cos^2 t).
double net_gain(const Scenario& s, double w, const LocalUnitary& u, const GainConfig& g);

/// Maximize the net gain over w in [0, 1] and the subsystem-2 unitary:
/// exhaustive scan of the w x ZYZ grid, then coordinate-wise golden-section
/// refinement around the best grid point. Grid ties within 1e-12 of the
/// maximum resolve to the smallest w, then the lexicographically smallest
/// angle triple. The result dominates every probed point.
///
/// `optimize` evaluates grid cells in parallel (OpenMP when available) with
/// a fixed reduction order; `optimize_serial` is the plain-loop reference.
/// Both produce identical results. `profile`, when non-null, receives the
/// per-w best over the unitary grid.
OptimizationResult optimize(const Scenario& s, const GainConfig& g,
                            std::vector<WProfilePoint>* profile = nullptr);
OptimizationResult optimize_serial(const Scenario& s, const GainConfig& g,
                                   std::vector<WProfilePoint>* profile = nullptr);

}  // namespace mzent

#endif  // MZENT_OPTIMIZER_HPP
