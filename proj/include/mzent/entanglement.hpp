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

#ifndef MZENT_ENTANGLEMENT_HPP
#define MZENT_ENTANGLEMENT_HPP

#include "mzent/numerics.hpp"

namespace mzent {

enum class Measure { entropy, negativity, concurrence, formation };

const char* measure_name(Measure m);

/// A two-qubit entanglement quantity, normalized so maximal entanglement is
/// exactly 1. Logarithms are base 2 throughout and 0 log 0 = 0.
struct EntanglementValue {
    double value = 0.0;
    Measure measure = Measure::entropy;
};

double binary_entropy(double p);  // -p log2 p - (1-p) log2 (1-p)

/// Von Neumann entropy (base 2) of the reduced state of subsystem 1 of a
/// pure 4-dim state. Input is normalized internally; a (near-)zero vector is
/// an error.
EntanglementValue entropy_of_entanglement(const StateVector& psi);

/// Closed form of the R-port entropy surface over the dimensionless
/// couplings x_j = 1 - cos(theta_j):
///   S = -p1 log2 p1 - p2 log2 p2,
///   p1 = x1 (1 - x2/2) / (x1 + x2 - x1 x2),  p2 = x2 (1 - x1/2) / (same).
/// x1 = x2 = 0 is an error (the R port never clicks there).
EntanglementValue analytic_entropy(double x1, double x2);

/// Twice the absolute sum of the negative eigenvalues of the partial
/// transpose over subsystem 2. Nonzero exactly when a two-qubit state is
/// entangled. Input is trace-normalized internally and must be Hermitian and
/// PSD within 1e-10.
EntanglementValue negativity(const DensityMatrix& rho);

/// Wootters concurrence C = max(0, mu1 - mu2 - mu3 - mu4), where the mu_i
/// are the descending square roots of the eigenvalues of rho rho~, computed
/// through the Hermitian form sqrt(rho) rho~ sqrt(rho).
EntanglementValue concurrence(const DensityMatrix& rho);

/// h((1 + sqrt(1 - C^2))/2) with h the binary entropy and C the concurrence.
/// Coincides with the entropy of entanglement on pure inputs.
EntanglementValue entanglement_of_formation(const DensityMatrix& rho);

}  // namespace mzent

#endif  // MZENT_ENTANGLEMENT_HPP
