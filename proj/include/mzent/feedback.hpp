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

#ifndef MZENT_FEEDBACK_HPP
#define MZENT_FEEDBACK_HPP

#include "mzent/numerics.hpp"

namespace mzent {

/// A 2x2 unitary acting on one subsystem's {|A>, |A_perp>} basis.
struct LocalUnitary {
    int target;            // 1 or 2
    ComplexMatrix matrix;  // unitary within 1e-12

    LocalUnitary(int target, ComplexMatrix matrix);
    static LocalUnitary identity_on(int target);
};

/// The post-selection-conditioned correction for a strong interaction: the
/// phase flip diag(1, -1) on subsystem 2. Applied after a U click at
/// theta = pi/2 it reproduces the R-click state up to a global phase.
LocalUnitary strong_correction();

/// Apply (U (x) I) or (I (x) U) to a 4-dim two-qubit state or density
/// matrix. Norm / trace preserving.
StateVector apply_local(const LocalUnitary& u, const StateVector& psi);
DensityMatrix apply_local(const LocalUnitary& u, const DensityMatrix& rho);

/// |<a|b>| after normalizing both vectors; global phases are irrelevant.
/// A (near-)zero vector is an error.
double fidelity_up_to_phase(const StateVector& a, const StateVector& b);

}  // namespace mzent

#endif  // MZENT_FEEDBACK_HPP
