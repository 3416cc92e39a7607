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

#include "mzent/feedback.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mzent {

namespace {

constexpr double kUnitaryTolerance = 1e-12;

void require_pair_state(std::size_t dim, const char* who) {
    if (dim != 4) {
        throw std::invalid_argument(std::string(who) + ": expected a 4-dim subsystem1 (x) subsystem2 state");
    }
}

ComplexMatrix lifted(const LocalUnitary& u) {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    return u.target == 1 ? kron(u.matrix, eye) : kron(eye, u.matrix);
}

}  // namespace

LocalUnitary::LocalUnitary(int target, ComplexMatrix m) : target(target), matrix(std::move(m)) {
    if (target != 1 && target != 2) {
        throw std::invalid_argument("LocalUnitary: target must be subsystem 1 or 2");
    }
    if (matrix.rows() != 2 || matrix.cols() != 2) {
        throw std::invalid_argument("LocalUnitary: matrix must be 2x2");
    }
    if (max_abs_diff(matrix.adjoint() * matrix, ComplexMatrix::identity(2)) > kUnitaryTolerance) {
        throw std::invalid_argument("LocalUnitary: matrix is not unitary within 1e-12");
    }
}

LocalUnitary LocalUnitary::identity_on(int target) {
    return LocalUnitary(target, ComplexMatrix::identity(2));
}

LocalUnitary strong_correction() {
    ComplexMatrix m(2, 2);
    m(0, 0) = Cx{1.0, 0.0};
    m(1, 1) = Cx{-1.0, 0.0};
    return LocalUnitary(2, std::move(m));
}

StateVector apply_local(const LocalUnitary& u, const StateVector& psi) {
    require_pair_state(psi.dim(), "apply_local");
    StateVector out = psi;
    for (std::size_t other = 0; other < 2; ++other) {
        Cx in0, in1;
        if (u.target == 2) {
            in0 = psi.amps[2 * other + 0];
            in1 = psi.amps[2 * other + 1];
        } else {
            in0 = psi.amps[0 + other];
            in1 = psi.amps[2 + other];
        }
        const Cx out0 = u.matrix(0, 0) * in0 + u.matrix(0, 1) * in1;
        const Cx out1 = u.matrix(1, 0) * in0 + u.matrix(1, 1) * in1;
        if (u.target == 2) {
            out.amps[2 * other + 0] = out0;
            out.amps[2 * other + 1] = out1;
        } else {
            out.amps[0 + other] = out0;
            out.amps[2 + other] = out1;
        }
    }
    return out;
}

DensityMatrix apply_local(const LocalUnitary& u, const DensityMatrix& rho) {
    require_pair_state(rho.dim(), "apply_local");
    const ComplexMatrix op = lifted(u);
    return DensityMatrix(rho.basis, op * rho.mat * op.adjoint());
}

double fidelity_up_to_phase(const StateVector& a, const StateVector& b) {
    const StateVector an = a.normalized();
    const StateVector bn = b.normalized();
    if (an.dim() != bn.dim()) {
        throw std::invalid_argument("fidelity_up_to_phase: dimension mismatch");
    }
    Cx overlap{0.0, 0.0};
    for (std::size_t i = 0; i < an.dim(); ++i) {
        overlap += std::conj(an.amps[i]) * bn.amps[i];
    }
    return std::abs(overlap);
}

}  // namespace mzent
