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

#include "mzent/postselection.hpp"

#include <cmath>

namespace mzent {

namespace {

// Branch vectors on sub1 (x) sub2: |A1,B2> and |B1,A2>.
StateVector a1_b2(const Scenario& s) {
    const double c2 = s.theta2.cos_theta();
    const double s2 = s.theta2.sin_theta();
    return StateVector(pair_basis(), {Cx{c2, 0.0}, Cx{s2, 0.0}, Cx{0.0, 0.0}, Cx{0.0, 0.0}});
}

StateVector b1_a2(const Scenario& s) {
    const double c1 = s.theta1.cos_theta();
    const double s1 = s.theta1.sin_theta();
    return StateVector(pair_basis(), {Cx{c1, 0.0}, Cx{0.0, 0.0}, Cx{s1, 0.0}, Cx{0.0, 0.0}});
}

}  // namespace

const char* port_name(Port p) {
    return p == Port::R ? "R" : "U";
}

ConditionalState postselect_pure(const Scenario& s, Port port) {
    const double sign = port == Port::R ? -1.0 : 1.0;
    StateVector psi = a1_b2(s) + b1_a2(s) * Cx{sign, 0.0};
    psi *= Cx{0.5, 0.0};
    return ConditionalState{std::move(psi), port};
}

double success_probability(const ConditionalState& c) {
    return c.probability();
}

DensityMatrix postselect_mixed(const Scenario& s, Port port) {
    const double sign = port == Port::R ? -1.0 : 1.0;
    const Cx gamma = s.gamma.gamma();
    const StateVector v1 = a1_b2(s);
    const StateVector v2 = b1_a2(s);

    const std::size_t dim = v1.dim();
    ComplexMatrix rho(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Cx e = v1.amps[i] * std::conj(v1.amps[j]) + v2.amps[i] * std::conj(v2.amps[j]);
            e += sign * gamma * v1.amps[i] * std::conj(v2.amps[j]);
            e += sign * std::conj(gamma) * v2.amps[i] * std::conj(v1.amps[j]);
            rho(i, j) = 0.25 * e;
        }
    }
    return DensityMatrix(pair_basis(), std::move(rho));
}

}  // namespace mzent
