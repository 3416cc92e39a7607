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

#include "mzent/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzent {

namespace {

constexpr double kRangeSlack = 1e-12;
constexpr double kHalfPi = std::numbers::pi / 2.0;

StateVector basis_state2(std::string_view name, std::size_t which) {
    std::vector<Cx> amps(2, Cx{0.0, 0.0});
    amps[which] = Cx{1.0, 0.0};
    return StateVector(LabeledBasis({{std::string(name), 2}}), std::move(amps));
}

}  // namespace

LabeledBasis pair_basis() {
    return LabeledBasis({{std::string(kSub1), 2}, {std::string(kSub2), 2}});
}

LabeledBasis pair_path_basis() {
    return LabeledBasis({{std::string(kSub1), 2}, {std::string(kSub2), 2}, {std::string(kPath), 2}});
}

LabeledBasis full_basis() {
    return LabeledBasis(
        {{std::string(kSub1), 2}, {std::string(kSub2), 2}, {std::string(kPath), 2}, {std::string(kEnv), 2}});
}

CouplingAngle::CouplingAngle(double theta) : theta_(theta) {
    if (!(theta >= -kRangeSlack && theta <= kHalfPi + kRangeSlack)) {
        throw std::invalid_argument("CouplingAngle: theta must lie in [0, pi/2], got " + std::to_string(theta));
    }
    if (theta_ < 0.0) {
        theta_ = 0.0;
    }
    if (theta_ > kHalfPi) {
        theta_ = kHalfPi;
    }
}

CouplingAngle CouplingAngle::from_coupling(double x) {
    if (!(x >= -kRangeSlack && x <= 1.0 + kRangeSlack)) {
        throw std::invalid_argument("CouplingAngle: coupling x must lie in [0, 1], got " + std::to_string(x));
    }
    return CouplingAngle(std::acos(1.0 - std::min(std::max(x, 0.0), 1.0)));
}

EnvOverlap::EnvOverlap(Cx gamma) : gamma_(gamma) {
    if (std::abs(gamma) > 1.0 + kRangeSlack) {
        throw std::invalid_argument("EnvOverlap: |gamma| must not exceed 1");
    }
}

StateVector b_state(CouplingAngle theta, std::string_view factor_name) {
    return StateVector(LabeledBasis({{std::string(factor_name), 2}}),
                       {Cx{theta.cos_theta(), 0.0}, Cx{theta.sin_theta(), 0.0}});
}

StateVector total_state(const Scenario& s) {
    const StateVector a1 = basis_state2(kSub1, 0);
    const StateVector a2 = basis_state2(kSub2, 0);
    const StateVector b1 = b_state(s.theta1, kSub1);
    const StateVector b2 = b_state(s.theta2, kSub2);
    const StateVector path1 = basis_state2(kPath, 0);
    const StateVector path2 = basis_state2(kPath, 1);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector arm1 = tensor(tensor(b1, a2), path1);
    StateVector arm2 = tensor(tensor(a1, b2), path2);
    return (arm1 + arm2) * Cx{inv_sqrt2, 0.0};
}

StateVector total_state_env(const Scenario& s) {
    const Cx gamma = s.gamma.gamma();
    const double residual = std::sqrt(std::max(0.0, 1.0 - std::norm(gamma)));
    const StateVector e1(LabeledBasis({{std::string(kEnv), 2}}), {Cx{1.0, 0.0}, Cx{0.0, 0.0}});
    const StateVector e2(LabeledBasis({{std::string(kEnv), 2}}), {gamma, Cx{residual, 0.0}});

    const StateVector a1 = basis_state2(kSub1, 0);
    const StateVector a2 = basis_state2(kSub2, 0);
    const StateVector b1 = b_state(s.theta1, kSub1);
    const StateVector b2 = b_state(s.theta2, kSub2);
    const StateVector path1 = basis_state2(kPath, 0);
    const StateVector path2 = basis_state2(kPath, 1);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector arm1 = tensor(tensor(tensor(b1, a2), path1), e1);
    StateVector arm2 = tensor(tensor(tensor(a1, b2), path2), e2);
    return (arm1 + arm2) * Cx{inv_sqrt2, 0.0};
}

}  // namespace mzent
