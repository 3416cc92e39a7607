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

#ifndef MZENT_SCENARIO_HPP
#define MZENT_SCENARIO_HPP

#include <cmath>
#include <string_view>

#include "mzent/numerics.hpp"

namespace mzent {

// Shared basis convention: subsystem1 (x) subsystem2 (x) path (x) environment,
// with per-factor order {|A>, |A_perp>}, {|1>, |2>}, {|e0>, |e1>}.
inline constexpr std::string_view kSub1 = "sub1";
inline constexpr std::string_view kSub2 = "sub2";
inline constexpr std::string_view kPath = "path";
inline constexpr std::string_view kEnv = "env";

LabeledBasis pair_basis();       // sub1 (x) sub2
LabeledBasis pair_path_basis();  // sub1 (x) sub2 (x) path
LabeledBasis full_basis();       // sub1 (x) sub2 (x) path (x) env

/// Interaction strength, theta in [0, pi/2]. theta = pi/2 is a projective
/// interaction, theta -> 0 a weak one. x = 1 - cos(theta) is the
/// dimensionless coupling used on sweep axes.
class CouplingAngle {
public:
    explicit CouplingAngle(double theta);
    static CouplingAngle from_coupling(double x);  // x in [0, 1]

    double theta() const { return theta_; }
    double coupling() const { return 1.0 - std::cos(theta_); }
    double cos_theta() const { return std::cos(theta_); }
    double sin_theta() const { return std::sin(theta_); }

private:
    double theta_;
};

/// Overlap <E1|E2> between the environment states correlated with the two
/// arms; |gamma| <= 1. gamma = 1 means no decoherence, gamma = 0 a perfect
/// which-path detector.
class EnvOverlap {
public:
    EnvOverlap() : gamma_(1.0, 0.0) {}
    explicit EnvOverlap(Cx gamma);

    Cx gamma() const { return gamma_; }

private:
    Cx gamma_;
};

/// One experiment: the two coupling angles and the environment overlap.
struct Scenario {
    CouplingAngle theta1;
    CouplingAngle theta2;
    EnvOverlap gamma{};
};

/// |B> = cos(theta)|A> + sin(theta)|A_perp> as a 2-dim state on a single
/// named factor.
StateVector b_state(CouplingAngle theta, std::string_view factor_name = "sub");

/// Pre-beamsplitter state of subsystem1 (x) subsystem2 (x) path:
/// (1/sqrt(2)) [ |B1,A2>|1> + |A1,B2>|2> ].
StateVector total_state(const Scenario& s);

/// Same with the environment qubit attached: arm 1 carries |E1> = (1, 0),
/// arm 2 carries |E2> = (gamma, sqrt(1 - |gamma|^2)), so <E1|E2> = gamma.
/// Any pure environment pair with this overlap is equivalent to the
/// two-dimensional embedding up to a unitary that dies in the trace.
StateVector total_state_env(const Scenario& s);

}  // namespace mzent

#endif  // MZENT_SCENARIO_HPP
