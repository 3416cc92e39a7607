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

#ifndef MZENT_POSTSELECTION_HPP
#define MZENT_POSTSELECTION_HPP

#include "mzent/numerics.hpp"
#include "mzent/scenario.hpp"

namespace mzent {

/// Detector ports behind the second beam splitter. R projects the path onto
/// (|1> - |2>)/sqrt(2), U onto (|1> + |2>)/sqrt(2).
enum class Port { R, U };

const char* port_name(Port p);

/// Conditional state of subsystem1 (x) subsystem2 after a port click. Kept
/// unnormalized: the squared norm equals the post-selection probability.
struct ConditionalState {
    StateVector amplitudes;
    Port port;

    double probability() const { return amplitudes.norm() * amplitudes.norm(); }
    StateVector normalized() const { return amplitudes.normalized(); }
};

/// Project the (environment-free) total state onto a port. The amplitude
/// sign convention keeps the |A1,B2> term positive, so the R-port state
/// reads (1/2)[(cos t2 - cos t1)|A1,A2> + sin t2 |A1,A2p> - sin t1 |A1p,A2>]
/// and the U-port state carries + signs throughout.
ConditionalState postselect_pure(const Scenario& s, Port port);

double success_probability(const ConditionalState& c);

/// Project the environment-coupled total state onto a port and trace out the
/// environment. Unnormalized: the trace equals the post-selection
/// probability. Closed form, valid for any theta1, theta2:
///   (1/4)[ |A1,B2><A1,B2| + |B1,A2><B1,A2|
///          -/+ gamma |A1,B2><B1,A2| -/+ conj(gamma) |B1,A2><A1,B2| ]
/// with the upper sign for R.
///
/// Conditioning on an observed environment outcome (instead of tracing)
/// would keep a pure entangled state; total_state_env plus a projector on
/// the env factor covers that if ever needed, no dedicated operation here.
DensityMatrix postselect_mixed(const Scenario& s, Port port);

}  // namespace mzent

#endif  // MZENT_POSTSELECTION_HPP
