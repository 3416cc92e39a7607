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

#include "mzent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mzent {

namespace {

constexpr double kPsdTolerance = 1e-10;
constexpr double kSpectralNoiseFloor = 1e-13;

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

void require_four_dim(const StateVector& psi, const char* who) {
    if (psi.dim() != 4) {
        throw std::invalid_argument(std::string(who) + ": expected a 4-dim two-qubit state");
    }
}

/// Trace-normalize and validate a two-qubit density matrix.
ComplexMatrix checked_normalized(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 4) {
        throw std::invalid_argument(std::string(who) + ": expected a 4x4 density matrix");
    }
    if (!rho.mat.is_hermitian(kPsdTolerance)) {
        throw std::invalid_argument(std::string(who) + ": matrix is not Hermitian within 1e-10");
    }
    ComplexMatrix m = rho.normalized().mat;
    EigenSystem es = hermitian_eigen(m);
    for (double lambda : es.values) {
        if (lambda < -kPsdTolerance) {
            throw std::invalid_argument(std::string(who) + ": matrix is not PSD within 1e-10");
        }
    }
    return m;
}

ComplexMatrix partial_transpose_sub2(const ComplexMatrix& rho) {
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + j, 2 * k + l) = rho(2 * i + l, 2 * k + j);
                }
            }
        }
    }
    return out;
}

const ComplexMatrix& spin_flip() {
    // sigma_y (x) sigma_y
    static const ComplexMatrix m(4, 4,
                                 {Cx{0, 0}, Cx{0, 0}, Cx{0, 0}, Cx{-1, 0},
                                  Cx{0, 0}, Cx{0, 0}, Cx{1, 0}, Cx{0, 0},
                                  Cx{0, 0}, Cx{1, 0}, Cx{0, 0}, Cx{0, 0},
                                  Cx{-1, 0}, Cx{0, 0}, Cx{0, 0}, Cx{0, 0}});
    return m;
}

}  // namespace

const char* measure_name(Measure m) {
    switch (m) {
        case Measure::entropy: return "entropy";
        case Measure::negativity: return "negativity";
        case Measure::concurrence: return "concurrence";
        case Measure::formation: return "formation";
    }
    return "unknown";
}

double binary_entropy(double p) {
    const double h = -xlog2x(p) - xlog2x(1.0 - p);
    return h > 0.0 ? h : 0.0;
}

EntanglementValue entropy_of_entanglement(const StateVector& psi) {
    require_four_dim(psi, "entropy_of_entanglement");
    const StateVector n = psi.normalized();  // throws on zero vector

    // Reduced state of subsystem 1: rho1 = M M^dagger with M[i][j] = psi[2i+j].
    ComplexMatrix rho1(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            Cx s{0.0, 0.0};
            for (std::size_t j = 0; j < 2; ++j) {
                s += n.amps[2 * i + j] * std::conj(n.amps[2 * k + j]);
            }
            rho1(i, k) = s;
        }
    }
    EigenSystem es = hermitian_eigen(rho1);
    double entropy = 0.0;
    for (double lambda : es.values) {
        entropy -= xlog2x(std::max(lambda, 0.0));
    }
    return EntanglementValue{entropy > 0.0 ? entropy : 0.0, Measure::entropy};
}

EntanglementValue analytic_entropy(double x1, double x2) {
    constexpr double slack = 1e-12;
    if (!(x1 >= -slack && x1 <= 1.0 + slack) || !(x2 >= -slack && x2 <= 1.0 + slack)) {
        throw std::invalid_argument("analytic_entropy: couplings must lie in [0, 1]");
    }
    x1 = std::min(std::max(x1, 0.0), 1.0);
    x2 = std::min(std::max(x2, 0.0), 1.0);
    if (x1 == 0.0 && x2 == 0.0) {
        throw std::invalid_argument("analytic_entropy: undefined at x1 = x2 = 0 (the R port never clicks)");
    }
    if (x1 == x2) {
        // p1 = p2 = 1/2 on the diagonal; S is exactly 1.
        return EntanglementValue{1.0, Measure::entropy};
    }
    const double denom = x1 + x2 - x1 * x2;
    const double p1 = x1 * (1.0 - x2 / 2.0) / denom;
    const double p2 = x2 * (1.0 - x1 / 2.0) / denom;
    const double entropy = -xlog2x(p1) - xlog2x(p2);
    return EntanglementValue{entropy > 0.0 ? entropy : 0.0, Measure::entropy};
}

EntanglementValue negativity(const DensityMatrix& rho) {
    const ComplexMatrix m = checked_normalized(rho, "negativity");
    EigenSystem es = hermitian_eigen(partial_transpose_sub2(m));
    double negative_sum = 0.0;
    for (double lambda : es.values) {
        if (lambda < 0.0) {
            negative_sum += -lambda;
        }
    }
    return EntanglementValue{2.0 * negative_sum, Measure::negativity};
}

EntanglementValue concurrence(const DensityMatrix& rho) {
    const ComplexMatrix m = checked_normalized(rho, "concurrence");
    const ComplexMatrix& flip = spin_flip();
    const ComplexMatrix rho_tilde = flip * m.conjugate() * flip;
    const ComplexMatrix root = psd_sqrt(m);
    EigenSystem es = hermitian_eigen(root * rho_tilde * root);
    double c = 0.0;
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        // Rank-deficient states leave O(eps) eigenvalues here whose square
        // roots would otherwise pollute the result at the 1e-8 level.
        const double lambda = es.values[k] > kSpectralNoiseFloor ? es.values[k] : 0.0;
        const double mu = std::sqrt(lambda);
        c += k == 0 ? mu : -mu;
    }
    return EntanglementValue{c > 0.0 ? c : 0.0, Measure::concurrence};
}

EntanglementValue entanglement_of_formation(const DensityMatrix& rho) {
    const double c = concurrence(rho).value;
    const double arg = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
    return EntanglementValue{binary_entropy(arg), Measure::formation};
}

}  // namespace mzent
