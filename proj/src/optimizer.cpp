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

#include "mzent/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mzent {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kGoldenIterations = 40;
constexpr std::size_t kMaxGridProbes = std::size_t{1} << 24;

void require_symmetric(const Scenario& s, const char* who) {
    if (std::abs(s.theta1.theta() - s.theta2.theta()) > kSymmetryTolerance) {
        throw std::invalid_argument(std::string(who) + ": requires theta1 = theta2");
    }
}

double e1_of(const DensityMatrix& rho, Measure m) {
    switch (m) {
        case Measure::negativity:
            return negativity(rho).value;
        case Measure::formation:
            return entanglement_of_formation(rho).value;
        default:
            throw std::invalid_argument("GainConfig: E1 must be formation or negativity");
    }
}

struct Objective {
    const Scenario& scenario;
    const GainConfig& config;
    mutable std::int64_t probes = 0;

    double operator()(double w, double alpha, double beta, double delta) const {
        ++probes;
        return net_gain(scenario, w, zyz_unitary(alpha, beta, delta), config);
    }
};

struct GoldenBest {
    double x;
    double value;
};

/// Golden-section maximization on [lo, hi]; returns the best probed point
/// (not the bracket midpoint), so the caller's running maximum only grows.
template <typename F>
GoldenBest golden_max(F&& f, double lo, double hi, int iterations) {
    constexpr double kInvPhi = 0.6180339887498949;
    GoldenBest best{lo, f(lo)};
    const double fhi = f(hi);
    if (fhi > best.value) {
        best = {hi, fhi};
    }
    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations; ++i) {
        if (f1 > best.value) {
            best = {x1, f1};
        }
        if (f2 > best.value) {
            best = {x2, f2};
        }
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    if (f1 > best.value) {
        best = {x1, f1};
    }
    if (f2 > best.value) {
        best = {x2, f2};
    }
    return best;
}

OptimizationResult optimize_impl(const Scenario& s, const GainConfig& g,
                                 std::vector<WProfilePoint>* profile, bool parallel) {
    g.validate();
    require_symmetric(s, "optimize");

    const std::size_t nw = static_cast<std::size_t>(g.w_grid);
    const std::size_t nu = static_cast<std::size_t>(g.su2_grid);
    const std::size_t total = nw * nu * nu * nu;
    if (total > kMaxGridProbes) {
        throw std::invalid_argument("optimize: grid exceeds 2^24 probes");
    }

    const double w_step = 1.0 / static_cast<double>(nw - 1);
    const double wrap_step = kTwoPi / static_cast<double>(nu);  // alpha, delta: [0, 2pi)
    const double beta_step = std::numbers::pi / static_cast<double>(nu - 1);  // beta: [0, pi]

    auto w_of = [&](std::size_t i) { return static_cast<double>(i) * w_step; };
    auto wrap_of = [&](std::size_t i) { return static_cast<double>(i) * wrap_step; };
    auto beta_of = [&](std::size_t i) { return static_cast<double>(i) * beta_step; };

    // Every grid value is stored so the tie rule can see all probes; the
    // fill order is immaterial, the reduction below is serial and fixed.
    std::vector<double> values(total);
    const std::size_t slots = nw * nu;  // one slot per (w, alpha)

    auto fill_slot = [&](std::size_t slot) {
        const std::size_t iw = slot / nu;
        const std::size_t ia = slot % nu;
        const double w = w_of(iw);
        const double alpha = wrap_of(ia);
        std::size_t idx = slot * nu * nu;
        for (std::size_t ib = 0; ib < nu; ++ib) {
            for (std::size_t id = 0; id < nu; ++id) {
                values[idx++] = net_gain(s, w, zyz_unitary(alpha, beta_of(ib), wrap_of(id)), g);
            }
        }
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long slot = 0; slot < static_cast<long long>(slots); ++slot) {
            fill_slot(static_cast<std::size_t>(slot));
        }
    } else {
        for (std::size_t slot = 0; slot < slots; ++slot) {
            fill_slot(slot);
        }
    }

    double grid_max = values[0];
    for (double v : values) {
        grid_max = std::max(grid_max, v);
    }
    std::size_t winner = 0;
    while (values[winner] < grid_max - kTieTolerance) {
        ++winner;
    }

    if (profile != nullptr) {
        profile->assign(nw, WProfilePoint{});
        const std::size_t per_w = nu * nu * nu;
        for (std::size_t iw = 0; iw < nw; ++iw) {
            double best = values[iw * per_w];
            for (std::size_t k = 1; k < per_w; ++k) {
                best = std::max(best, values[iw * per_w + k]);
            }
            (*profile)[iw] = WProfilePoint{w_of(iw), best};
        }
    }

    const std::size_t iw = winner / (nu * nu * nu);
    const std::size_t ia = winner / (nu * nu) % nu;
    const std::size_t ib = winner / nu % nu;
    const std::size_t id = winner % nu;

    double w = w_of(iw);
    double alpha = wrap_of(ia);
    double beta = beta_of(ib);
    double delta = wrap_of(id);
    double best_n = values[winner];

    Objective objective{s, g};
    objective.probes = static_cast<std::int64_t>(total);

    // Coordinate-wise golden-section refinement, one grid step around the
    // incumbent. alpha and delta are periodic, their brackets may wander
    // outside [0, 2pi); beta and w stay clamped to their domains.
    for (int pass = 0; pass < g.refine_iters; ++pass) {
        {
            const double lo = std::max(0.0, w - w_step);
            const double hi = std::min(1.0, w + w_step);
            GoldenBest r = golden_max([&](double x) { return objective(x, alpha, beta, delta); },
                                      lo, hi, kGoldenIterations);
            if (r.value > best_n) {
                best_n = r.value;
                w = r.x;
            }
        }
        {
            GoldenBest r = golden_max([&](double x) { return objective(w, x, beta, delta); },
                                      alpha - wrap_step, alpha + wrap_step, kGoldenIterations);
            if (r.value > best_n) {
                best_n = r.value;
                alpha = r.x;
            }
        }
        {
            const double lo = std::max(0.0, beta - beta_step);
            const double hi = std::min(std::numbers::pi, beta + beta_step);
            GoldenBest r = golden_max([&](double x) { return objective(w, alpha, x, delta); },
                                      lo, hi, kGoldenIterations);
            if (r.value > best_n) {
                best_n = r.value;
                beta = r.x;
            }
        }
        {
            GoldenBest r = golden_max([&](double x) { return objective(w, alpha, beta, x); },
                                      delta - wrap_step, delta + wrap_step, kGoldenIterations);
            if (r.value > best_n) {
                best_n = r.value;
                delta = r.x;
            }
        }
    }

    OptimizationResult out;
    out.w_star = w;
    out.u_angles = {alpha, beta, delta};
    out.u_star = zyz_unitary(alpha, beta, delta);
    out.n_star = best_n;
    out.e1_at_opt = EntanglementValue{e1_of(retained_state(s, w, out.u_star), g.e1_measure), g.e1_measure};
    out.probe_count = objective.probes;
    return out;
}

}  // namespace

void GainConfig::validate() const {
    if (!(gain_G > 0.0)) {
        throw std::invalid_argument("GainConfig: gain G must be positive");
    }
    if (!(loss_L >= 0.0)) {
        throw std::invalid_argument("GainConfig: loss L must be nonnegative");
    }
    if (w_grid < 2 || su2_grid < 2) {
        throw std::invalid_argument("GainConfig: grids must have at least 2 points");
    }
    if (refine_iters < 0) {
        throw std::invalid_argument("GainConfig: refine_iters must be nonnegative");
    }
    if (e1_measure != Measure::formation && e1_measure != Measure::negativity) {
        throw std::invalid_argument("GainConfig: E1 must be formation or negativity");
    }
}

LocalUnitary zyz_unitary(double alpha, double beta, double delta) {
    const double cb = std::cos(beta / 2.0);
    const double sb = std::sin(beta / 2.0);
    const Cx eza = std::polar(1.0, -alpha / 2.0);
    const Cx ezd = std::polar(1.0, -delta / 2.0);
    ComplexMatrix m(2, 2);
    m(0, 0) = eza * cb * ezd;
    m(0, 1) = -eza * sb * std::conj(ezd);
    m(1, 0) = std::conj(eza) * sb * ezd;
    m(1, 1) = std::conj(eza) * cb * std::conj(ezd);
    return LocalUnitary(2, std::move(m));
}

DensityMatrix retained_state(const Scenario& s, double w, const LocalUnitary& u) {
    require_symmetric(s, "retained_state");
    if (!(w >= 0.0 && w <= 1.0)) {
        throw std::invalid_argument("retained_state: w must lie in [0, 1]");
    }
    const ConditionalState r = postselect_pure(s, Port::R);
    const ConditionalState up = postselect_pure(s, Port::U);
    const StateVector corrected = apply_local(u, up.amplitudes);

    const std::size_t dim = r.amplitudes.dim();
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m(i, j) = r.amplitudes.amps[i] * std::conj(r.amplitudes.amps[j]) +
                      w * corrected.amps[i] * std::conj(corrected.amps[j]);
        }
    }
    DensityMatrix rho(pair_basis(), std::move(m));
    if (rho.trace_real() <= 1e-15) {
        throw std::invalid_argument("retained_state: nothing retained (P_R + w P_U vanishes)");
    }
    return rho.normalized();
}

double net_gain(const Scenario& s, double w, const LocalUnitary& u, const GainConfig& g) {
    require_symmetric(s, "net_gain");
    const double st = s.theta1.sin_theta();
    const double ct = s.theta1.cos_theta();
    const double sin2 = st * st;
    const double one_plus_cos2 = 1.0 + ct * ct;
    const double e1 = e1_of(retained_state(s, w, u), g.e1_measure);
    return 0.5 * g.gain_G * (sin2 + w * one_plus_cos2) * e1 -
           0.5 * g.loss_L * (1.0 - w) * one_plus_cos2;
}

OptimizationResult optimize(const Scenario& s, const GainConfig& g, std::vector<WProfilePoint>* profile) {
    return optimize_impl(s, g, profile, /*parallel=*/true);
}

OptimizationResult optimize_serial(const Scenario& s, const GainConfig& g,
                                   std::vector<WProfilePoint>* profile) {
    return optimize_impl(s, g, profile, /*parallel=*/false);
}

}  // namespace mzent
