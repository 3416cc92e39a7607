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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mzent/numerics.hpp"
#include "support/oracles.hpp"

using namespace mzent;
namespace mt = mzent::testing;

namespace {

LabeledBasis single(const char* name, std::size_t dim = 2) {
    return LabeledBasis({{name, dim}});
}

}  // namespace

TEST_CASE("labeled basis rejects duplicates and unknown factors") {
    CHECK_THROWS_AS(LabeledBasis({{"a", 2}, {"a", 2}}), std::invalid_argument);
    LabeledBasis b({{"a", 2}, {"b", 3}});
    CHECK(b.total_dim() == 6);
    CHECK(b.stride(0) == 3);
    CHECK(b.stride(1) == 1);
    CHECK_THROWS_AS(b.factor_index("c"), std::invalid_argument);
}

TEST_CASE("tensor of computational basis states") {
    StateVector e0(single("a"), {Cx{1, 0}, Cx{0, 0}});
    StateVector e1(single("b"), {Cx{0, 0}, Cx{1, 0}});
    StateVector t = tensor(e0, e1);
    REQUIRE(t.dim() == 4);
    CHECK(t.amps[0] == Cx{0, 0});
    CHECK(t.amps[1] == Cx{1, 0});
    CHECK(t.amps[2] == Cx{0, 0});
    CHECK(t.amps[3] == Cx{0, 0});
}

TEST_CASE("tensor with a one-dimensional unit factor is the identity") {
    StateVector v(single("a"), {Cx{0.3, 0.1}, Cx{0.0, -0.7}});
    StateVector unit(LabeledBasis({{"u", 1}}), {Cx{1, 0}});
    StateVector t = tensor(v, unit);
    REQUIRE(t.dim() == 2);
    CHECK(t.amps[0] == v.amps[0]);
    CHECK(t.amps[1] == v.amps[1]);
}

TEST_CASE("tensor norm is multiplicative") {
    StateVector a(single("a"), {Cx{0.6, 0.0}, Cx{0.0, 0.8}});
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector b(single("b"), {Cx{inv_sqrt2, 0.0}, Cx{inv_sqrt2, 0.0}});
    CHECK(tensor(a, b).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tensor rejects results above 2^20 entries") {
    StateVector big(LabeledBasis({{"x", 1 << 11}}), std::vector<Cx>(1 << 11, Cx{0, 0}));
    StateVector big2(LabeledBasis({{"y", 1 << 11}}), std::vector<Cx>(1 << 11, Cx{0, 0}));
    CHECK_THROWS_AS(tensor(big, big2), std::invalid_argument);
}

TEST_CASE("tensor is associative up to basis relabeling") {
    // Dyadic-rational amplitudes keep every product exact, so the two
    // groupings agree bitwise.
    std::mt19937 gen(11u);
    std::uniform_int_distribution<int> digit(-8, 8);
    auto dyadic_state = [&](const char* name) {
        std::vector<Cx> amps(2);
        for (Cx& a : amps) {
            a = Cx{digit(gen) / 16.0, digit(gen) / 16.0};
        }
        return StateVector(single(name), std::move(amps));
    };
    for (int rep = 0; rep < 25; ++rep) {
        StateVector a = dyadic_state("a"), b = dyadic_state("b"), c = dyadic_state("c");
        StateVector left = tensor(tensor(a, b), c);
        StateVector right = tensor(a, tensor(b, c));
        REQUIRE(left.basis == right.basis);
        for (std::size_t i = 0; i < left.dim(); ++i) {
            CHECK(left.amps[i] == right.amps[i]);
        }
    }
}

TEST_CASE("partial trace of a product state leaves a pure marginal") {
    StateVector a(single("a"), {Cx{0.8, 0.0}, Cx{0.0, 0.6}});
    StateVector b(single("env"), {Cx{1.0 / std::sqrt(2.0), 0.0}, Cx{0.0, 1.0 / std::sqrt(2.0)}});
    DensityMatrix rho = projector(tensor(a, b));
    DensityMatrix red = partial_trace(rho, {"a"});
    REQUIRE(red.dim() == 2);
    CHECK(std::abs(red.trace_real() - 1.0) <= 1e-12);
    const ComplexMatrix sq = red.mat * red.mat;
    CHECK(std::abs(sq.trace().real() - 1.0) <= 1e-12);  // purity
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    StateVector bell(LabeledBasis({{"s1", 2}, {"s2", 2}}),
                     {Cx{0, 0}, Cx{inv_sqrt2, 0}, Cx{-inv_sqrt2, 0}, Cx{0, 0}});
    DensityMatrix red = partial_trace(projector(bell), {"s1"});
    CHECK(std::abs(red.mat(0, 0) - Cx{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(red.mat(1, 1) - Cx{0.5, 0.0}) <= 1e-12);
    CHECK(std::abs(red.mat(0, 1)) <= 1e-12);
    CHECK(std::abs(red.mat(1, 0)) <= 1e-12);
}

TEST_CASE("partial trace rejects unknown factors and preserves the trace") {
    std::mt19937 gen(22u);
    ComplexMatrix h = mt::random_hermitian(gen, 8);
    DensityMatrix rho(LabeledBasis({{"s1", 2}, {"s2", 2}, {"path", 2}}), h);
    CHECK_THROWS_AS(partial_trace(rho, {"nope"}), std::invalid_argument);
    DensityMatrix red = partial_trace(rho, {"s1", "s2"});
    CHECK(std::abs(red.trace_real() - rho.trace_real()) <= 1e-12);
    CHECK(red.mat.is_hermitian(1e-10));
}

TEST_CASE("projecting the port and tracing the environment gives the decohered mixture") {
    // Which-path environment at strong coupling: after an R click the pair
    // is the equal mixture (1/4)(|01><01| + |10><10|) with no coherence.
    const double half_pi = std::acos(0.0);
    Scenario s{CouplingAngle{half_pi}, CouplingAngle{half_pi}, EnvOverlap{Cx{0.0, 0.0}}};
    DensityMatrix rho16 = projector(total_state_env(s));

    ComplexMatrix r_proj(2, 2, {Cx{0.5, 0}, Cx{-0.5, 0}, Cx{-0.5, 0}, Cx{0.5, 0}});
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    const ComplexMatrix lifted = kron(kron(kron(eye, eye), r_proj), eye);
    DensityMatrix projected(rho16.basis, lifted * rho16.mat * lifted.adjoint());

    DensityMatrix pair = partial_trace(projected, {std::string(kSub1), std::string(kSub2)});
    REQUIRE(pair.dim() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Cx expected = (i == j && (i == 1 || i == 2)) ? Cx{0.25, 0.0} : Cx{0.0, 0.0};
            CHECK(std::abs(pair.mat(i, j) - expected) <= 1e-12);
        }
    }

    // Same chain through the independent index-contraction oracle.
    const mt::Rho4 oracle = mt::mixed_oracle(half_pi, half_pi, Cx{0.0, 0.0}, true);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            CHECK(std::abs(pair.mat(i, j) - oracle[i][j]) <= 1e-12);
        }
    }
}

TEST_CASE("partial trace composes over complementary factor sets") {
    std::mt19937 gen(33u);
    LabeledBasis full({{"s1", 2}, {"s2", 2}, {"path", 2}, {"env", 2}});
    for (int rep = 0; rep < 20; ++rep) {
        DensityMatrix rho(full, mt::random_hermitian(gen, 16));
        DensityMatrix step = partial_trace(partial_trace(rho, {"s1", "s2", "path"}), {"s1", "s2"});
        DensityMatrix direct = partial_trace(rho, {"s1", "s2"});
        CHECK(max_abs_diff(step.mat, direct.mat) <= 1e-12);
    }
}

TEST_CASE("hermitian_eigen on small fixed matrices") {
    EigenSystem d = hermitian_eigen(ComplexMatrix::diagonal({0.933, 0.067}));
    CHECK(d.values[0] == doctest::Approx(0.933).epsilon(1e-12));
    CHECK(d.values[1] == doctest::Approx(0.067).epsilon(1e-12));

    // Reduced state of the theta1 = pi/2, theta2 = pi/6 conditional state.
    const double r3_4 = std::sqrt(3.0) / 4.0;
    ComplexMatrix m(2, 2, {Cx{0.5, 0}, Cx{-r3_4, 0}, Cx{-r3_4, 0}, Cx{0.5, 0}});
    EigenSystem es = hermitian_eigen(m);
    const auto [hi, lo] = mt::eig2_oracle(0.5, Cx{-r3_4, 0.0}, 0.5);
    CHECK(es.values[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(lo).epsilon(1e-12));
    CHECK(es.values[0] == doctest::Approx(0.5 + r3_4).epsilon(1e-12));

    EigenSystem id = hermitian_eigen(ComplexMatrix::identity(4));
    for (double v : id.values) {
        CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    ComplexMatrix m(2, 2, {Cx{0, 0}, Cx{1, 0}, Cx{0, 0}, Cx{0, 0}});
    CHECK_THROWS_AS(hermitian_eigen(m), std::invalid_argument);
}

TEST_CASE("hermitian_eigen reconstructs random 4x4 inputs") {
    std::mt19937 gen(44u);
    for (int rep = 0; rep < 50; ++rep) {
        ComplexMatrix m = mt::random_hermitian(gen, 4);
        EigenSystem es = hermitian_eigen(m);
        for (std::size_t k = 0; k + 1 < es.values.size(); ++k) {
            CHECK(es.values[k] >= es.values[k + 1]);
        }
        // Residual per pair.
        for (std::size_t k = 0; k < 4; ++k) {
            std::vector<Cx> v(4);
            for (std::size_t i = 0; i < 4; ++i) {
                v[i] = es.vectors(i, k);
            }
            const std::vector<Cx> mv = m * v;
            double resid = 0.0;
            for (std::size_t i = 0; i < 4; ++i) {
                resid += std::norm(mv[i] - es.values[k] * v[i]);
            }
            CHECK(std::sqrt(resid) <= 1e-10);
        }
        // Reconstruction sum(lambda_k v_k v_k^dagger).
        ComplexMatrix rec(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                Cx s{0, 0};
                for (std::size_t k = 0; k < 4; ++k) {
                    s += es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
                }
                rec(i, j) = s;
            }
        }
        CHECK(max_abs_diff(rec, m) <= 1e-9);
    }
}

TEST_CASE("psd_sqrt on fixed and random inputs") {
    ComplexMatrix d = psd_sqrt(ComplexMatrix::diagonal({4.0, 9.0}));
    CHECK(std::abs(d(0, 0) - Cx{2, 0}) <= 1e-12);
    CHECK(std::abs(d(1, 1) - Cx{3, 0}) <= 1e-12);

    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::identity(3)), ComplexMatrix::identity(3)) <= 1e-12);

    // Rank-1 projector p |v><v| maps to sqrt(p) |v><v|.
    const double p = 0.4;
    std::vector<Cx> v = {Cx{0.6, 0}, Cx{0, 0.8}};
    ComplexMatrix proj(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            proj(i, j) = p * v[i] * std::conj(v[j]);
        }
    }
    ComplexMatrix root = psd_sqrt(proj);
    CHECK(max_abs_diff(root * root, proj) <= 1e-9);
    // The zero eigenvalue carries O(eps) noise whose square root is O(1e-8),
    // so the entrywise spectral-mapping check gets the looser bound.
    CHECK(std::abs(root(0, 0) - std::sqrt(p) * v[0] * std::conj(v[0])) <= 5e-8);

    CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal({1.0, -0.5})), std::invalid_argument);

    std::mt19937 gen(55u);
    for (int rep = 0; rep < 20; ++rep) {
        ComplexMatrix h = mt::random_hermitian(gen, 4);
        ComplexMatrix psd = h * h.adjoint();
        ComplexMatrix r = psd_sqrt(psd);
        CHECK(max_abs_diff(r * r, psd) <= 1e-9 * std::max(1.0, psd.max_abs()));
    }
}
