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

#include "mzent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mzent {

namespace {

constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 20;
constexpr double kJacobiOffTolerance = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kHermitianTolerance = 1e-10;
constexpr double kPsdEigenvalueFloor = -1e-10;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Cx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Cx{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = Cx{d[i], 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = std::conj(entries_[k]);
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Cx ComplexMatrix::trace() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Cx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Cx& e : entries_) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Cx& e : entries_) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) {
        return std::numeric_limits<double>::infinity();
    }
    double m = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix addition: dimension mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix subtraction: dimension mismatch");
    }
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Cx scale) {
    for (Cx& e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product: dimension mismatch");
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Cx aik = (*this)(i, k);
            if (aik == Cx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

std::vector<Cx> ComplexMatrix::operator*(const std::vector<Cx>& v) const {
    if (cols_ != v.size()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    std::vector<Cx> out(rows_, Cx{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t out_rows = a.rows() * b.rows();
    const std::size_t out_cols = a.cols() * b.cols();
    if (out_rows != 0 && out_cols > kMaxTensorEntries / out_rows) {
        throw std::invalid_argument("kron: result exceeds 2^20 entries");
    }
    ComplexMatrix out(out_rows, out_cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Cx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

LabeledBasis::LabeledBasis(std::vector<BasisFactor> factors) : factors_(std::move(factors)) {
    total_dim_ = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].dim == 0) {
            throw std::invalid_argument("LabeledBasis: factor '" + factors_[i].name + "' has dimension 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (factors_[j].name == factors_[i].name) {
                throw std::invalid_argument("LabeledBasis: duplicate factor name '" + factors_[i].name + "'");
            }
        }
        total_dim_ *= factors_[i].dim;
    }
}

bool LabeledBasis::has_factor(std::string_view name) const {
    for (const BasisFactor& f : factors_) {
        if (f.name == name) {
            return true;
        }
    }
    return false;
}

std::size_t LabeledBasis::factor_index(std::string_view name) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].name == name) {
            return i;
        }
    }
    throw std::invalid_argument("LabeledBasis: unknown factor '" + std::string(name) + "'");
}

std::size_t LabeledBasis::stride(std::size_t i) const {
    std::size_t s = 1;
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
        s *= factors_[j].dim;
    }
    return s;
}

LabeledBasis LabeledBasis::concat(const LabeledBasis& a, const LabeledBasis& b) {
    std::vector<BasisFactor> factors;
    factors.reserve(a.factor_count() + b.factor_count());
    for (std::size_t i = 0; i < a.factor_count(); ++i) {
        factors.push_back(a.factor(i));
    }
    for (std::size_t i = 0; i < b.factor_count(); ++i) {
        factors.push_back(b.factor(i));
    }
    return LabeledBasis(std::move(factors));
}

bool LabeledBasis::operator==(const LabeledBasis& other) const {
    if (factors_.size() != other.factors_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].name != other.factors_[i].name || factors_[i].dim != other.factors_[i].dim) {
            return false;
        }
    }
    return true;
}

StateVector::StateVector(LabeledBasis b, std::vector<Cx> a) : basis(std::move(b)), amps(std::move(a)) {
    if (amps.size() != basis.total_dim()) {
        throw std::invalid_argument("StateVector: amplitude count does not match basis dimension");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Cx& a : amps) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector StateVector::normalized() const {
    const double n = norm();
    if (n <= 1e-12) {
        throw std::invalid_argument("StateVector::normalized: vector is (near-)zero");
    }
    StateVector out = *this;
    for (Cx& a : out.amps) {
        a /= n;
    }
    return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
    if (basis != other.basis) {
        throw std::invalid_argument("state addition: basis mismatch");
    }
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] += other.amps[i];
    }
    return *this;
}

StateVector& StateVector::operator*=(Cx scale) {
    for (Cx& a : amps) {
        a *= scale;
    }
    return *this;
}

Cx inner(const StateVector& a, const StateVector& b) {
    if (a.basis != b.basis) {
        throw std::invalid_argument("inner: basis mismatch");
    }
    Cx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        s += std::conj(a.amps[i]) * b.amps[i];
    }
    return s;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
    }
    return m;
}

DensityMatrix::DensityMatrix(LabeledBasis b, ComplexMatrix m) : basis(std::move(b)), mat(std::move(m)) {
    if (mat.rows() != mat.cols() || mat.rows() != basis.total_dim()) {
        throw std::invalid_argument("DensityMatrix: matrix shape does not match basis dimension");
    }
}

DensityMatrix DensityMatrix::normalized() const {
    const double t = trace_real();
    if (std::abs(t) <= 1e-15) {
        throw std::invalid_argument("DensityMatrix::normalized: trace vanishes");
    }
    DensityMatrix out = *this;
    out.mat *= Cx{1.0 / t, 0.0};
    return out;
}

DensityMatrix projector(const StateVector& psi) {
    ComplexMatrix m(psi.dim(), psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        for (std::size_t j = 0; j < psi.dim(); ++j) {
            m(i, j) = psi.amps[i] * std::conj(psi.amps[j]);
        }
    }
    return DensityMatrix(psi.basis, std::move(m));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    if (b.dim() != 0 && a.dim() > kMaxTensorEntries / b.dim()) {
        throw std::invalid_argument("tensor: result exceeds 2^20 entries");
    }
    std::vector<Cx> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
        }
    }
    return StateVector(LabeledBasis::concat(a.basis, b.basis), std::move(amps));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix(LabeledBasis::concat(a.basis, b.basis), kron(a.mat, b.mat));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
    const LabeledBasis& basis = rho.basis;
    std::vector<bool> kept(basis.factor_count(), false);
    for (const std::string& name : keep) {
        kept[basis.factor_index(name)] = true;  // throws on unknown names
    }

    std::vector<BasisFactor> out_factors;
    for (std::size_t i = 0; i < basis.factor_count(); ++i) {
        if (kept[i]) {
            out_factors.push_back(basis.factor(i));
        }
    }
    LabeledBasis out_basis{std::move(out_factors)};

    const std::size_t dim = basis.total_dim();
    const std::size_t nf = basis.factor_count();
    std::vector<std::size_t> strides(nf);
    std::vector<std::size_t> dims(nf);
    for (std::size_t i = 0; i < nf; ++i) {
        strides[i] = basis.stride(i);
        dims[i] = basis.factor(i).dim;
    }

    ComplexMatrix out(out_basis.total_dim(), out_basis.total_dim());
    std::vector<std::size_t> ri(nf), ci(nf);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t i = 0; i < nf; ++i) {
            ri[i] = (r / strides[i]) % dims[i];
        }
        for (std::size_t c = 0; c < dim; ++c) {
            bool diagonal_in_traced = true;
            for (std::size_t i = 0; i < nf; ++i) {
                ci[i] = (c / strides[i]) % dims[i];
                if (!kept[i] && ci[i] != ri[i]) {
                    diagonal_in_traced = false;
                    break;
                }
            }
            if (!diagonal_in_traced) {
                continue;
            }
            std::size_t ro = 0, co = 0;
            for (std::size_t i = 0; i < nf; ++i) {
                if (kept[i]) {
                    ro = ro * dims[i] + ri[i];
                    co = co * dims[i] + ci[i];
                }
            }
            out(ro, co) += rho.mat(r, c);
        }
    }
    return DensityMatrix(std::move(out_basis), std::move(out));
}

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("hermitian_eigen: matrix is not square");
    }
    if (!m.is_hermitian(kHermitianTolerance)) {
        throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian within 1e-10");
    }
    const std::size_t n = m.rows();

    // Symmetrize to strip sub-tolerance asymmetry before rotating.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += std::norm(a(i, j));
                }
            }
        }
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_norm() <= kJacobiOffTolerance) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Cx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                // Phase out a(p,q), then rotate the real 2x2 block away.
                const Cx z = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double phi = 0.5 * std::atan2(2.0 * mag, app - aqq);
                const double c = std::cos(phi);
                const double s = std::sin(phi);
                // Unitary J restricted to (p,q): [[c, -s], [conj(z)*s, conj(z)*c]].
                const Cx jpp{c, 0.0};
                const Cx jpq{-s, 0.0};
                const Cx jqp = std::conj(z) * s;
                const Cx jqq = std::conj(z) * c;

                for (std::size_t i = 0; i < n; ++i) {  // columns: A <- A J
                    const Cx aip = a(i, p);
                    const Cx aiq = a(i, q);
                    a(i, p) = aip * jpp + aiq * jqp;
                    a(i, q) = aip * jpq + aiq * jqq;
                }
                for (std::size_t i = 0; i < n; ++i) {  // rows: A <- J^dagger A
                    const Cx api = a(p, i);
                    const Cx aqi = a(q, i);
                    a(p, i) = std::conj(jpp) * api + std::conj(jqp) * aqi;
                    a(q, i) = std::conj(jpq) * api + std::conj(jqq) * aqi;
                }
                for (std::size_t i = 0; i < n; ++i) {  // eigenvectors: V <- V J
                    const Cx vip = v(i, p);
                    const Cx viq = v(i, q);
                    v(i, p) = vip * jpp + viq * jqp;
                    v(i, q) = vip * jpq + viq * jqq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

    EigenSystem out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    EigenSystem es = hermitian_eigen(m);
    const std::size_t n = m.rows();
    for (double& lambda : es.values) {
        if (lambda < kPsdEigenvalueFloor) {
            throw std::invalid_argument("psd_sqrt: eigenvalue below -1e-10, matrix is not PSD");
        }
        lambda = std::sqrt(std::max(lambda, 0.0));
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Cx s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                s += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
            }
            out(i, j) = s;
        }
    }
    return out;
}

}  // namespace mzent
