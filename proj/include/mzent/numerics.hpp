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

#ifndef MZENT_NUMERICS_HPP
#define MZENT_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mzent {

using Cx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the small Hilbert spaces used
/// here (dimension <= 16); no attempt at sparsity or blocking.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Cx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Cx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    Cx trace() const;

    double frobenius_norm() const;
    double max_abs() const;
    /// max |M - M^dagger| over entries; 0 for the empty matrix.
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Cx scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Cx s) { return a *= s; }
    friend ComplexMatrix operator*(Cx s, ComplexMatrix a) { return a *= s; }
    ComplexMatrix operator*(const ComplexMatrix& other) const;
    std::vector<Cx> operator*(const std::vector<Cx>& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cx> entries_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product on raw matrices (no basis bookkeeping).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct BasisFactor {
    std::string name;
    std::size_t dim = 0;
};

/// Ordered tensor-product structure: a list of named factors. The first
/// factor varies slowest in the flattened index (Kronecker convention).
class LabeledBasis {
public:
    LabeledBasis() = default;
    explicit LabeledBasis(std::vector<BasisFactor> factors);

    std::size_t total_dim() const { return total_dim_; }
    std::size_t factor_count() const { return factors_.size(); }
    const BasisFactor& factor(std::size_t i) const { return factors_[i]; }

    bool has_factor(std::string_view name) const;
    std::size_t factor_index(std::string_view name) const;  // throws if absent

    /// Stride of factor i in the flattened index.
    std::size_t stride(std::size_t i) const;

    static LabeledBasis concat(const LabeledBasis& a, const LabeledBasis& b);

    bool operator==(const LabeledBasis& other) const;
    bool operator!=(const LabeledBasis& other) const { return !(*this == other); }

private:
    std::vector<BasisFactor> factors_;
    std::size_t total_dim_ = 1;
};

/// Complex amplitude vector over a labeled tensor-product basis.
struct StateVector {
    LabeledBasis basis;
    std::vector<Cx> amps;

    StateVector() = default;
    StateVector(LabeledBasis b, std::vector<Cx> a);

    std::size_t dim() const { return amps.size(); }
    double norm() const;
    StateVector normalized() const;  // throws on (near-)zero input

    StateVector& operator+=(const StateVector& other);
    StateVector& operator*=(Cx scale);
    friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
    friend StateVector operator*(StateVector a, Cx s) { return a *= s; }
    friend StateVector operator*(Cx s, StateVector a) { return a *= s; }
};

Cx inner(const StateVector& a, const StateVector& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Hermitian trace-normalizable matrix over a labeled basis.
struct DensityMatrix {
    LabeledBasis basis;
    ComplexMatrix mat;

    DensityMatrix() = default;
    DensityMatrix(LabeledBasis b, ComplexMatrix m);

    std::size_t dim() const { return mat.rows(); }
    double trace_real() const { return mat.trace().real(); }
    DensityMatrix normalized() const;  // throws when the trace vanishes
};

/// |psi><psi| on psi's basis.
DensityMatrix projector(const StateVector& psi);

// Tensor products with basis concatenation. Results above 2^20 entries are
// rejected.
StateVector tensor(const StateVector& a, const StateVector& b);
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Trace out every factor not named in `keep`; kept factors stay in their
/// original order. Unknown names are an error.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns, paired with values
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Converges when the
/// off-diagonal Frobenius norm drops below 1e-13; at most 100 sweeps.
/// Input must be Hermitian within 1e-10.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

/// Square root of a PSD Hermitian matrix via its spectral decomposition.
/// Eigenvalues in [-1e-10, 0) are clamped to zero; smaller ones are an error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace mzent

#endif  // MZENT_NUMERICS_HPP
