// Copyright 2026 The stoqcheck Authors
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

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stoq/tolerances.hpp"

namespace stoq {

using Complex = std::complex<double>;

/// Thrown for violated preconditions (dimension mismatch, bad sizes, ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense d x d complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    /// Rejects entries.size() != dim*dim and any NaN/Inf entry.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const { return dim_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const Complex> entries() const { return data_; }
    std::span<Complex> entries() { return data_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max_{jk} |M_jk - conj(M_kj)|
    double hermiticity_residual() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(Complex s);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
/// Matrix product through the dispatched GEMM kernel.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
/// a * b^dagger without forming the adjoint.
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_{jk} |a_jk - b_jk|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// A ComplexMatrix that is Hermitian within Tolerances::hermitian.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(ComplexMatrix m, const Tolerances& tol = kDefaultTolerances);

    /// Returns (m + m^dagger)/2. No tolerance check.
    static HermitianMatrix hermitize(const ComplexMatrix& m);
    static HermitianMatrix zero(std::size_t dim);
    static HermitianMatrix identity(std::size_t dim);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    double trace() const { return m_.trace().real(); }

    friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

private:
    struct Unchecked {};
    HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// A ComplexMatrix with U^dagger U = I within Tolerances::unitary.
class UnitaryMatrix {
public:
    UnitaryMatrix() = default;
    explicit UnitaryMatrix(ComplexMatrix m, const Tolerances& tol = kDefaultTolerances);
    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const { return m_.dim(); }
    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    UnitaryMatrix adjoint() const;

private:
    ComplexMatrix m_;
};

/// max_{jk} |(U^dagger U - I)_jk|
double unitarity_residual(const ComplexMatrix& u);

}  // namespace stoq
