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

#include "stoq/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "stoq/kernels.hpp"

namespace stoq {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim_ * dim_) {
        throw Error("ComplexMatrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()));
    }
    for (const Complex& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_residual() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw Error("ComplexMatrix: dimension mismatch in +");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (o.dim_ != dim_) throw Error("ComplexMatrix: dimension mismatch in -");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw Error("ComplexMatrix: dimension mismatch in product");
    ComplexMatrix c(a.dim());
    kernels::active().gemm(a.dim(), a.entries().data(), b.entries().data(), c.entries().data());
    return c;
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw Error("ComplexMatrix: dimension mismatch in product");
    ComplexMatrix c(a.dim());
    kernels::active().gemm_adjoint(a.dim(), a.entries().data(), b.entries().data(), c.entries().data());
    return c;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw Error("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    const double r = m_.hermiticity_residual();
    if (r > tol.hermitian) {
        throw Error("HermitianMatrix: hermiticity residual " + std::to_string(r) + " exceeds " +
                    std::to_string(tol.hermitian));
    }
}

HermitianMatrix HermitianMatrix::hermitize(const ComplexMatrix& m) {
    ComplexMatrix h(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        h(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < m.dim(); ++c) {
            const Complex v = 0.5 * (m(r, c) + std::conj(m(c, r)));
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) { return HermitianMatrix(ComplexMatrix(dim), Unchecked{}); }

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
    return HermitianMatrix(ComplexMatrix::identity(dim), Unchecked{});
}

double unitarity_residual(const ComplexMatrix& u) {
    // U^dagger U = (U^dagger)(U^dagger)^dagger
    const ComplexMatrix ud = u.adjoint();
    return max_abs_diff(multiply_adjoint(ud, ud), ComplexMatrix::identity(u.dim()));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, const Tolerances& tol) : m_(std::move(m)) {
    const double r = unitarity_residual(m_);
    if (r > tol.unitary) {
        throw Error("UnitaryMatrix: unitarity residual " + std::to_string(r) + " exceeds " +
                    std::to_string(tol.unitary));
    }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) { return UnitaryMatrix(ComplexMatrix::identity(dim)); }

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix u;
    u.m_ = m_.adjoint();
    return u;
}

}  // namespace stoq
