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

#include "stoq/kernels.hpp"

namespace stoq::kernels::scalar {

// Explicit re/im arithmetic: std::complex operator* goes through the
// Annex G NaN-recovery path, which is both slow and not what the SIMD
// variants compute.

void gemm(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const cdouble x = a[i * n + k];
                const cdouble y = b[k * n + j];
                re += x.real() * y.real() - x.imag() * y.imag();
                im += x.real() * y.imag() + x.imag() * y.real();
            }
            c[i * n + j] = {re, im};
        }
    }
}

void gemm_adjoint(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c) {
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double re = 0.0;
            double im = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                const cdouble x = a[i * n + k];
                const cdouble y = b[j * n + k];
                re += x.real() * y.real() + x.imag() * y.imag();
                im += x.imag() * y.real() - x.real() * y.imag();
            }
            c[i * n + j] = {re, im};
        }
    }
}

double offdiag_penalty(std::size_t n, const cdouble* m) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const cdouble v = m[j * n + k];
            const double re = v.real() > 0.0 ? v.real() : 0.0;
            sum += re * re + v.imag() * v.imag();
        }
    }
    return sum;
}

}  // namespace stoq::kernels::scalar
