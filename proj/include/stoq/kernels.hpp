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

// Dense complex kernels on interleaved (re, im) row-major n x n storage.
//
// Each kernel exists as a scalar reference and, on x86-64, as an AVX2+FMA
// variant. The variant is picked once at first use from CPUID; setting
// STOQ_SIMD=scalar in the environment forces the reference path.

#include <complex>
#include <cstddef>
#include <string_view>

namespace stoq::kernels {

using cdouble = std::complex<double>;

struct KernelTable {
    std::string_view name;
    /// c = a * b
    void (*gemm)(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
    /// c = a * b^dagger
    void (*gemm_adjoint)(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
    /// sum_{j != k} max(0, Re m_jk)^2 + (Im m_jk)^2
    double (*offdiag_penalty)(std::size_t n, const cdouble* m);
};

namespace scalar {
void gemm(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
void gemm_adjoint(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
double offdiag_penalty(std::size_t n, const cdouble* m);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define STOQ_HAVE_AVX2_KERNELS 1
namespace avx2 {
void gemm(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
void gemm_adjoint(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c);
double offdiag_penalty(std::size_t n, const cdouble* m);
}  // namespace avx2
#endif

const KernelTable& scalar_table();
/// nullptr when the CPU (or build) lacks AVX2+FMA.
const KernelTable* avx2_table();
/// The table selected for this process.
const KernelTable& active();

}  // namespace stoq::kernels
