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

// Compiled with -mavx2 -mfma. Nothing in here may be called before the
// dispatcher has confirmed CPU support.

#include "stoq/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace stoq::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void gemm(std::size_t n, const cdouble* a, const cdouble* b, cdouble* c) {
    const auto* bd = reinterpret_cast<const double*>(b);
    auto* cd = reinterpret_cast<double*>(c);
    const std::size_t pairs = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        // Two complex outputs per lane group; acc_re collects a_re * b,
        // acc_im collects a_im * swap(b), combined with addsub at the end.
        for (std::size_t jp = 0; jp < pairs; ++jp) {
            __m256d acc_re = _mm256_setzero_pd();
            __m256d acc_im = _mm256_setzero_pd();
            for (std::size_t k = 0; k < n; ++k) {
                const cdouble x = a[i * n + k];
                const __m256d bv = _mm256_loadu_pd(bd + 2 * (k * n + 2 * jp));
                acc_re = _mm256_fmadd_pd(_mm256_set1_pd(x.real()), bv, acc_re);
                acc_im = _mm256_fmadd_pd(_mm256_set1_pd(x.imag()), _mm256_permute_pd(bv, 0x5), acc_im);
            }
            _mm256_storeu_pd(cd + 2 * (i * n + 2 * jp), _mm256_addsub_pd(acc_re, acc_im));
        }
        if (n % 2 == 1) {
            const std::size_t j = n - 1;
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
    const auto* ad = reinterpret_cast<const double*>(a);
    const auto* bd = reinterpret_cast<const double*>(b);
    const std::size_t pairs = n / 2;
    const __m256d odd_sign = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // Dot product of row i of a with conj(row j of b), vectorized over k.
            __m256d dot = _mm256_setzero_pd();    // (ar*br, ai*bi, ...)
            __m256d cross = _mm256_setzero_pd();  // (ar*bi, ai*br, ...)
            for (std::size_t kp = 0; kp < pairs; ++kp) {
                const __m256d av = _mm256_loadu_pd(ad + 2 * (i * n + 2 * kp));
                const __m256d bv = _mm256_loadu_pd(bd + 2 * (j * n + 2 * kp));
                dot = _mm256_fmadd_pd(av, bv, dot);
                cross = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0x5), cross);
            }
            double re = hsum(dot);
            double im = hsum(_mm256_mul_pd(cross, odd_sign));
            if (n % 2 == 1) {
                const cdouble x = a[i * n + n - 1];
                const cdouble y = b[j * n + n - 1];
                re += x.real() * y.real() + x.imag() * y.imag();
                im += x.imag() * y.real() - x.real() * y.imag();
            }
            c[i * n + j] = {re, im};
        }
    }
}

namespace {

// Sum of max(0, Re)^2 + Im^2 over the contiguous entries m[0, count).
double penalty_run(const cdouble* m, std::size_t count, __m256d lower) {
    const auto* md = reinterpret_cast<const double*>(m);
    __m256d acc = _mm256_setzero_pd();
    std::size_t idx = 0;
    for (; idx + 2 <= count; idx += 2) {
        const __m256d v = _mm256_max_pd(_mm256_loadu_pd(md + 2 * idx), lower);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double sum = hsum(acc);
    for (; idx < count; ++idx) {
        const double re = m[idx].real() > 0.0 ? m[idx].real() : 0.0;
        sum += re * re + m[idx].imag() * m[idx].imag();
    }
    return sum;
}

}  // namespace

double offdiag_penalty(std::size_t n, const cdouble* m) {
    // max(v, 0) on Re lanes, v on Im lanes.
    const __m256d lower = _mm256_setr_pd(0.0, -INFINITY, 0.0, -INFINITY);
    double sum = 0.0;
    // Off-diagonal entries form n-1 contiguous runs between diagonal
    // elements: m[j*n + j + 1, (j+1)*n + j + 1).
    for (std::size_t j = 0; j + 1 < n; ++j) sum += penalty_run(m + j * n + j + 1, n, lower);
    return sum;
}

}  // namespace stoq::kernels::avx2
