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

#include <cstdlib>
#include <string_view>

#include "stoq/kernels.hpp"

namespace stoq::kernels {

const KernelTable& scalar_table() {
    static const KernelTable table{"scalar", &scalar::gemm, &scalar::gemm_adjoint, &scalar::offdiag_penalty};
    return table;
}

const KernelTable* avx2_table() {
#ifdef STOQ_HAVE_AVX2_KERNELS
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    static const KernelTable table{"avx2", &avx2::gemm, &avx2::gemm_adjoint, &avx2::offdiag_penalty};
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() {
    static const KernelTable& chosen = []() -> const KernelTable& {
        const char* env = std::getenv("STOQ_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
        if (const KernelTable* t = avx2_table()) return *t;
        return scalar_table();
    }();
    return chosen;
}

}  // namespace stoq::kernels
