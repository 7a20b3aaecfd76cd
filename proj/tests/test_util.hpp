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

#include <cstdint>
#include <random>
#include <vector>

#include "stoq/bloch.hpp"
#include "stoq/linalg.hpp"
#include "stoq/matrix.hpp"

namespace stoq::testing {

inline HermitianMatrix pauli_x() { return HermitianMatrix(ComplexMatrix(2, {0, 1, 1, 0})); }
inline HermitianMatrix pauli_y() {
    return HermitianMatrix(ComplexMatrix(2, {0, Complex(0, -1), Complex(0, 1), 0}));
}
inline HermitianMatrix pauli_z() { return HermitianMatrix(ComplexMatrix(2, {1, 0, 0, -1})); }

inline HermitianMatrix scaled(const HermitianMatrix& h, double s) {
    return HermitianMatrix::hermitize(Complex(s) * h.matrix());
}

inline std::vector<HermitianMatrix> gue_set(std::size_t d, std::size_t m, std::uint64_t seed) {
    std::vector<HermitianMatrix> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(random_traceless_hermitian(d, derive_seed(seed, i)));
    return out;
}

inline BlochVector random_bloch(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> c(d * d - 1);
    for (double& v : c) v = n(rng);
    return BlochVector(d, std::move(c));
}

inline ComplexMatrix random_complex(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(d);
    for (auto& z : m.entries()) z = Complex(n(rng), n(rng));
    return m;
}

}  // namespace stoq::testing
