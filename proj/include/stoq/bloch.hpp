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

#include <cstddef>
#include <span>
#include <vector>

#include "stoq/matrix.hpp"
#include "stoq/su_basis.hpp"
#include "stoq/tolerances.hpp"

namespace stoq {

/// Real coefficient vector of a traceless Hermitian matrix in the generalized
/// Gell-Mann basis; components ordered by IndexMap (offset = linear - 1).
struct BlochVector {
    std::size_t dim = 0;
    std::vector<double> components;

    BlochVector() = default;
    BlochVector(std::size_t d, std::vector<double> c);
    static BlochVector zero(std::size_t d);
    /// Unit vector along 1-based linear index.
    static BlochVector axis(std::size_t d, std::size_t linear);

    std::size_t size() const { return components.size(); }
    double operator[](std::size_t offset) const { return components[offset]; }
    double& operator[](std::size_t offset) { return components[offset]; }
    double norm() const;

    BlochVector& operator+=(const BlochVector& o);
    BlochVector& operator-=(const BlochVector& o);
    BlochVector& operator*=(double s);
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

BlochVector operator+(BlochVector a, const BlochVector& b);
BlochVector operator-(BlochVector a, const BlochVector& b);
BlochVector operator*(double s, BlochVector a);
double dot(const BlochVector& a, const BlochVector& b);

/// b_i = Tr(H l_i)/2. Requires |Tr H| <= tol.traceless * max(1, ||H||_F).
BlochVector to_bloch(const HermitianMatrix& h, const GellMannBasis& basis, const Tolerances& tol = kDefaultTolerances);
/// Subtracts Tr(H)/d first.
BlochVector to_bloch_traceless(const HermitianMatrix& h, const GellMannBasis& basis);
HermitianMatrix from_bloch(const BlochVector& b, const GellMannBasis& basis);

/// (a * b)_k = d_ijk a_i b_j. Commutative bit-for-bit.
BlochVector star(const BlochVector& a, const BlochVector& b, const StructureConstantTable& table);
/// Left-folded power: b^{*1} = b, b^{*k} = b^{*(k-1)} * b.
BlochVector star_power(const BlochVector& b, std::size_t k, const StructureConstantTable& table);

/// 2 a.b, equal to Tr(H_a H_b).
double pair_invariant(const BlochVector& a, const BlochVector& b);

/// 2 (d_ijk + i f_ijk) a_i b_j c_k, equal to Tr(H_a H_b H_c). The real part
/// is 2 (a * b) . c.
Complex triple_invariant(const BlochVector& a, const BlochVector& b, const BlochVector& c,
                         const StructureConstantTable& table);

struct StarClosure {
    std::size_t dim = 0;
    std::vector<BlochVector> spanning_set;  // orthonormal
    std::size_t rank = 0;
    std::size_t generations = 0;
};

/// Smallest subspace containing span(vectors) and closed under the star
/// product, as an orthonormal spanning set.
StarClosure star_closure(std::span<const BlochVector> vectors, const StructureConstantTable& table,
                         double tol = kDefaultTolerances.closure_rank);

}  // namespace stoq
