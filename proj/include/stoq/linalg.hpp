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
#include <span>
#include <vector>

#include "stoq/matrix.hpp"
#include "stoq/su_basis.hpp"
#include "stoq/tolerances.hpp"

namespace stoq {

struct EigenSystem {
    std::vector<double> eigenvalues;  // ascending
    UnitaryMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Cyclic complex Jacobi. Throws Error naming the remaining off-diagonal
/// mass if the sweep cap is hit.
EigenSystem hermitian_eigensystem(const HermitianMatrix& h, const Tolerances& tol = kDefaultTolerances);

/// Sorted eigenvalues only.
std::vector<double> eigenvalues(const HermitianMatrix& h, const Tolerances& tol = kDefaultTolerances);

/// max_{jk} |(V diag(lambda) V^dagger - H)_jk|
double reconstruction_residual(const EigenSystem& es, const HermitianMatrix& h);

/// Largest |eigenvalue|.
double spectral_norm(const HermitianMatrix& h, const Tolerances& tol = kDefaultTolerances);

/// i(AB - BA).
HermitianMatrix commutator_i(const HermitianMatrix& a, const HermitianMatrix& b);

/// exp(iG) for Hermitian G via its eigendecomposition.
UnitaryMatrix exp_i(const HermitianMatrix& generator, const Tolerances& tol = kDefaultTolerances);

/// exp(i sum_k theta_k lambda_k) over the generalized Gell-Mann basis.
UnitaryMatrix unitary_from_generator(std::span<const double> theta, const GellMannBasis& basis,
                                     const Tolerances& tol = kDefaultTolerances);

/// U H U^dagger (re-Hermitized to remove round-off asymmetry).
HermitianMatrix conjugate(const UnitaryMatrix& u, const HermitianMatrix& h);

/// GUE-style draw: Gaussian complex A, (A + A^dagger)/2, trace removed.
/// Deterministic in seed.
HermitianMatrix random_traceless_hermitian(std::size_t d, std::uint64_t seed);

/// exp(i theta . lambda) with theta uniform in [-pi, pi]^(d^2-1).
UnitaryMatrix random_unitary(const GellMannBasis& basis, std::uint64_t seed);

/// Independent per-member / per-trial seed from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// H - (Tr H / d) I, and the removed shift Tr H / d.
struct TracelessPart {
    HermitianMatrix matrix;
    double shift = 0.0;
};
TracelessPart remove_trace(const HermitianMatrix& h);

}  // namespace stoq
