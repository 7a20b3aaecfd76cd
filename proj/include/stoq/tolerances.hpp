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

namespace stoq {

/// Every numerical threshold used by the library, in one place. Functions
/// that need a tolerance take a `const Tolerances&` defaulting to these values.
struct Tolerances {
    // Construction-time invariants (absolute).
    double hermitian = 1e-10;
    double unitary = 1e-10;
    double traceless = 1e-10;

    // Jacobi eigensolver: stop when off-diagonal Frobenius mass falls below
    // jacobi_offdiag * ||H||_F.
    double jacobi_offdiag = 1e-14;
    int jacobi_max_sweeps = 100;
    double reconstruction = 1e-9;

    // Trace-oracle structure constants below this magnitude are dropped.
    double structure_zero = 1e-13;

    // Star closure: a residual is a new direction iff its norm exceeds
    // closure_rank * (max input norm).
    double closure_rank = 1e-8;

    // Relative to the commutator spectral norm.
    double pairing = 1e-8;

    // Relative tolerance for trace-power / Bloch-power similarity tests.
    double similarity = 1e-8;

    // ||[A,B]||_F <= commutation * ||A||_F ||B||_F counts as commuting.
    double commutation = 1e-10;

    // Off-diagonal Re <= stoquastic and |Im| <= stoquastic.
    double stoquastic = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace stoq
