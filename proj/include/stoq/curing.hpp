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
#include <cstdint>
#include <span>
#include <vector>

#include "stoq/linalg.hpp"
#include "stoq/matrix.hpp"
#include "stoq/su_basis.hpp"

namespace stoq {

struct CuringConfig {
    std::size_t restarts = 50;
    std::size_t max_iters = 2000;
    double success_tol = 1e-10;
    double fd_step = 1e-6;
    std::uint64_t seed = 0;
    double shrink = 0.5;
    double initial_step = 0.1;
    /// Levenberg-Marquardt steps applied to the end point of each descent.
    /// Gradient descent alone stalls around penalty ~ success_tol, which
    /// leaves entries of size sqrt(success_tol); the polish drives them to
    /// round-off. 0 disables.
    std::size_t polish_iters = 30;
    /// Restarts after the first run in fixed-size batches; the search stops
    /// after the first batch containing a success. Batch size, not thread
    /// count, determines the result.
    std::size_t batch = 8;
    /// Worker threads per batch; 0 picks hardware_concurrency.
    std::size_t threads = 0;

    /// Throws Error on non-positive fields or success_tol >= 1e-4.
    void validate() const;
};

struct CuringResult {
    bool found = false;
    std::vector<double> theta;  // generator coordinates, length d^2-1
    UnitaryMatrix unitary;
    std::vector<HermitianMatrix> transformed;
    double penalty = 0.0;
    /// max over members and j != k of max(Re H'_jk, |Im H'_jk|).
    double max_violation = 0.0;
    std::size_t best_restart = 0;
    std::size_t restarts_used = 0;
    std::size_t iterations_total = 0;

    static constexpr const char* kNegativeNote =
        "no stoquasticizing unitary was found; this is not a proof that none exists";
};

/// sum over members, sum_{j != k} max(0, Re H_jk)^2 + (Im H_jk)^2.
double stoq_penalty(std::span<const HermitianMatrix> set);

/// Penalty of {U(theta) H U(theta)^dagger}.
double curing_objective(std::span<const HermitianMatrix> set, std::span<const double> theta,
                        const GellMannBasis& basis);

/// Central-difference gradient of curing_objective with step h.
std::vector<double> curing_gradient(std::span<const HermitianMatrix> set, std::span<const double> theta,
                                    const GellMannBasis& basis, double h);

/// Multi-start finite-difference gradient descent with backtracking over
/// U = exp(i theta . lambda). Restart 0 starts at theta = 0; later restarts
/// draw theta uniformly from [-pi, pi]^(d^2-1) with per-restart seeds derived
/// from config.seed. found requires penalty < success_tol and every
/// off-diagonal entry within 10 * success_tol of the stoquastic cone.
CuringResult cure_search(std::span<const HermitianMatrix> set, const CuringConfig& config, const GellMannBasis& basis);

struct PlantedInstance {
    std::vector<HermitianMatrix> set;         // V H V^dagger
    std::vector<HermitianMatrix> stoquastic;  // H before scrambling
    std::vector<double> theta_star;           // V = U(theta_star)
};

/// m random traceless stoquastic matrices (off-diagonals -|N(0,1)|,
/// symmetric; diagonal N(0,1) minus trace) scrambled by a random U(theta*).
PlantedInstance plant_instance(std::size_t d, std::size_t m, std::uint64_t seed, const GellMannBasis& basis);

/// Random traceless stoquastic matrices without the scrambling step.
std::vector<HermitianMatrix> random_stoquastic_set(std::size_t d, std::size_t m, std::uint64_t seed);

}  // namespace stoq
