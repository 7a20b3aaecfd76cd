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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stoq/curing.hpp"
#include "stoq/matrix.hpp"
#include "stoq/su_basis.hpp"
#include "stoq/tolerances.hpp"

namespace stoq {

/// Named numeric payload attached to a check.
using Witness = std::map<std::string, std::vector<double>>;

struct CheckResult {
    std::string name;
    bool passed = false;
    /// False for informational checks that never decide the verdict.
    bool necessary = true;
    std::optional<Witness> witness;  // always set when !passed
};

enum class Verdict { NotStoquasticizable, Inconclusive, StoquasticBasisFound };

const char* to_string(Verdict v);

struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<CheckResult> checks;
    std::optional<CuringResult> curing;
    Tolerances tolerances;
    /// Tr(H)/d removed from each member before analysis.
    std::vector<double> trace_shifts;
};

bool is_stoquastic(const HermitianMatrix& h, double tol = kDefaultTolerances.stoquastic);

/// Spectrum of i[H_i, H_j] symmetric under negation for every pair, with
/// tolerance tol * (commutator spectral norm).
CheckResult paired_eigenvalue_check(std::span<const HermitianMatrix> set, double tol = kDefaultTolerances.pairing);

/// Star-closure rank r of the traceless Bloch vectors must satisfy
/// r <= (d^2 + d - 2)/2, the dimension of the X + D sector.
CheckResult span_nogo_check(std::span<const HermitianMatrix> set, const GellMannBasis& basis,
                            const StructureConstantTable& table, const Tolerances& tol = kDefaultTolerances);

/// Simultaneous diagonalizability: the pairwise-commutator test decides; the
/// closure-rank bound r <= d - 1 is reported alongside.
CheckResult diag_nogo_check(std::span<const HermitianMatrix> set, const GellMannBasis& basis,
                            const StructureConstantTable& table, const Tolerances& tol = kDefaultTolerances);

struct AnalysisConfig {
    Tolerances tol;
    bool cure = true;
    /// Skip curing once a necessary condition has failed.
    bool stop_on_nogo = true;
    CuringConfig curing;
};

Certificate analyze(std::span<const HermitianMatrix> set, const AnalysisConfig& config = {});

}  // namespace stoq
