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

#include "stoq/certificates.hpp"

#include <algorithm>
#include <cmath>

#include "stoq/bloch.hpp"
#include "stoq/linalg.hpp"

namespace stoq {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NotStoquasticizable: return "NotStoquasticizable";
        case Verdict::Inconclusive: return "Inconclusive";
        case Verdict::StoquasticBasisFound: return "StoquasticBasisFound";
    }
    return "?";
}

namespace {

void require_common_dim(std::span<const HermitianMatrix> set, const char* what) {
    for (const auto& h : set)
        if (h.dim() != set.front().dim()) throw Error(std::string(what) + ": mixed dimensions in set");
}

std::vector<BlochVector> traceless_bloch(std::span<const HermitianMatrix> set, const GellMannBasis& basis) {
    std::vector<BlochVector> out;
    for (const auto& h : set) out.push_back(to_bloch_traceless(h, basis));
    return out;
}

}  // namespace

bool is_stoquastic(const HermitianMatrix& h, double tol) {
    for (std::size_t j = 0; j < h.dim(); ++j) {
        for (std::size_t k = 0; k < h.dim(); ++k) {
            if (j == k) continue;
            if (h(j, k).real() > tol || std::abs(h(j, k).imag()) > tol) return false;
        }
    }
    return true;
}

CheckResult paired_eigenvalue_check(std::span<const HermitianMatrix> set, double tol) {
    if (set.size() < 2) throw Error("paired_eigenvalue_check: need at least two matrices");
    require_common_dim(set, "paired_eigenvalue_check");
    CheckResult r{"paired_eigenvalues", true, true, std::nullopt};
    double worst = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const auto ev = eigenvalues(commutator_i(set[i], set[j]));
            const double norm = std::max(std::abs(ev.front()), std::abs(ev.back()));
            double defect = 0.0;
            for (std::size_t k = 0; k < ev.size(); ++k) defect = std::max(defect, std::abs(ev[k] + ev[ev.size() - 1 - k]));
            const double rel = norm > 0.0 ? defect / norm : 0.0;
            worst = std::max(worst, rel);
            if (rel > tol) {
                r.passed = false;
                r.witness = Witness{{"pair", {double(i + 1), double(j + 1)}},
                                    {"spectrum", ev},
                                    {"relative_defect", {rel}}};
                return r;
            }
        }
    }
    r.witness = Witness{{"max_relative_defect", {worst}}};
    return r;
}

CheckResult span_nogo_check(std::span<const HermitianMatrix> set, const GellMannBasis& basis,
                            const StructureConstantTable& table, const Tolerances& tol) {
    if (set.empty()) throw Error("span_nogo_check: empty set");
    require_common_dim(set, "span_nogo_check");
    const auto vectors = traceless_bloch(set, basis);
    const StarClosure closure = star_closure(vectors, table, tol.closure_rank);
    const double d = static_cast<double>(basis.dim());
    const std::size_t bound = (basis.dim() * basis.dim() + basis.dim() - 2) / 2;
    CheckResult r{"span_nogo", closure.rank <= bound, true, std::nullopt};
    r.witness = Witness{{"rank", {double(closure.rank)}},
                        {"bound", {double(bound)}},
                        {"stated_bound", {(d * d + d - 1.0) / 2.0}},
                        {"generations", {double(closure.generations)}}};
    return r;
}

CheckResult diag_nogo_check(std::span<const HermitianMatrix> set, const GellMannBasis& basis,
                            const StructureConstantTable& table, const Tolerances& tol) {
    if (set.empty()) throw Error("diag_nogo_check: empty set");
    require_common_dim(set, "diag_nogo_check");
    const auto vectors = traceless_bloch(set, basis);
    const StarClosure closure = star_closure(vectors, table, tol.closure_rank);
    const std::size_t bound = basis.dim() - 1;
    const bool rank_ok = closure.rank <= bound;

    bool commute = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            const ComplexMatrix& a = set[i].matrix();
            const ComplexMatrix& b = set[j].matrix();
            const double c = (a * b - b * a).frobenius_norm();
            const double scale = a.frobenius_norm() * b.frobenius_norm();
            const double rel = scale > 0.0 ? c / scale : 0.0;
            worst = std::max(worst, rel);
            if (rel > tol.commutation) commute = false;
        }
    }
    CheckResult r{"simultaneous_diagonalizability", commute, false, std::nullopt};
    r.witness = Witness{{"rank", {double(closure.rank)}},
                        {"bound", {double(bound)}},
                        {"rank_check_passed", {rank_ok ? 1.0 : 0.0}},
                        {"commutators_vanish", {commute ? 1.0 : 0.0}},
                        {"max_relative_commutator", {worst}}};
    return r;
}

Certificate analyze(std::span<const HermitianMatrix> input, const AnalysisConfig& config) {
    if (input.empty()) throw Error("analyze: empty set");
    require_common_dim(input, "analyze");
    const std::size_t d = input.front().dim();
    if (d < 2) throw Error("analyze: dimension must be >= 2");

    Certificate cert;
    cert.tolerances = config.tol;
    std::vector<HermitianMatrix> set;
    for (const auto& h : input) {
        auto part = remove_trace(h);
        cert.trace_shifts.push_back(part.shift);
        set.push_back(std::move(part.matrix));
    }

    const GellMannBasis basis = build_basis(d);

    const bool all_stoq =
        std::all_of(set.begin(), set.end(), [&](const HermitianMatrix& h) { return is_stoquastic(h, config.tol.stoquastic); });
    cert.checks.push_back({"stoquastic_as_given", all_stoq, false, std::nullopt});
    if (all_stoq) {
        CuringResult id;
        id.found = true;
        id.theta.assign(basis.size(), 0.0);
        id.unitary = UnitaryMatrix::identity(d);
        id.transformed = set;
        id.penalty = stoq_penalty(set);
        id.restarts_used = 0;
        cert.curing = std::move(id);
        cert.verdict = Verdict::StoquasticBasisFound;
        return cert;
    }
    cert.checks.back().witness = Witness{{"penalty", {stoq_penalty(set)}}};

    const StructureConstantTable table = structure_constants_analytic(d);
    if (set.size() >= 2) cert.checks.push_back(paired_eigenvalue_check(set, config.tol.pairing));
    cert.checks.push_back(span_nogo_check(set, basis, table, config.tol));
    cert.checks.push_back(diag_nogo_check(set, basis, table, config.tol));

    const bool nogo = std::any_of(cert.checks.begin(), cert.checks.end(),
                                  [](const CheckResult& c) { return c.necessary && !c.passed; });
    if (config.cure && !(nogo && config.stop_on_nogo)) cert.curing = cure_search(set, config.curing, basis);

    if (nogo) {
        cert.verdict = Verdict::NotStoquasticizable;
    } else if (cert.curing && cert.curing->found) {
        cert.verdict = Verdict::StoquasticBasisFound;
    } else {
        cert.verdict = Verdict::Inconclusive;
    }
    return cert;
}

}  // namespace stoq
