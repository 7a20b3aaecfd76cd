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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every threshold is pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stoq/bloch.hpp"
#include "stoq/certificates.hpp"
#include "stoq/curing.hpp"
#include "stoq/invariants.hpp"
#include "stoq/io.hpp"
#include "stoq/linalg.hpp"
#include "stoq/su_basis.hpp"

namespace {

using namespace stoq;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;  // 0: no limit stated
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<HermitianMatrix> gue_set(std::size_t d, std::size_t m, std::uint64_t seed) {
    std::vector<HermitianMatrix> out;
    for (std::size_t i = 0; i < m; ++i) out.push_back(random_traceless_hermitian(d, derive_seed(seed, i)));
    return out;
}

std::vector<HermitianMatrix> conjugated(std::span<const HermitianMatrix> s, const UnitaryMatrix& u) {
    std::vector<HermitianMatrix> out;
    for (const auto& h : s) out.push_back(conjugate(u, h));
    return out;
}

BlochVector random_bloch(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    std::vector<double> c(d * d - 1);
    for (double& v : c) v = n(rng);
    return BlochVector(d, std::move(c));
}

Outcome structure_constants() {
    constexpr double kTol = 1e-12;
    double worst = 0.0;
    bool counts = true;
    for (std::size_t d = 2; d <= 6; ++d) {
        const auto a = structure_constants_analytic(d);
        const auto o = structure_constants_trace(build_basis(d));
        counts &= a.symmetric().size() == o.symmetric().size();
        worst = std::max(worst, max_symmetric_difference(a, o));
    }
    const bool qubit_empty = structure_constants_analytic(2).symmetric().empty();
    const auto t = structure_constants_analytic(3);
    const double r3 = 1.0 / std::sqrt(3.0);
    const double spot = std::max({std::abs(t.d(1, 1, 8) - r3), std::abs(t.d(6, 1, 4) - 0.5),
                                  std::abs(t.d(8, 8, 8) + r3)});
    return {counts && worst <= kTol && qubit_empty && spot <= kTol,
            fmt("max |analytic-oracle| %.2e over d=2..6, counts %s, d=2 empty %s, spot error %.2e", worst,
                counts ? "equal" : "differ", qubit_empty ? "yes" : "no", spot)};
}

Outcome star_algebra() {
    constexpr double kTol = 1e-12;
    constexpr double kAssocDefect = 1e-3;
    double distrib = 0.0, cyc = 0.0;
    bool commutative = true, assoc_all = true;
    for (std::size_t d = 2; d <= 5; ++d) {
        auto table = structure_constants_analytic(d);
        std::mt19937_64 rng(20 + d);
        double assoc = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const auto a = random_bloch(d, rng), b = random_bloch(d, rng), c = random_bloch(d, rng);
            const auto ab = star(a, b, table);
            commutative &= ab == star(b, a, table);
            distrib = std::max(distrib, (star(a, b + c, table) - ab - star(a, c, table)).norm());
            const double abc = dot(ab, c);
            cyc = std::max({cyc, std::abs(abc - dot(star(b, c, table), a)), std::abs(abc - dot(star(a, c, table), b))});
            assoc = std::max(assoc, (star(ab, c, table) - star(a, star(b, c, table), table)).norm());
        }
        if (d >= 3) assoc_all &= assoc > kAssocDefect;
    }
    return {commutative && distrib <= kTol && cyc <= kTol && assoc_all,
            fmt("commutative %s, distributivity %.2e, cyclic-dot %.2e, associativity witness for d=3..5 %s",
                commutative ? "exact" : "NO", distrib, cyc, assoc_all ? "found" : "missing")};
}

Outcome bloch_invariants() {
    constexpr double kTol = 1e-10;
    double pair = 0.0, triple = 0.0;
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto basis = build_basis(d);
        const auto table = structure_constants_trace(basis);
        for (std::uint64_t s = 0; s < 500; ++s) {
            const auto set = gue_set(d, 3, derive_seed(d, s));
            std::vector<BlochVector> b;
            for (const auto& h : set) b.push_back(to_bloch(h, basis));
            const Complex t2 = (set[0].matrix() * set[1].matrix()).trace();
            pair = std::max(pair, std::abs(t2.real() - 2.0 * dot(b[0], b[1])));
            const Complex t3 = (set[0].matrix() * set[1].matrix() * set[2].matrix()).trace();
            triple = std::max(triple, std::abs(t3 - triple_invariant(b[0], b[1], b[2], table)));
        }
    }
    return {pair <= kTol && triple <= kTol, fmt("pair defect %.2e, triple defect %.2e over 1500 tuples", pair, triple)};
}

Outcome conjugation_soundness() {
    constexpr double kTol = 1e-8;
    double worst = 0.0;
    const auto words = enumerate_words(2, 6, 1);
    for (std::size_t d : {3, 4}) {
        const auto basis = build_basis(d);
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto set = gue_set(d, 2, derive_seed(40 + d, s));
            const auto conj = conjugated(set, random_unitary(basis, derive_seed(50 + d, s)));
            for (const auto& w : words) worst = std::max(worst, std::abs(word_trace(set, w) - word_trace(conj, w)));
        }
    }
    return {worst <= kTol, fmt("max word-trace difference %.2e over 100 (S,U), %zu words", worst, words.size())};
}

bool spectra_equal(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
    const auto x = eigenvalues(a), y = eigenvalues(b);
    double scale = 1.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < x.size(); ++k)
        if (std::abs(x[k] - y[k]) > tol * scale) return false;
    return true;
}

Outcome pair_similarity() {
    constexpr double kOracleTol = 1e-7;
    int disagree_trace = 0, disagree_bloch = 0, similar = 0, total = 0;
    for (std::size_t d = 2; d <= 5; ++d) {
        const auto basis = build_basis(d);
        const auto table = structure_constants_analytic(d);
        for (std::uint64_t s = 0; s < 250; ++s, ++total) {
            const auto h = random_traceless_hermitian(d, derive_seed(60 + d, s));
            const HermitianMatrix hp = s % 2 == 0 ? conjugate(random_unitary(basis, derive_seed(70 + d, s)), h)
                                                  : random_traceless_hermitian(d, derive_seed(80 + d, s));
            const bool oracle = spectra_equal(h, hp, kOracleTol);
            similar += oracle;
            disagree_trace += pair_similarity_trace(h, hp) != oracle;
            disagree_bloch += pair_similarity_bloch(to_bloch(h, basis), to_bloch(hp, basis), table) != oracle;
        }
    }
    return {disagree_trace == 0 && disagree_bloch == 0,
            fmt("%d pairs (%d similar): trace disagreements %d, Bloch disagreements %d", total, similar,
                disagree_trace, disagree_bloch)};
}

Outcome word_length_bound() {
    const auto b = max_word_length(2, 2);
    bool monotone = true;
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t d = 2; d <= 6; ++d) {
            const auto l = max_word_length(m, d).l_max;
            if (m < 6) monotone &= l <= max_word_length(m + 1, d).l_max;
            if (d < 6) monotone &= l <= max_word_length(m, d + 1).l_max;
        }
    return {b.c == 4 && b.n == 8 && b.l_max == 22 && monotone,
            fmt("(m,d)=(2,2): c=%zu n=%zu l_max=%zu; monotone over m<=6, d<=6: %s", b.c, b.n, b.l_max,
                monotone ? "yes" : "no")};
}

Outcome nogo_ensemble() {
    const auto basis3 = build_basis(3);
    const auto table3 = structure_constants_analytic(3);
    int span_fail = 0, pair_fail = 0, rank8 = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto set = gue_set(3, 2, derive_seed(700, s));
        const auto span = span_nogo_check(set, basis3, table3);
        span_fail += !span.passed;
        rank8 += span.witness && span.witness->at("rank").front() == 8.0;
        pair_fail += !paired_eigenvalue_check(set).passed;
    }
    int both_pass = 0, yes_total = 0;
    for (std::size_t d : {3, 4, 5}) {
        const auto basis = build_basis(d);
        const auto table = structure_constants_analytic(d);
        const int count = d == 3 ? 34 : 33;
        for (int s = 0; s < count; ++s, ++yes_total) {
            // Alternate planted instances and directly conjugated stoquastic sets.
            std::vector<HermitianMatrix> set;
            if (s % 2 == 0) {
                set = plant_instance(d, 2, derive_seed(710 + d, s), basis).set;
            } else {
                set = conjugated(random_stoquastic_set(d, 3, derive_seed(720 + d, s)),
                                 random_unitary(basis, derive_seed(730 + d, s)));
            }
            both_pass += paired_eigenvalue_check(set).passed && span_nogo_check(set, basis, table).passed;
        }
    }
    return {span_fail >= 99 && pair_fail >= 99 && both_pass == yes_total,
            fmt("GUE d=3: span fails %d/100 (rank 8 in %d), pairing fails %d/100; yes-instances pass both %d/%d",
                span_fail, rank8, pair_fail, both_pass, yes_total)};
}

Outcome qubit_curing() {
    constexpr double kPenalty = 1e-8;
    const auto basis = build_basis(2);
    int cured = 0;
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        CuringConfig cfg;
        cfg.seed = s;
        const auto r = cure_search(gue_set(2, 2, derive_seed(800, s)), cfg, basis);
        cured += r.penalty < kPenalty;
        worst = std::max(worst, r.penalty);
    }
    return {cured == 50, fmt("%d/50 cured, worst penalty %.2e", cured, worst)};
}

Outcome planted_curing() {
    constexpr double kPenalty = 1e-8;
    const auto basis = build_basis(3);
    int cured = 0, verified = 0, found = 0;
    std::size_t restarts = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        CuringConfig cfg;
        cfg.seed = s;
        cfg.restarts = 50;
        const auto p = plant_instance(3, 2, derive_seed(900, s), basis);
        const auto r = cure_search(p.set, cfg, basis);
        restarts += r.restarts_used;
        cured += r.penalty < kPenalty;
        if (r.found) {
            ++found;
            bool ok = true;
            for (const auto& h : r.transformed) ok &= is_stoquastic(h, 10 * cfg.success_tol);
            verified += ok;
        }
    }
    return {cured >= 16 && verified == found,
            fmt("%d/20 cured (need 16), %d/%d successes verify is_stoquastic, %zu restarts total", cured, verified,
                found, restarts)};
}

Outcome block_encoding_similarity() {
    constexpr double kSame = 1e-8;
    constexpr double kDiffer = 1e-6;
    const auto basis = build_basis(2);
    const auto words6 = enumerate_words(2, 6, 1);
    const auto words4 = enumerate_words(2, 4, 1);
    auto pair_of = [](std::span<const HermitianMatrix> s) {
        const auto enc = block_encoding(s, 4);
        return std::vector<ComplexMatrix>{enc.matrix, enc.matrix.adjoint()};
    };
    double worst_same = 0.0;
    int separated = 0;
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto set = gue_set(2, 2, derive_seed(1000, s));
        const auto a = pair_of(set);
        const auto b = pair_of(conjugated(set, random_unitary(basis, derive_seed(1001, s))));
        for (const auto& w : words6) worst_same = std::max(worst_same, std::abs(word_trace(a, w) - word_trace(b, w)));

        const auto c = pair_of(gue_set(2, 2, derive_seed(1002, s)));
        double biggest = 0.0;
        for (const auto& w : words4) biggest = std::max(biggest, std::abs(word_trace(a, w) - word_trace(c, w)));
        separated += biggest > kDiffer;
    }
    return {worst_same <= kSame && separated == 20,
            fmt("similar pairs: max difference %.2e to length 6; dissimilar pairs separated by length 4: %d/20",
                worst_same, separated)};
}

Outcome diag_agreement() {
    int agree = 0, total = 0, rank_rejects_commuting = 0, commuting = 0;
    for (std::size_t d = 2; d <= 5; ++d) {
        const auto basis = build_basis(d);
        const auto table = structure_constants_analytic(d);
        for (std::uint64_t s = 0; s < 50; ++s, ++total) {
            std::vector<HermitianMatrix> set;
            if (s % 2 == 0) {
                // Commuting by construction: diagonal matrices rotated by a common unitary.
                std::mt19937_64 rng(derive_seed(1100 + d, s));
                std::normal_distribution<double> n;
                const auto u = random_unitary(basis, derive_seed(1200 + d, s));
                for (std::size_t k = 0; k < 1 + s % 3; ++k) {
                    std::vector<double> diag(d);
                    for (double& v : diag) v = n(rng);
                    set.push_back(conjugate(u, remove_trace(HermitianMatrix(ComplexMatrix::diagonal(diag))).matrix));
                }
            } else {
                set = gue_set(d, 2 + s % 2, derive_seed(1300 + d, s));
            }
            const auto r = diag_nogo_check(set, basis, table);
            const bool vanish = r.witness->at("commutators_vanish").front() == 1.0;
            const bool rank_ok = r.witness->at("rank_check_passed").front() == 1.0;
            agree += vanish == rank_ok;
            commuting += vanish;
            rank_rejects_commuting += vanish && !rank_ok;
        }
    }
    return {agree == total && rank_rejects_commuting == 0,
            fmt("%d/%d agree (%d commuting), rank check rejected %d commuting sets", agree, total, commuting,
                rank_rejects_commuting)};
}

Outcome determinism() {
    // Same input, flags and seed, run twice with different worker counts.
    HamiltonianSetFile file;
    file.d = 3;
    file.hamiltonians = plant_instance(3, 2, 4242, build_basis(3)).set;
    const std::string raw = dump_set(file);
    auto report = [&](std::size_t threads) {
        const auto input = parse_set(raw);
        AnalysisConfig cfg;
        cfg.curing.seed = 17;
        cfg.curing.threads = threads;
        ReportOptions opts;
        opts.input_digest = sha256_hex(raw);
        opts.seed = 17;
        return analysis_report(input, analyze(input.hamiltonians, cfg), opts);
    };
    const std::string a = report(1);
    const std::string b = report(4);
    const std::string c = report(0);
    const bool same = a == b && b == c;
    return {same, fmt("%zu-byte reports %s across three runs (1, 4, auto workers)", a.size(),
                      same ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "structure-constant fidelity", 10, structure_constants},
        {2, "star-product algebra", 30, star_algebra},
        {3, "Bloch invariant identities", 0, bloch_invariants},
        {4, "conjugation preserves word traces", 0, conjugation_soundness},
        {5, "pair similarity criteria", 0, pair_similarity},
        {6, "word-length bound", 0, word_length_bound},
        {7, "no-go ensembles", 120, nogo_ensemble},
        {8, "qubit pair curing", 60, qubit_curing},
        {9, "planted qutrit curing", 300, planted_curing},
        {10, "block-encoding similarity", 0, block_encoding_similarity},
        {11, "diagonalizability rank vs commutators", 0, diag_agreement},
        {12, "report determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::string limit = c.time_limit_s > 0 ? fmt(" (limit %.0f s)", c.time_limit_s) : "";
        std::printf("%s criterion %2d %s: %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs, limit.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
