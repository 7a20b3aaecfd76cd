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

// stoqcheck command-line tool.
//
// Exit codes for analyze/cure: 0 StoquasticBasisFound, 1 NotStoquasticizable,
// 2 Inconclusive, 3 error. Usage errors use CLI11's codes (all > 2).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "stoq/bloch.hpp"
#include "stoq/certificates.hpp"
#include "stoq/curing.hpp"
#include "stoq/invariants.hpp"
#include "stoq/io.hpp"
#include "stoq/linalg.hpp"
#include "stoq/su_basis.hpp"

namespace {

constexpr int kErrorExit = 3;
constexpr std::size_t kWordCapGuard = 12;

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
    } else {
        stoq::write_file(out, text);
    }
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("STOQCHECK_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw stoq::Error("STOQCHECK_SEED is not an unsigned integer");
        }
    }
    return 0;
}

std::string complex_cell(stoq::Complex z) {
    return stoq::format_double(z.real()) + (z.imag() < 0 || std::signbit(z.imag()) ? "" : "+") +
           stoq::format_double(z.imag()) + "i";
}

int cmd_basis(std::size_t d, bool check, const std::string& out) {
    const auto basis = stoq::build_basis(d);
    const auto analytic = stoq::structure_constants_analytic(d);
    const auto oracle = stoq::structure_constants_trace(basis);
    std::string text = "# generalized Gell-Mann basis d=" + std::to_string(d) + ", " + std::to_string(basis.size()) +
                       " elements, Tr(l_i l_j) = 2 delta_ij\n";
    const char* sector_name[] = {"X", "Y", "D"};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis.index().at(i + 1);
        text += "element " + std::to_string(i + 1) + " " + sector_name[static_cast<int>(e.sector)] + " " +
                std::to_string(e.j) + (e.sector == stoq::Sector::D ? "" : "," + std::to_string(e.k)) + "\n";
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) text += (c ? " " : "  ") + complex_cell(basis[i](r, c));
            text += "\n";
        }
    }
    text += "# symmetric structure constants d_ijk (i <= j <= k), count " +
            std::to_string(analytic.symmetric().size()) + "\n";
    for (const auto& [t, v] : analytic.symmetric())
        text += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
                stoq::format_double(v) + "\n";
    text += "# antisymmetric structure constants f_ijk (i < j < k), count " +
            std::to_string(oracle.antisymmetric().size()) + "\n";
    for (const auto& [t, v] : oracle.antisymmetric())
        text += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
                stoq::format_double(v) + "\n";

    int rc = 0;
    if (check) {
        const double diff = stoq::max_symmetric_difference(analytic, oracle);
        const bool counts = analytic.symmetric().size() == oracle.symmetric().size();
        const bool ok = counts && diff <= 1e-12;
        text += "# check: analytic count " + std::to_string(analytic.symmetric().size()) + ", oracle count " +
                std::to_string(oracle.symmetric().size()) + ", max |difference| " + stoq::format_double(diff) +
                (ok ? " OK" : " MISMATCH") + "\n";
        rc = ok ? 0 : 1;
    }
    emit(text, out);
    return rc;
}

struct RunFlags {
    std::optional<double> tol;
    std::size_t word_cap = 6;
    std::size_t restarts = 50;
    std::optional<std::uint64_t> seed;
    bool no_cure = false;
    bool force = false;
    bool timings = false;
    std::string out;
};

int cmd_analyze(const std::string& path, const RunFlags& f) {
    const auto start = std::chrono::steady_clock::now();
    const std::string raw = stoq::read_file(path);
    const auto input = stoq::parse_set(raw);
    if (f.word_cap > kWordCapGuard && !f.force) {
        throw stoq::Error("--word-cap above " + std::to_string(kWordCapGuard) + " needs --force");
    }
    stoq::AnalysisConfig cfg;
    if (f.tol) {
        cfg.tol.pairing = *f.tol;
        cfg.tol.similarity = *f.tol;
    }
    cfg.cure = !f.no_cure;
    cfg.curing.restarts = f.restarts;
    cfg.curing.seed = f.seed ? *f.seed : default_seed();
    const auto cert = stoq::analyze(input.hamiltonians, cfg);

    stoq::ReportOptions opts;
    opts.input_digest = stoq::sha256_hex(raw);
    opts.seed = cfg.curing.seed;
    opts.word_cap = f.word_cap;
    if (f.timings) opts.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(stoq::analysis_report(input, cert, opts), f.out);
    return stoq::exit_code(cert.verdict);
}

int cmd_cure(const std::string& path, const RunFlags& f) {
    const auto start = std::chrono::steady_clock::now();
    const std::string raw = stoq::read_file(path);
    const auto input = stoq::parse_set(raw);
    std::vector<stoq::HermitianMatrix> set;
    for (const auto& h : input.hamiltonians) set.push_back(stoq::remove_trace(h).matrix);
    stoq::CuringConfig cfg;
    cfg.restarts = f.restarts;
    cfg.seed = f.seed ? *f.seed : default_seed();
    const auto basis = stoq::build_basis(input.d);
    const auto result = stoq::cure_search(set, cfg, basis);

    stoq::ReportOptions opts;
    opts.input_digest = stoq::sha256_hex(raw);
    opts.seed = cfg.seed;
    if (f.timings) opts.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(stoq::curing_report(input, result, cfg, opts), f.out);
    return result.found ? 0 : 2;
}

int cmd_invariants(const std::string& path, const RunFlags& f) {
    if (f.word_cap > kWordCapGuard && !f.force) {
        throw stoq::Error("--word-cap above " + std::to_string(kWordCapGuard) +
                          " enumerates m^l words; pass --force to proceed");
    }
    const auto input = stoq::load_set(path);
    emit(stoq::format_word_table(stoq::word_table(input.hamiltonians, f.word_cap)), f.out);
    return 0;
}

int cmd_random(std::size_t d, std::size_t m, const std::string& kind, std::uint64_t seed, const std::string& out) {
    stoq::HamiltonianSetFile file;
    file.d = d;
    file.metadata.seed = seed;
    file.metadata.kind = kind;
    if (kind == "gue") {
        for (std::size_t i = 0; i < m; ++i)
            file.hamiltonians.push_back(stoq::random_traceless_hermitian(d, stoq::derive_seed(seed, i)));
    } else if (kind == "stoquastic") {
        file.hamiltonians = stoq::random_stoquastic_set(d, m, seed);
    } else if (kind == "planted") {
        const auto basis = stoq::build_basis(d);
        auto planted = stoq::plant_instance(d, m, seed, basis);
        file.hamiltonians = std::move(planted.set);
        file.metadata.theta_star = std::move(planted.theta_star);
        file.metadata.note = "scrambled by U(theta_star); U(theta_star)^dagger restores a stoquastic set";
    } else {
        throw stoq::Error("unknown kind '" + kind + "' (expected gue, stoquastic or planted)");
    }
    emit(stoq::dump_set(file), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stoqcheck: stoquasticity certificates and basis search for sets of Hamiltonians"};
    app.require_subcommand(1);

    RunFlags flags;
    std::string input;

    auto* basis = app.add_subcommand("basis", "print the generalized Gell-Mann basis and structure constants");
    std::size_t basis_d = 0;
    bool basis_check = false;
    basis->add_option("d", basis_d, "dimension")->required()->check(CLI::Range(2, 16));
    basis->add_flag("--check", basis_check, "compare analytic and trace-oracle tables; exit 1 on mismatch");
    basis->add_option("--out", flags.out, "output path (default stdout)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "Hamiltonian set file")->required();
        sub->add_option("--out", flags.out, "report path (default stdout)");
        sub->add_option("--seed", flags.seed, "master seed (default $STOQCHECK_SEED or 0)");
        sub->add_flag("--timings", flags.timings, "include wall-clock timings in the report");
    };

    auto* analyze = app.add_subcommand("analyze", "run no-go certificates and the curing search");
    add_common(analyze);
    analyze->add_option("--tol", flags.tol, "relative tolerance for pairing and similarity checks");
    analyze->add_option("--word-cap", flags.word_cap, "longest word in the invariant table (0 disables)");
    analyze->add_option("--restarts", flags.restarts, "curing restarts")->check(CLI::PositiveNumber);
    analyze->add_flag("--no-cure", flags.no_cure, "skip the curing search");
    analyze->add_flag("--force", flags.force, "allow --word-cap above 12");

    auto* cure = app.add_subcommand("cure", "search for a simultaneously stoquasticizing unitary");
    add_common(cure);
    cure->add_option("--restarts", flags.restarts, "curing restarts")->check(CLI::PositiveNumber);

    auto* inv = app.add_subcommand("invariants", "print canonical word traces");
    inv->add_option("input", input, "Hamiltonian set file")->required();
    inv->add_option("--word-cap", flags.word_cap, "longest word");
    inv->add_option("--out", flags.out, "output path (default stdout)");
    inv->add_flag("--force", flags.force, "allow --word-cap above 12");

    auto* random = app.add_subcommand("random", "generate a Hamiltonian set file");
    std::size_t rd = 0, rm = 0;
    std::string kind = "gue";
    random->add_option("d", rd, "dimension")->required()->check(CLI::Range(2, 16));
    random->add_option("m", rm, "number of Hamiltonians")->required()->check(CLI::PositiveNumber);
    random->add_option("--kind", kind, "gue | stoquastic | planted")->check(CLI::IsMember({"gue", "stoquastic", "planted"}));
    random->add_option("--seed", flags.seed, "seed (default $STOQCHECK_SEED or 0)");
    random->add_option("--out", flags.out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) return cmd_basis(basis_d, basis_check, flags.out);
        if (analyze->parsed()) return cmd_analyze(input, flags);
        if (cure->parsed()) return cmd_cure(input, flags);
        if (inv->parsed()) return cmd_invariants(input, flags);
        if (random->parsed()) return cmd_random(rd, rm, kind, flags.seed ? *flags.seed : default_seed(), flags.out);
    } catch (const std::exception& e) {
        std::cerr << "stoqcheck: " << e.what() << "\n";
        return kErrorExit;
    }
    return kErrorExit;
}
