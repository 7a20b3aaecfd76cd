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

#include "stoq/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "stoq/linalg.hpp"

namespace stoq {

using json = nlohmann::ordered_json;

namespace {

std::vector<std::vector<double>> read_square(const json& j, std::size_t d, const std::string& where) {
    if (!j.is_array() || j.size() != d) {
        throw ParseError(where + ": expected an array of " + std::to_string(d) + " rows");
    }
    std::vector<std::vector<double>> rows(d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = j[r];
        const std::string rw = where + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != d) {
            throw ParseError(rw + ": expected " + std::to_string(d) + " numbers");
        }
        for (std::size_t c = 0; c < d; ++c) {
            if (!row[c].is_number()) throw ParseError(rw + "[" + std::to_string(c) + "]: not a number");
            rows[r].push_back(row[c].get<double>());
        }
    }
    return rows;
}

json matrix_json(const ComplexMatrix& m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        json rr = json::array();
        json ir = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            rr.push_back(m(r, c).real());
            ir.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

json tolerances_json(const Tolerances& t) {
    return json{{"hermitian", t.hermitian},         {"unitary", t.unitary},
                {"traceless", t.traceless},         {"jacobi_offdiag", t.jacobi_offdiag},
                {"jacobi_max_sweeps", t.jacobi_max_sweeps}, {"reconstruction", t.reconstruction},
                {"structure_zero", t.structure_zero}, {"closure_rank", t.closure_rank},
                {"pairing", t.pairing},             {"similarity", t.similarity},
                {"commutation", t.commutation},     {"stoquastic", t.stoquastic}};
}

json check_json(const CheckResult& c) {
    json j{{"name", c.name}, {"passed", c.passed}, {"necessary", c.necessary}};
    if (c.witness) {
        json w = json::object();
        for (const auto& [k, v] : *c.witness) w[k] = v.size() == 1 ? json(v.front()) : json(v);
        j["witness"] = std::move(w);
    }
    return j;
}

json curing_json(const CuringResult& r, const CuringConfig* cfg) {
    json j{{"found", r.found},
           {"penalty", r.penalty},
           {"max_violation", r.max_violation},
           {"restarts_used", r.restarts_used},
           {"best_restart", r.best_restart},
           {"iterations_total", r.iterations_total},
           {"theta", r.theta},
           {"unitary", matrix_json(r.unitary.matrix())}};
    if (cfg) {
        j["config"] = json{{"restarts", cfg->restarts},   {"max_iters", cfg->max_iters},
                           {"success_tol", cfg->success_tol}, {"fd_step", cfg->fd_step},
                           {"seed", cfg->seed},           {"shrink", cfg->shrink},
                           {"initial_step", cfg->initial_step}, {"batch", cfg->batch},
                           {"polish_iters", cfg->polish_iters}};
    }
    json t = json::array();
    for (const auto& h : r.transformed) t.push_back(matrix_json(h.matrix()));
    j["transformed"] = std::move(t);
    if (!r.found) j["note"] = CuringResult::kNegativeNote;
    return j;
}

json word_table_json(const std::vector<WordTableRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) out.push_back(json{{"word", row.word.to_string()}, {"re", row.trace.real()}, {"im", row.trace.imag()}});
    return out;
}

json bound_json(std::size_t m, std::size_t d) {
    const WordLengthBound b = max_word_length(m, d);
    return json{{"m", b.m}, {"d", b.d}, {"c", b.c}, {"n", b.n}, {"paz", b.paz}, {"pappacena", b.pappacena}, {"l_max", b.l_max}};
}

json header_json(const HamiltonianSetFile& input, const ReportOptions& opts) {
    return json{{"tool", "stoqcheck"},
                {"version", kToolVersion},
                {"input_digest", opts.input_digest},
                {"seed", opts.seed},
                {"d", input.d},
                {"m", input.hamiltonians.size()}};
}

std::vector<HermitianMatrix> traceless(std::span<const HermitianMatrix> set) {
    std::vector<HermitianMatrix> out;
    for (const auto& h : set) out.push_back(remove_trace(h).matrix);
    return out;
}

}  // namespace

HamiltonianSetFile parse_set(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed set file: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("set file: top level must be an object");
    if (!doc.contains("d") || !doc["d"].is_number_integer()) throw ParseError("set file: field 'd' missing or not an integer");
    const auto d_signed = doc["d"].get<long long>();
    if (d_signed < 2) throw ParseError("set file: 'd' must be >= 2");
    HamiltonianSetFile f;
    f.d = static_cast<std::size_t>(d_signed);
    if (!doc.contains("hamiltonians") || !doc["hamiltonians"].is_array() || doc["hamiltonians"].empty()) {
        throw ParseError("set file: field 'hamiltonians' missing or empty");
    }
    const json& hs = doc["hamiltonians"];
    for (std::size_t i = 0; i < hs.size(); ++i) {
        const std::string where = "hamiltonians[" + std::to_string(i) + "]";
        if (!hs[i].is_object() || !hs[i].contains("re") || !hs[i].contains("im")) {
            throw ParseError(where + ": expected an object with 're' and 'im'");
        }
        const auto re = read_square(hs[i]["re"], f.d, where + ".re");
        const auto im = read_square(hs[i]["im"], f.d, where + ".im");
        std::vector<Complex> entries;
        for (std::size_t r = 0; r < f.d; ++r)
            for (std::size_t c = 0; c < f.d; ++c) entries.emplace_back(re[r][c], im[r][c]);
        ComplexMatrix m;
        try {
            m = ComplexMatrix(f.d, std::move(entries));
        } catch (const Error& e) {
            throw ParseError(where + ": " + e.what());
        }
        for (std::size_t r = 0; r < f.d; ++r) {
            for (std::size_t c = r; c < f.d; ++c) {
                const double dev = std::abs(m(r, c) - std::conj(m(c, r)));
                if (dev > kFileHermiticityTol) {
                    std::ostringstream msg;
                    msg << where << ": not Hermitian at entry (" << r << "," << c << "), |H_rc - conj(H_cr)| = " << dev;
                    throw ParseError(msg.str());
                }
            }
        }
        f.hamiltonians.push_back(HermitianMatrix::hermitize(m));
    }
    if (doc.contains("metadata")) {
        const json& md = doc["metadata"];
        if (!md.is_object()) throw ParseError("set file: 'metadata' must be an object");
        try {
            if (md.contains("labels")) f.metadata.labels = md["labels"].get<std::vector<std::string>>();
            if (md.contains("seed")) f.metadata.seed = md["seed"].get<std::uint64_t>();
            if (md.contains("kind")) f.metadata.kind = md["kind"].get<std::string>();
            if (md.contains("theta_star")) f.metadata.theta_star = md["theta_star"].get<std::vector<double>>();
            if (md.contains("note")) f.metadata.note = md["note"].get<std::string>();
        } catch (const json::exception& e) {
            throw ParseError(std::string("set file metadata: ") + e.what());
        }
    }
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

HamiltonianSetFile load_set(const std::string& path) { return parse_set(read_file(path)); }

std::string dump_set(const HamiltonianSetFile& file) {
    json doc;
    doc["d"] = file.d;
    json hs = json::array();
    for (const auto& h : file.hamiltonians) hs.push_back(matrix_json(h.matrix()));
    doc["hamiltonians"] = std::move(hs);
    json md = json::object();
    if (!file.metadata.labels.empty()) md["labels"] = file.metadata.labels;
    if (file.metadata.seed) md["seed"] = *file.metadata.seed;
    if (!file.metadata.kind.empty()) md["kind"] = file.metadata.kind;
    if (!file.metadata.theta_star.empty()) md["theta_star"] = file.metadata.theta_star;
    if (!file.metadata.note.empty()) md["note"] = file.metadata.note;
    if (!md.empty()) doc["metadata"] = std::move(md);
    return doc.dump(2) + "\n";
}

void save_set(const HamiltonianSetFile& file, const std::string& path) { write_file(path, dump_set(file)); }

std::string sha256_hex(const std::string& bytes) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("sha256 failed");
    }
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return s.str();
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<WordTableRow> word_table(std::span<const HermitianMatrix> set, std::size_t max_length,
                                     std::size_t min_length) {
    std::vector<WordTableRow> rows;
    for (Word& w : enumerate_words(set.size(), max_length, min_length)) {
        const Complex t = word_trace(set, w);
        rows.push_back({std::move(w), t});
    }
    return rows;
}

std::string format_word_table(const std::vector<WordTableRow>& rows) {
    std::string out = "# word re im\n";
    for (const auto& r : rows)
        out += r.word.to_string() + " " + format_double(r.trace.real()) + " " + format_double(r.trace.imag()) + "\n";
    return out;
}

std::string analysis_report(const HamiltonianSetFile& input, const Certificate& cert, const ReportOptions& opts) {
    json rep = header_json(input, opts);
    rep["verdict"] = to_string(cert.verdict);
    rep["tolerances"] = tolerances_json(cert.tolerances);
    rep["trace_shifts"] = cert.trace_shifts;
    json checks = json::array();
    for (const auto& c : cert.checks) checks.push_back(check_json(c));
    rep["checks"] = std::move(checks);
    for (const auto& c : cert.checks) {
        if (c.name == "span_nogo" && c.witness) {
            rep["closure"] = json{{"rank", c.witness->at("rank").front()},
                                  {"bound", c.witness->at("bound").front()},
                                  {"stated_bound", c.witness->at("stated_bound").front()}};
        }
    }
    rep["word_length_bound"] = bound_json(input.hamiltonians.size(), input.d);
    const auto set = traceless(input.hamiltonians);
    if (opts.word_cap > 0) {
        rep["word_cap"] = opts.word_cap;
        rep["word_invariants"] = word_table_json(word_table(set, opts.word_cap));
    }
    if (cert.curing) {
        json cj = curing_json(*cert.curing, nullptr);
        if (opts.word_cap >= 2) {
            const InvariantResidual res = invariant_residual(set, cert.curing->transformed, opts.word_cap);
            cj["residual"] = json{{"trace_max", res.max_trace()}, {"sign_max", res.max_sign()}, {"imaginary_max", res.max_imaginary()}};
        }
        rep["curing"] = std::move(cj);
    }
    if (opts.elapsed_seconds) rep["timings"] = json{{"total_seconds", *opts.elapsed_seconds}};
    return rep.dump(2) + "\n";
}

std::string curing_report(const HamiltonianSetFile& input, const CuringResult& result, const CuringConfig& config,
                          const ReportOptions& opts) {
    json rep = header_json(input, opts);
    rep["verdict"] = to_string(result.found ? Verdict::StoquasticBasisFound : Verdict::Inconclusive);
    rep["curing"] = curing_json(result, &config);
    if (opts.elapsed_seconds) rep["timings"] = json{{"total_seconds", *opts.elapsed_seconds}};
    return rep.dump(2) + "\n";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::StoquasticBasisFound: return 0;
        case Verdict::NotStoquasticizable: return 1;
        case Verdict::Inconclusive: return 2;
    }
    return 3;
}

}  // namespace stoq
