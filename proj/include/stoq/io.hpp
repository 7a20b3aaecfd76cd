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
#include <optional>
#include <string>
#include <vector>

#include "stoq/certificates.hpp"
#include "stoq/invariants.hpp"
#include "stoq/matrix.hpp"

namespace stoq {

inline constexpr const char* kToolVersion = "0.1.0";

/// Raised for malformed set files; the message names the offending field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// JSON document:
///   { "d": 3,
///     "hamiltonians": [ { "re": [[...], ...], "im": [[...], ...] }, ... ],
///     "metadata": { "labels": [...], "seed": 7, "kind": "planted",
///                   "theta_star": [...], "note": "..." } }
/// Every matrix must be Hermitian within 1e-8; it is stored symmetrized.
struct HamiltonianSetFile {
    struct Metadata {
        std::vector<std::string> labels;
        std::optional<std::uint64_t> seed;
        std::string kind;
        std::vector<double> theta_star;
        std::string note;
    };

    std::size_t d = 0;
    std::vector<HermitianMatrix> hamiltonians;
    Metadata metadata;
};

inline constexpr double kFileHermiticityTol = 1e-8;

HamiltonianSetFile parse_set(const std::string& text);
HamiltonianSetFile load_set(const std::string& path);
std::string dump_set(const HamiltonianSetFile& file);
void save_set(const HamiltonianSetFile& file, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string sha256_hex(const std::string& bytes);

/// "%.17g"
std::string format_double(double v);

struct WordTableRow {
    Word word;
    Complex trace;
};
std::vector<WordTableRow> word_table(std::span<const HermitianMatrix> set, std::size_t max_length,
                                     std::size_t min_length = 1);
/// One row per word: "<word> <re> <im>", 17 significant digits.
std::string format_word_table(const std::vector<WordTableRow>& rows);

struct ReportOptions {
    std::string input_digest;
    std::uint64_t seed = 0;
    std::size_t word_cap = 6;
    std::optional<double> elapsed_seconds;  // omitted unless requested
};

/// Deterministic JSON report for an analysis run.
std::string analysis_report(const HamiltonianSetFile& input, const Certificate& cert, const ReportOptions& opts);

/// Deterministic JSON report for a curing-only run.
std::string curing_report(const HamiltonianSetFile& input, const CuringResult& result, const CuringConfig& config,
                          const ReportOptions& opts);

/// Exit code for a verdict: 0 found, 1 not stoquasticizable, 2 inconclusive.
int exit_code(Verdict v);

}  // namespace stoq
