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

#include <gtest/gtest.h>

#include <json.hpp>

#include "stoq/io.hpp"
#include "test_util.hpp"

namespace stoq {
namespace {

TEST(SetFile, RoundTripIsBitwise) {
    HamiltonianSetFile f;
    f.d = 3;
    f.hamiltonians = testing::gue_set(3, 2, 6);
    f.metadata.seed = 6;
    f.metadata.kind = "gue";
    const auto back = parse_set(dump_set(f));
    ASSERT_EQ(back.hamiltonians.size(), 2u);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(back.hamiltonians[i], f.hamiltonians[i]);
    EXPECT_EQ(back.metadata.seed, 6u);
    EXPECT_EQ(back.metadata.kind, "gue");
    EXPECT_EQ(dump_set(back), dump_set(f));
}

TEST(SetFile, ErrorsNameTheField) {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            parse_set(text);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const ParseError& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_error("{", "line 1");
    expect_error(R"({"hamiltonians": []})", "d");
    expect_error(R"({"d": 2, "hamiltonians": [{"re": [[0,1],[1,0]]}]})", "hamiltonians[0]");
    expect_error(R"({"d": 2, "hamiltonians": [{"re": [[0,1],[2,0]], "im": [[0,0],[0,0]]}]})", "(0,1)");
    expect_error(R"({"d": 2, "hamiltonians": [{"re": [[0,1,0],[1,0]], "im": [[0,0],[0,0]]}]})", "re");
}

TEST(Sha256, KnownDigest) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(FormatDouble, SeventeenDigits) {
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(2.0), "2");
}

TEST(WordTable, SingletonPauliZ) {
    const std::vector<HermitianMatrix> s{testing::pauli_z()};
    const auto rows = word_table(s, 4);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].trace, Complex(0, 0));
    EXPECT_EQ(rows[1].trace, Complex(2, 0));
    EXPECT_EQ(rows[2].trace, Complex(0, 0));
    EXPECT_EQ(rows[3].trace, Complex(2, 0));
    const std::string text = format_word_table(rows);
    EXPECT_NE(text.find("(1,1) 2 0\n"), std::string::npos) << text;
}

TEST(WordTable, ConjugationInvariant) {
    const auto s = testing::gue_set(3, 2, 12);
    const auto u = random_unitary(build_basis(3), 13);
    std::vector<HermitianMatrix> sp;
    for (const auto& h : s) sp.push_back(conjugate(u, h));
    const auto a = word_table(s, 5);
    const auto b = word_table(sp, 5);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(std::abs(a[i].trace - b[i].trace), 1e-8);
}

TEST(Report, DeterministicWithoutTimings) {
    HamiltonianSetFile f;
    f.d = 2;
    f.hamiltonians = testing::gue_set(2, 2, 1);
    AnalysisConfig cfg;
    cfg.curing.seed = 5;
    ReportOptions opts;
    opts.input_digest = sha256_hex(dump_set(f));
    opts.seed = 5;
    const auto a = analysis_report(f, analyze(f.hamiltonians, cfg), opts);
    const auto b = analysis_report(f, analyze(f.hamiltonians, cfg), opts);
    EXPECT_EQ(a, b);
    const auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["verdict"], "StoquasticBasisFound");
    EXPECT_FALSE(j.contains("timings"));
    opts.elapsed_seconds = 0.5;
    EXPECT_TRUE(nlohmann::json::parse(analysis_report(f, analyze(f.hamiltonians, cfg), opts)).contains("timings"));
}

TEST(ExitCode, FunctionOfVerdict) {
    EXPECT_EQ(exit_code(Verdict::StoquasticBasisFound), 0);
    EXPECT_EQ(exit_code(Verdict::NotStoquasticizable), 1);
    EXPECT_EQ(exit_code(Verdict::Inconclusive), 2);
}

}  // namespace
}  // namespace stoq
