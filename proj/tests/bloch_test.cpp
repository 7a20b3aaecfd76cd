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

#include <cmath>
#include <random>

#include "stoq/bloch.hpp"
#include "stoq/su_basis.hpp"
#include "test_util.hpp"

namespace stoq {
namespace {

using testing::random_bloch;

struct Algebra {
    explicit Algebra(std::size_t d)
        : basis(build_basis(d)), table(structure_constants_analytic(d)) {
        table.finalize();
    }
    GellMannBasis basis;
    StructureConstantTable table;
};

double dist(const BlochVector& a, const BlochVector& b) { return (a - b).norm(); }

TEST(Bloch, PauliAxes) {
    const Algebra q(2);
    EXPECT_EQ(to_bloch(testing::pauli_x(), q.basis), BlochVector::axis(2, 1));
    EXPECT_EQ(to_bloch(testing::pauli_z(), q.basis), BlochVector::axis(2, 3));
    EXPECT_EQ(from_bloch(BlochVector::axis(2, 3), q.basis), testing::pauli_z());
    EXPECT_EQ(from_bloch(BlochVector::zero(2), q.basis), HermitianMatrix::zero(2));
}

TEST(Bloch, RejectsTracefulInput) {
    const Algebra q(2);
    EXPECT_THROW(to_bloch(HermitianMatrix::identity(2), q.basis), Error);
    EXPECT_EQ(to_bloch_traceless(HermitianMatrix::identity(2), q.basis), BlochVector::zero(2));
}

TEST(Bloch, RoundTrip) {
    const Algebra q(4);
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto h = random_traceless_hermitian(4, s);
        const auto back = from_bloch(to_bloch(h, q.basis), q.basis);
        EXPECT_LE(max_abs_diff(back.matrix(), h.matrix()), 1e-10);
    }
}

TEST(Bloch, NormIdentity) {
    const Algebra q(3);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        const auto b = random_bloch(3, rng);
        const auto h = from_bloch(b, q.basis);
        EXPECT_NEAR((h.matrix() * h.matrix()).trace().real(), 2.0 * dot(b, b), 1e-10);
    }
}

TEST(Star, VanishesForQubits) {
    const Algebra q(2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t)
        EXPECT_EQ(star(random_bloch(2, rng), random_bloch(2, rng), q.table), BlochVector::zero(2));
}

TEST(Star, MatchesMatrixProductProjection) {
    // (a * b)_k = Re Tr((AB + BA) l_k) / 4
    for (std::size_t d : {3, 4, 5}) {
        const Algebra q(d);
        std::mt19937_64 rng(d);
        for (int t = 0; t < 20; ++t) {
            const auto a = random_bloch(d, rng);
            const auto b = random_bloch(d, rng);
            const auto A = from_bloch(a, q.basis).matrix();
            const auto B = from_bloch(b, q.basis).matrix();
            const ComplexMatrix anti = A * B + B * A;
            const auto s = star(a, b, q.table);
            for (std::size_t k = 0; k < q.basis.size(); ++k)
                EXPECT_NEAR(s[k], (anti * q.basis[k].matrix()).trace().real() / 4.0, 1e-10);
        }
    }
}

TEST(Star, AxisSquareLandsOnDiagonalSector) {
    // e_1 * e_1 = sum_k d_11k e_k: d_113 = 0 and d_118 = 1/sqrt(3) at d=3.
    const Algebra q(3);
    const auto s = star(BlochVector::axis(3, 1), BlochVector::axis(3, 1), q.table);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(s[k], k == 7 ? 1.0 / std::sqrt(3.0) : 0.0, 1e-15);
}

class StarAlgebra : public ::testing::TestWithParam<std::size_t> {};

TEST_P(StarAlgebra, Identities) {
    const std::size_t d = GetParam();
    const Algebra q(d);
    std::mt19937_64 rng(1000 + d);
    for (int t = 0; t < 1000; ++t) {
        const auto a = random_bloch(d, rng);
        const auto b = random_bloch(d, rng);
        const auto c = random_bloch(d, rng);
        const auto e = random_bloch(d, rng);
        const auto ab = star(a, b, q.table);
        ASSERT_EQ(ab, star(b, a, q.table));
        ASSERT_LE(dist(star(a, b + c, q.table), ab + star(a, c, q.table)), 1e-12);
        const double abc = dot(ab, c);
        ASSERT_NEAR(abc, dot(star(b, c, q.table), a), 1e-12);
        ASSERT_NEAR(abc, dot(star(a, c, q.table), b), 1e-12);
        ASSERT_NEAR(dot(ab, star(c, e, q.table)), dot(star(ab, c, q.table), e), 1e-12);
    }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, StarAlgebra, ::testing::Values(2, 3, 4, 5));

TEST(Star, NonAssociativeFromThreeUp) {
    for (std::size_t d : {3, 4, 5}) {
        const Algebra q(d);
        std::mt19937_64 rng(77 + d);
        double worst = 0.0;
        for (int t = 0; t < 20 && worst <= 1e-3; ++t) {
            const auto a = random_bloch(d, rng);
            const auto b = random_bloch(d, rng);
            const auto c = random_bloch(d, rng);
            worst = std::max(worst, dist(star(star(a, b, q.table), c, q.table), star(a, star(b, c, q.table), q.table)));
        }
        EXPECT_GT(worst, 1e-3) << d;
    }
}

TEST(Invariants, PairInvariant) {
    EXPECT_EQ(pair_invariant(BlochVector::axis(2, 1), BlochVector::axis(2, 1)), 2.0);
    EXPECT_EQ(pair_invariant(BlochVector::axis(2, 1), BlochVector::axis(2, 2)), 0.0);
    const Algebra q(4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_bloch(4, rng);
        const auto b = random_bloch(4, rng);
        const double tr = (from_bloch(a, q.basis).matrix() * from_bloch(b, q.basis).matrix()).trace().real();
        EXPECT_NEAR(pair_invariant(a, b), tr, 1e-10);
    }
}

TEST(Invariants, TripleInvariant) {
    const Algebra q2(2);
    auto f2 = structure_constants_trace(q2.basis);
    const Complex xyz = triple_invariant(BlochVector::axis(2, 1), BlochVector::axis(2, 2), BlochVector::axis(2, 3), f2);
    EXPECT_NEAR(xyz.real(), 0.0, 1e-15);
    EXPECT_NEAR(xyz.imag(), 2.0, 1e-15);

    const Algebra q(3);
    auto full = structure_constants_trace(q.basis);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        const auto a = random_bloch(3, rng);
        const auto b = random_bloch(3, rng);
        const auto c = random_bloch(3, rng);
        const Complex tr =
            (from_bloch(a, q.basis).matrix() * from_bloch(b, q.basis).matrix() * from_bloch(c, q.basis).matrix()).trace();
        const Complex inv = triple_invariant(a, b, c, full);
        EXPECT_NEAR(inv.real(), tr.real(), 1e-10);
        EXPECT_NEAR(inv.imag(), tr.imag(), 1e-10);
        EXPECT_EQ(triple_invariant(a, a, a, full).imag(), 0.0);
    }
}

TEST(Closure, GenericDiagonalHasRankDMinusOne) {
    const Algebra q(3);
    const HermitianMatrix h(ComplexMatrix::diagonal(std::vector<double>{0.7, -0.2, -0.5}));
    const std::vector<BlochVector> b{to_bloch(h, q.basis)};
    EXPECT_EQ(star_closure(b, q.table).rank, 2u);
}

TEST(Closure, PureStateTypeIsRankOne) {
    const Algebra q(3);
    const HermitianMatrix h(ComplexMatrix::diagonal(std::vector<double>{2.0 / 3, -1.0 / 3, -1.0 / 3}));
    const auto b = to_bloch(h, q.basis);
    const std::vector<BlochVector> set{b};
    EXPECT_EQ(star_closure(set, q.table).rank, 1u);
    const auto bb = star(b, b, q.table);
    // Collinear: |<bb, b>| = |bb| |b|.
    EXPECT_NEAR(std::abs(dot(bb, b)), bb.norm() * b.norm(), 1e-12);
    EXPECT_GT(bb.norm(), 0.1);
}

TEST(Closure, RandomPairSpansEverything) {
    const Algebra q(3);
    for (std::uint64_t s = 0; s < 10; ++s) {
        std::vector<BlochVector> b;
        for (const auto& h : testing::gue_set(3, 2, s)) b.push_back(to_bloch(h, q.basis));
        const auto c = star_closure(b, q.table);
        EXPECT_EQ(c.rank, 8u);
        for (std::size_t i = 0; i < c.rank; ++i)
            for (std::size_t j = 0; j < c.rank; ++j)
                EXPECT_NEAR(dot(c.spanning_set[i], c.spanning_set[j]), i == j ? 1.0 : 0.0, 1e-12);
    }
}

TEST(Closure, QubitsOnlySpan) {
    const Algebra q(2);
    const std::vector<BlochVector> b{BlochVector::axis(2, 1), BlochVector::axis(2, 3)};
    const auto c = star_closure(b, q.table);
    EXPECT_EQ(c.rank, 2u);
}

TEST(Closure, ZeroInputIsRankZero) {
    const Algebra q(3);
    const std::vector<BlochVector> b{BlochVector::zero(3)};
    EXPECT_EQ(star_closure(b, q.table).rank, 0u);
}

TEST(Closure, UnitaryInvariantRank) {
    for (std::size_t d : {3, 4}) {
        const Algebra q(d);
        for (std::uint64_t s = 0; s < 50; ++s) {
            // Mix of generic and structured sets so ranks vary.
            std::vector<HermitianMatrix> set;
            if (s % 2 == 0) {
                set = testing::gue_set(d, 1 + s % 3, s);
            } else {
                std::vector<double> diag(d, 0.0);
                diag[0] = 1.0;
                diag[1] = -1.0;
                set.push_back(HermitianMatrix(ComplexMatrix::diagonal(diag)));
            }
            const auto u = random_unitary(q.basis, s + 500);
            std::vector<BlochVector> a, b;
            for (const auto& h : set) {
                a.push_back(to_bloch(h, q.basis));
                b.push_back(to_bloch(conjugate(u, h), q.basis));
            }
            EXPECT_EQ(star_closure(a, q.table).rank, star_closure(b, q.table).rank) << "d=" << d << " s=" << s;
        }
    }
}

}  // namespace
}  // namespace stoq
