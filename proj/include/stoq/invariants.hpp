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
#include <span>
#include <string>
#include <vector>

#include "stoq/bloch.hpp"
#include "stoq/matrix.hpp"
#include "stoq/su_basis.hpp"
#include "stoq/tolerances.hpp"

namespace stoq {

/// A formal product of set members. Letters are 0-based member indices.
struct Word {
    std::vector<std::size_t> letters;

    std::size_t length() const { return letters.size(); }
    /// "(1,2,2)" with 1-based letters.
    std::string to_string() const;
    Word rotated(std::size_t by) const;
    Word reversed() const;
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Trace of the product of the set members in letter order.
Complex word_trace(std::span<const HermitianMatrix> set, const Word& w);
Complex word_trace(std::span<const ComplexMatrix> set, const Word& w);

/// One representative per cyclic class (its lexicographically least
/// rotation), lengths min_length..max_length, ordered by length then
/// lexicographically. Reversals are kept distinct.
std::vector<Word> enumerate_words(std::size_t m, std::size_t max_length, std::size_t min_length = 2);

struct WordLengthBound {
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t c = 0;      // minimal block count with (c^2 - 3c + 2)/2 >= m
    std::size_t n = 0;      // c * d
    std::size_t paz = 0;    // ceil((n^2 + 2)/3)
    std::size_t pappacena = 0;  // floor(n sqrt(2n^2/(n-1) + 1/4) + n/2 - 2)
    std::size_t l_max = 0;  // min of the two
};

WordLengthBound max_word_length(std::size_t m, std::size_t d);

/// Number of free strict-upper blocks (excluding the superdiagonal) of a
/// c x c block matrix: (c^2 - 3c + 2)/2.
std::size_t block_capacity(std::size_t c);

struct BlockEncoding {
    std::size_t c = 0;
    std::size_t d = 0;
    ComplexMatrix matrix;  // size c*d
};

/// Block (r, r+1) = I; blocks (r, s) with s >= r+2 take the set members in
/// row-major order; everything else zero.
BlockEncoding block_encoding(std::span<const ComplexMatrix> set, std::size_t c);
BlockEncoding block_encoding(std::span<const HermitianMatrix> set, std::size_t c);

/// Tr[H^k] = Tr[H'^k] for k = 1..d, each within
/// tol.similarity * d * max(1, ||H||^k) with ||.|| the larger spectral norm.
bool pair_similarity_trace(const HermitianMatrix& h, const HermitianMatrix& hp,
                           const Tolerances& tol = kDefaultTolerances);

/// a^{*k}.a = b^{*k}.b for k = 1..d-1 (traceless inputs), each within
/// tol.similarity * d * max(1, s^{k+1}), s the larger Bloch norm.
bool pair_similarity_bloch(const BlochVector& a, const BlochVector& b, const StructureConstantTable& table,
                           const Tolerances& tol = kDefaultTolerances);

/// Concatenation of
///   (i)   |Tr w(S) - Tr w(S')| over canonical words of length 2..max_length,
///   (ii)  max(0, Re H'_jk) over off-diagonals of each H' (row-major, j != k),
///   (iii) |Im H'_jk| over the same entries.
struct InvariantResidual {
    std::vector<double> traces;
    std::vector<double> sign;
    std::vector<double> imaginary;

    std::vector<double> concatenated() const;
    double max_trace() const;
    double max_sign() const;
    double max_imaginary() const;
};

InvariantResidual invariant_residual(std::span<const HermitianMatrix> set, std::span<const HermitianMatrix> candidate,
                                     std::size_t max_length);

}  // namespace stoq
