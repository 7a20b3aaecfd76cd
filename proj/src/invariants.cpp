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

#include "stoq/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "stoq/linalg.hpp"

namespace stoq {

std::string Word::to_string() const {
    std::ostringstream s;
    s << '(';
    for (std::size_t i = 0; i < letters.size(); ++i) s << (i ? "," : "") << letters[i] + 1;
    s << ')';
    return s.str();
}

Word Word::rotated(std::size_t by) const {
    Word w = *this;
    if (!w.letters.empty()) std::rotate(w.letters.begin(), w.letters.begin() + by % w.letters.size(), w.letters.end());
    return w;
}

Word Word::reversed() const {
    Word w = *this;
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

namespace {

template <class M, class Get>
Complex trace_of_word(std::span<const M> set, const Word& w, Get get) {
    if (w.letters.empty()) throw Error("word_trace: empty word");
    for (std::size_t l : w.letters) {
        if (l >= set.size()) {
            throw Error("word_trace: letter " + std::to_string(l + 1) + " out of range for a set of " +
                        std::to_string(set.size()));
        }
    }
    const std::size_t d = get(set[w.letters[0]]).dim();
    for (const M& m : set)
        if (get(m).dim() != d) throw Error("word_trace: mixed dimensions in set");
    if (w.letters.size() == 1) return get(set[w.letters[0]]).trace();
    ComplexMatrix p = get(set[w.letters[0]]);
    for (std::size_t i = 1; i + 1 < w.letters.size(); ++i) p = p * get(set[w.letters[i]]);
    // Tr(P B) without forming the final product.
    const ComplexMatrix& last = get(set[w.letters.back()]);
    Complex t = 0.0;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t += p(r, c) * last(c, r);
    return t;
}

}  // namespace

Complex word_trace(std::span<const HermitianMatrix> set, const Word& w) {
    return trace_of_word(set, w, [](const HermitianMatrix& h) -> const ComplexMatrix& { return h.matrix(); });
}

Complex word_trace(std::span<const ComplexMatrix> set, const Word& w) {
    return trace_of_word(set, w, [](const ComplexMatrix& m) -> const ComplexMatrix& { return m; });
}

std::vector<Word> enumerate_words(std::size_t m, std::size_t max_length, std::size_t min_length) {
    std::vector<Word> out;
    if (m == 0 || max_length == 0) return out;
    min_length = std::max<std::size_t>(min_length, 1);
    // Fredricksen-Kessler-Maiorana necklace generation, one length at a time;
    // emits lexicographically least rotations in lexicographic order.
    for (std::size_t n = min_length; n <= max_length; ++n) {
        std::vector<std::size_t> a(n + 1, 0);
        std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
            if (t > n) {
                if (n % p == 0) out.push_back(Word{{a.begin() + 1, a.end()}});
                return;
            }
            a[t] = a[t - p];
            gen(t + 1, p);
            for (std::size_t j = a[t - p] + 1; j < m; ++j) {
                a[t] = j;
                gen(t + 1, t);
            }
        };
        gen(1, 1);
    }
    return out;
}

std::size_t block_capacity(std::size_t c) { return c < 2 ? 0 : (c * c - 3 * c + 2) / 2; }

WordLengthBound max_word_length(std::size_t m, std::size_t d) {
    if (m < 1 || d < 1) throw Error("max_word_length: m and d must be positive");
    WordLengthBound b;
    b.m = m;
    b.d = d;
    b.c = 2;
    while (block_capacity(b.c) < m) ++b.c;
    b.n = b.c * d;
    const double n = static_cast<double>(b.n);
    b.paz = (b.n * b.n + 2 + 2) / 3;  // integer ceil((n^2+2)/3)
    b.pappacena = static_cast<std::size_t>(std::floor(n * std::sqrt(2.0 * n * n / (n - 1.0) + 0.25) + n / 2.0 - 2.0));
    b.l_max = std::min(b.paz, b.pappacena);
    return b;
}

BlockEncoding block_encoding(std::span<const ComplexMatrix> set, std::size_t c) {
    const std::size_t cap = block_capacity(c);
    if (cap < set.size()) {
        std::size_t need = 2;
        while (block_capacity(need) < set.size()) ++need;
        throw Error("block_encoding: " + std::to_string(c) + " blocks hold " + std::to_string(cap) +
                    " matrices, need at least c=" + std::to_string(need) + " for " + std::to_string(set.size()));
    }
    if (set.empty()) throw Error("block_encoding: empty set");
    const std::size_t d = set.front().dim();
    for (const auto& m : set)
        if (m.dim() != d) throw Error("block_encoding: mixed dimensions in set");

    BlockEncoding enc{c, d, ComplexMatrix(c * d)};
    auto place = [&](std::size_t br, std::size_t bc, const ComplexMatrix& m) {
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t col = 0; col < d; ++col) enc.matrix(br * d + r, bc * d + col) = m(r, col);
    };
    const ComplexMatrix eye = ComplexMatrix::identity(d);
    for (std::size_t r = 0; r + 1 < c; ++r) place(r, r + 1, eye);
    std::size_t next = 0;
    for (std::size_t r = 0; r < c && next < set.size(); ++r)
        for (std::size_t s = r + 2; s < c && next < set.size(); ++s) place(r, s, set[next++]);
    return enc;
}

BlockEncoding block_encoding(std::span<const HermitianMatrix> set, std::size_t c) {
    std::vector<ComplexMatrix> plain;
    plain.reserve(set.size());
    for (const auto& h : set) plain.push_back(h.matrix());
    return block_encoding(std::span<const ComplexMatrix>(plain), c);
}

bool pair_similarity_trace(const HermitianMatrix& h, const HermitianMatrix& hp, const Tolerances& tol) {
    if (h.dim() != hp.dim()) throw Error("pair_similarity_trace: dimension mismatch");
    const std::size_t d = h.dim();
    const double s = std::max(spectral_norm(h, tol), spectral_norm(hp, tol));
    ComplexMatrix p = h.matrix();
    ComplexMatrix q = hp.matrix();
    for (std::size_t k = 1; k <= d; ++k) {
        if (k > 1) {
            p = p * h.matrix();
            q = q * hp.matrix();
        }
        const double bound = tol.similarity * static_cast<double>(d) * std::max(1.0, std::pow(s, static_cast<double>(k)));
        if (std::abs(p.trace() - q.trace()) > bound) return false;
    }
    return true;
}

bool pair_similarity_bloch(const BlochVector& a, const BlochVector& b, const StructureConstantTable& table,
                           const Tolerances& tol) {
    if (a.size() != b.size()) throw Error("pair_similarity_bloch: length mismatch");
    const std::size_t d = a.dim;
    const double s = std::max(a.norm(), b.norm());
    BlochVector pa = a;
    BlochVector pb = b;
    for (std::size_t k = 1; k < d; ++k) {
        if (k > 1) {
            pa = star(pa, a, table);
            pb = star(pb, b, table);
        }
        const double bound =
            tol.similarity * static_cast<double>(d) * std::max(1.0, std::pow(s, static_cast<double>(k + 1)));
        if (std::abs(dot(pa, a) - dot(pb, b)) > bound) return false;
    }
    return true;
}

std::vector<double> InvariantResidual::concatenated() const {
    std::vector<double> out = traces;
    out.insert(out.end(), sign.begin(), sign.end());
    out.insert(out.end(), imaginary.begin(), imaginary.end());
    return out;
}

namespace {
double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }
}  // namespace

double InvariantResidual::max_trace() const { return max_of(traces); }
double InvariantResidual::max_sign() const { return max_of(sign); }
double InvariantResidual::max_imaginary() const { return max_of(imaginary); }

InvariantResidual invariant_residual(std::span<const HermitianMatrix> set, std::span<const HermitianMatrix> candidate,
                                     std::size_t max_length) {
    if (set.size() != candidate.size()) throw Error("invariant_residual: set sizes differ");
    if (max_length < 2) throw Error("invariant_residual: max_length must be >= 2");
    for (std::size_t i = 0; i < set.size(); ++i)
        if (set[i].dim() != candidate[i].dim()) throw Error("invariant_residual: dimension mismatch");

    InvariantResidual r;
    for (const Word& w : enumerate_words(set.size(), max_length))
        r.traces.push_back(std::abs(word_trace(set, w) - word_trace(candidate, w)));
    for (const HermitianMatrix& h : candidate) {
        for (std::size_t j = 0; j < h.dim(); ++j) {
            for (std::size_t k = 0; k < h.dim(); ++k) {
                if (j == k) continue;
                r.sign.push_back(std::max(0.0, h(j, k).real()));
                r.imaginary.push_back(std::abs(h(j, k).imag()));
            }
        }
    }
    return r;
}

}  // namespace stoq
