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

#include "stoq/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace stoq {

namespace {

void require_same(const BlochVector& a, const BlochVector& b, const char* what) {
    if (a.size() != b.size() || a.dim != b.dim) {
        throw Error(std::string(what) + ": Bloch vector length mismatch (" + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
    }
}

void require_table(const BlochVector& a, const StructureConstantTable& t, const char* what) {
    if (a.size() != t.vector_size()) {
        throw Error(std::string(what) + ": vector length " + std::to_string(a.size()) +
                    " does not match structure-constant table for d=" + std::to_string(t.dim()));
    }
}

}  // namespace

BlochVector::BlochVector(std::size_t d, std::vector<double> c) : dim(d), components(std::move(c)) {
    if (d < 2 || components.size() != d * d - 1) {
        throw Error("BlochVector: length " + std::to_string(components.size()) + " invalid for d=" + std::to_string(d));
    }
    for (double x : components)
        if (!std::isfinite(x)) throw Error("BlochVector: non-finite component");
}

BlochVector BlochVector::zero(std::size_t d) { return BlochVector(d, std::vector<double>(d * d - 1, 0.0)); }

BlochVector BlochVector::axis(std::size_t d, std::size_t linear) {
    BlochVector v = zero(d);
    if (linear < 1 || linear > v.size()) throw Error("BlochVector::axis: index out of range");
    v.components[linear - 1] = 1.0;
    return v;
}

double BlochVector::norm() const { return std::sqrt(dot(*this, *this)); }

BlochVector& BlochVector::operator+=(const BlochVector& o) {
    require_same(*this, o, "BlochVector +");
    for (std::size_t i = 0; i < size(); ++i) components[i] += o.components[i];
    return *this;
}

BlochVector& BlochVector::operator-=(const BlochVector& o) {
    require_same(*this, o, "BlochVector -");
    for (std::size_t i = 0; i < size(); ++i) components[i] -= o.components[i];
    return *this;
}

BlochVector& BlochVector::operator*=(double s) {
    for (double& x : components) x *= s;
    return *this;
}

BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
BlochVector operator-(BlochVector a, const BlochVector& b) { return a -= b; }
BlochVector operator*(double s, BlochVector a) { return a *= s; }

double dot(const BlochVector& a, const BlochVector& b) {
    require_same(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a.components[i] * b.components[i];
    return s;
}

BlochVector to_bloch(const HermitianMatrix& h, const GellMannBasis& basis, const Tolerances& tol) {
    if (h.dim() != basis.dim()) throw Error("to_bloch: dimension mismatch");
    const double tr = h.trace();
    if (std::abs(tr) > tol.traceless * std::max(1.0, h.matrix().frobenius_norm())) {
        throw Error("to_bloch: input has trace " + std::to_string(tr) + "; subtract the trace first");
    }
    std::vector<double> b(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        // Tr(H l_i) = sum over nonzeros (r,c) of l_i of H(c,r) l_i(r,c)
        Complex t = 0.0;
        for (const auto& s : basis.sparse(i)) t += h(s.col, s.row) * s.value;
        b[i] = t.real() / 2.0;
    }
    return BlochVector(basis.dim(), std::move(b));
}

BlochVector to_bloch_traceless(const HermitianMatrix& h, const GellMannBasis& basis) {
    ComplexMatrix m = h.matrix();
    const double shift = h.trace() / static_cast<double>(h.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) -= shift;
    return to_bloch(HermitianMatrix::hermitize(m), basis);
}

HermitianMatrix from_bloch(const BlochVector& b, const GellMannBasis& basis) {
    if (b.size() != basis.size()) throw Error("from_bloch: length mismatch");
    return basis.combine(b.components);
}

BlochVector star(const BlochVector& a, const BlochVector& b, const StructureConstantTable& table) {
    require_same(a, b, "star");
    require_table(a, table, "star");
    std::vector<double> out(a.size(), 0.0);
    for (const auto& c : table.contractions()) {
        // a_i b_j + a_j b_i is symmetric in (a, b) exactly in floating point.
        const double term = c.i == c.j ? a.components[c.i] * b.components[c.i]
                                       : a.components[c.i] * b.components[c.j] + a.components[c.j] * b.components[c.i];
        out[c.k] += c.value * term;
    }
    return BlochVector(a.dim, std::move(out));
}

BlochVector star_power(const BlochVector& b, std::size_t k, const StructureConstantTable& table) {
    if (k < 1) throw Error("star_power: k must be >= 1");
    BlochVector p = b;
    for (std::size_t i = 1; i < k; ++i) p = star(p, b, table);
    return p;
}

double pair_invariant(const BlochVector& a, const BlochVector& b) { return 2.0 * dot(a, b); }

Complex triple_invariant(const BlochVector& a, const BlochVector& b, const BlochVector& c,
                         const StructureConstantTable& table) {
    require_same(a, b, "triple_invariant");
    require_same(a, c, "triple_invariant");
    require_table(a, table, "triple_invariant");
    const double re = dot(star(a, b, table), c);
    double im = 0.0;
    for (const auto& [t, f] : table.antisymmetric()) {
        const std::size_t i = t[0] - 1, j = t[1] - 1, k = t[2] - 1;
        // Antisymmetrized a_i b_j c_k as a cofactor expansion; each bracket
        // is exactly zero when b == c.
        im += f * (a[i] * (b[j] * c[k] - b[k] * c[j]) + a[j] * (b[k] * c[i] - b[i] * c[k]) +
                   a[k] * (b[i] * c[j] - b[j] * c[i]));
    }
    return {2.0 * re, 2.0 * im};
}

namespace {

// Projects v off the orthonormal set (two Gram-Schmidt passes) and returns
// the residual.
BlochVector project_off(BlochVector v, const std::vector<BlochVector>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const BlochVector& q : basis) {
            const double c = dot(v, q);
            for (std::size_t i = 0; i < v.size(); ++i) v.components[i] -= c * q.components[i];
        }
    }
    return v;
}

}  // namespace

StarClosure star_closure(std::span<const BlochVector> vectors, const StructureConstantTable& table, double tol) {
    if (vectors.empty()) throw Error("star_closure: empty input");
    const std::size_t dim = vectors.front().dim;
    double scale = 0.0;
    for (const BlochVector& v : vectors) {
        require_same(vectors.front(), v, "star_closure");
        require_table(v, table, "star_closure");
        scale = std::max(scale, v.norm());
    }

    StarClosure out;
    out.dim = dim;
    auto& basis = out.spanning_set;
    const std::size_t full = dim * dim - 1;

    // Work on inputs rescaled to unit max norm; the span is unchanged and the
    // threshold becomes tol * (max input norm) in original units.
    if (scale > 0.0) {
        for (const BlochVector& v : vectors) {
            BlochVector r = project_off((1.0 / scale) * v, basis);
            const double n = r.norm();
            if (n > tol) basis.push_back((1.0 / n) * r);
            if (basis.size() == full) break;
        }
    }

    // checked_upto[i]: star(basis[i], basis[j]) already tested for all j < checked_upto[i].
    // A residual below tol stays below tol once the span grows, so each pair is
    // tested at most once.
    std::vector<std::size_t> checked_upto;
    bool grew = !basis.empty();
    while (grew && basis.size() < full) {
        grew = false;
        ++out.generations;
        const std::size_t current = basis.size();
        checked_upto.resize(current, 0);
        for (std::size_t i = 0; i < current && basis.size() < full; ++i) {
            for (std::size_t j = checked_upto[i]; j <= i && basis.size() < full; ++j) {
                BlochVector r = project_off(star(basis[i], basis[j], table), basis);
                const double n = r.norm();
                if (n > tol) {
                    basis.push_back((1.0 / n) * r);
                    grew = true;
                }
            }
            checked_upto[i] = i + 1;
        }
    }
    out.rank = basis.size();
    return out;
}

}  // namespace stoq
