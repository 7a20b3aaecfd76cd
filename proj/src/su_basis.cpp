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

#include "stoq/su_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace stoq {

IndexMap::IndexMap(std::size_t d) : d_(d) {
    if (d < 2) throw Error("IndexMap: d must be >= 2, got " + std::to_string(d));
    entries_.resize(d * d - 1);
    for (std::size_t k = 2; k <= d; ++k) {
        for (std::size_t j = 1; j < k; ++j) {
            entries_[x(j, k) - 1] = {Sector::X, j, k};
            entries_[y(j, k) - 1] = {Sector::Y, j, k};
        }
    }
    for (std::size_t j = 1; j < d; ++j) entries_[diag(j) - 1] = {Sector::D, j, 0};
}

void IndexMap::check_pair(std::size_t j, std::size_t k) const {
    if (j < 1 || j >= k || k > d_) {
        throw Error("IndexMap: invalid off-diagonal coordinates (" + std::to_string(j) + "," + std::to_string(k) +
                    ") for d=" + std::to_string(d_));
    }
}

std::size_t IndexMap::x(std::size_t j, std::size_t k) const {
    check_pair(j, k);
    return k * k + 2 * j - 2 * k - 1;
}

std::size_t IndexMap::y(std::size_t j, std::size_t k) const {
    check_pair(j, k);
    return k * k + 2 * j - 2 * k;
}

std::size_t IndexMap::diag(std::size_t j) const {
    if (j < 1 || j >= d_) {
        throw Error("IndexMap: invalid diagonal coordinate " + std::to_string(j) + " for d=" + std::to_string(d_));
    }
    return j * (j + 2);
}

const IndexMap::Entry& IndexMap::at(std::size_t linear) const {
    if (linear < 1 || linear > entries_.size()) {
        throw Error("IndexMap: linear index " + std::to_string(linear) + " out of range");
    }
    return entries_[linear - 1];
}

std::vector<std::size_t> IndexMap::sector_indices(Sector s) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i].sector == s) out.push_back(i + 1);
    return out;
}

IndexMap index_maps(std::size_t d) { return IndexMap(d); }

GellMannBasis build_basis(std::size_t d) {
    GellMannBasis basis(d);
    const IndexMap& index = basis.index_;
    basis.elements_.resize(index.size());
    basis.sparse_.resize(index.size());
    for (std::size_t linear = 1; linear <= index.size(); ++linear) {
        const auto& e = index.at(linear);
        std::vector<GellMannBasis::SparseEntry> nz;
        switch (e.sector) {
            case Sector::X:
                nz = {{e.j - 1, e.k - 1, 1.0}, {e.k - 1, e.j - 1, 1.0}};
                break;
            case Sector::Y:
                nz = {{e.j - 1, e.k - 1, Complex(0.0, -1.0)}, {e.k - 1, e.j - 1, Complex(0.0, 1.0)}};
                break;
            case Sector::D: {
                const double jd = static_cast<double>(e.j);
                const double norm = std::sqrt(2.0 / (jd * (jd + 1.0)));
                for (std::size_t r = 0; r < e.j; ++r) nz.push_back({r, r, norm});
                nz.push_back({e.j, e.j, -jd * norm});
                break;
            }
        }
        ComplexMatrix m(d);
        for (const auto& s : nz) m(s.row, s.col) = s.value;
        basis.elements_[linear - 1] = HermitianMatrix(std::move(m));
        basis.sparse_[linear - 1] = std::move(nz);
    }
    return basis;
}

HermitianMatrix GellMannBasis::combine(std::span<const double> coeffs) const {
    if (coeffs.size() != size()) {
        throw Error("GellMannBasis::combine: expected " + std::to_string(size()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
    }
    ComplexMatrix m(d_);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        for (const auto& s : sparse_[i]) m(s.row, s.col) += coeffs[i] * s.value;
    }
    return HermitianMatrix::hermitize(m);
}

// ---------------------------------------------------------------------------

namespace {

StructureConstantTable::Triple sorted(std::size_t i, std::size_t j, std::size_t k) {
    StructureConstantTable::Triple t{i, j, k};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

void StructureConstantTable::set_symmetric(Triple t, double value) {
    std::sort(t.begin(), t.end());
    sym_[t] = value;
}

void StructureConstantTable::set_antisymmetric(Triple t, double value) {
    // Bring into increasing order, tracking the permutation sign.
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 0; a < 2; ++a) {
            if (t[a] > t[a + 1]) {
                std::swap(t[a], t[a + 1]);
                sign = -sign;
            }
        }
    }
    if (t[0] == t[1] || t[1] == t[2]) {
        if (value != 0.0) throw Error("StructureConstantTable: nonzero f with repeated index");
        return;
    }
    antisym_[t] = sign * value;
}

double StructureConstantTable::d(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = sym_.find(sorted(i, j, k));
    return it == sym_.end() ? 0.0 : it->second;
}

double StructureConstantTable::f(std::size_t i, std::size_t j, std::size_t k) const {
    Triple t{i, j, k};
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass) {
        for (int a = 0; a < 2; ++a) {
            if (t[a] > t[a + 1]) {
                std::swap(t[a], t[a + 1]);
                sign = -sign;
            }
        }
    }
    auto it = antisym_.find(t);
    return it == antisym_.end() ? 0.0 : sign * it->second;
}

void StructureConstantTable::finalize() {
    contractions_.clear();
    for (const auto& [t, v] : sym_) {
        // Each distinct choice of output slot gives one (pair, out) term.
        for (int slot = 0; slot < 3; ++slot) {
            if (slot > 0 && t[slot] == t[slot - 1]) continue;
            std::size_t a = t[(slot + 1) % 3];
            std::size_t b = t[(slot + 2) % 3];
            if (a > b) std::swap(a, b);
            contractions_.push_back({a - 1, b - 1, t[slot] - 1, v});
        }
    }
    std::sort(contractions_.begin(), contractions_.end(), [](const Contraction& x, const Contraction& y) {
        return std::tie(x.k, x.i, x.j) < std::tie(y.k, y.i, y.j);
    });
}

StructureConstantTable structure_constants_analytic(std::size_t d) {
    const IndexMap idx(d);
    StructureConstantTable table(d);
    auto put = [&](std::size_t a, std::size_t b, std::size_t c, double v) {
        if (v != 0.0) table.set_symmetric({a, b, c}, v);
    };
    const auto X = [&](std::size_t j, std::size_t k) { return idx.x(j, k); };
    const auto Y = [&](std::size_t j, std::size_t k) { return idx.y(j, k); };
    const auto D = [&](std::size_t j) { return idx.diag(j); };

    // Three distinct levels a < b < c.
    for (std::size_t a = 1; a <= d; ++a) {
        for (std::size_t b = a + 1; b <= d; ++b) {
            for (std::size_t c = b + 1; c <= d; ++c) {
                put(X(b, c), X(a, b), X(a, c), 0.5);
                put(X(b, c), Y(a, b), Y(a, c), 0.5);
                put(X(a, b), Y(b, c), Y(a, c), 0.5);
                put(X(a, c), Y(a, b), Y(b, c), -0.5);
            }
        }
    }

    // Off-diagonal pair (j,k) squared against the diagonal generators.
    for (std::size_t k = 2; k <= d; ++k) {
        const double kd = static_cast<double>(k);
        for (std::size_t j = 1; j < k; ++j) {
            const double jd = static_cast<double>(j);
            const std::size_t xs = X(j, k);
            const std::size_t ys = Y(j, k);
            if (j >= 2) {
                const double v = -std::sqrt((jd - 1.0) / (2.0 * jd));
                put(xs, xs, D(j - 1), v);
                put(ys, ys, D(j - 1), v);
            }
            for (std::size_t l = j + 1; l < k; ++l) {
                const double ld = static_cast<double>(l);
                const double v = std::sqrt(1.0 / (2.0 * ld * (ld - 1.0)));
                put(xs, xs, D(l - 1), v);
                put(ys, ys, D(l - 1), v);
            }
            {
                const double v = (2.0 - kd) / std::sqrt(2.0 * kd * (kd - 1.0));
                put(xs, xs, D(k - 1), v);
                put(ys, ys, D(k - 1), v);
            }
            for (std::size_t l = k + 1; l <= d; ++l) {
                const double ld = static_cast<double>(l);
                const double v = std::sqrt(2.0 / (ld * (ld - 1.0)));
                put(xs, xs, D(l - 1), v);
                put(ys, ys, D(l - 1), v);
            }
        }
    }

    // Purely diagonal.
    for (std::size_t j = 2; j <= d; ++j) {
        const double jd = static_cast<double>(j);
        const double c = std::sqrt(2.0 / (jd * (jd - 1.0)));
        for (std::size_t k = 2; k < j; ++k) put(D(j - 1), D(k - 1), D(k - 1), c);
        put(D(j - 1), D(j - 1), D(j - 1), (2.0 - jd) * c);
    }

    table.finalize();
    return table;
}

StructureConstantTable structure_constants_trace(const GellMannBasis& basis, const Tolerances& tol) {
    const std::size_t d = basis.dim();
    const std::size_t n = basis.size();

    // Every generalized Gell-Mann element has at most one nonzero per row.
    struct RowMap {
        std::vector<int> col;
        std::vector<Complex> val;
    };
    std::vector<RowMap> rows(n, RowMap{std::vector<int>(d, -1), std::vector<Complex>(d)});
    for (std::size_t e = 0; e < n; ++e) {
        for (const auto& s : basis.sparse(e)) {
            if (rows[e].col[s.row] != -1) throw Error("structure_constants_trace: basis element has two entries in a row");
            rows[e].col[s.row] = static_cast<int>(s.col);
            rows[e].val[s.row] = s.value;
        }
    }
    auto triple_trace = [&](std::size_t a, std::size_t b, std::size_t c) {
        Complex t = 0.0;
        for (std::size_t r = 0; r < d; ++r) {
            const int c1 = rows[a].col[r];
            if (c1 < 0) continue;
            const int c2 = rows[b].col[c1];
            if (c2 < 0) continue;
            if (rows[c].col[c2] != static_cast<int>(r)) continue;
            t += rows[a].val[r] * rows[b].val[c1] * rows[c].val[c2];
        }
        return t;
    };

    StructureConstantTable table(d);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = j; k < n; ++k) {
                const Complex t = triple_trace(i, j, k);
                const Complex swapped = triple_trace(j, i, k);
                if (std::abs(swapped - std::conj(t)) > tol.structure_zero) {
                    throw Error("structure_constants_trace: symmetry violated at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
                }
                const double dv = t.real() / 2.0;
                const double fv = t.imag() / 2.0;
                if (std::abs(dv) > tol.structure_zero) table.set_symmetric({i + 1, j + 1, k + 1}, dv);
                if (std::abs(fv) > tol.structure_zero) {
                    if (i == j || j == k) {
                        throw Error("structure_constants_trace: nonzero antisymmetric constant with repeated index");
                    }
                    table.set_antisymmetric({i + 1, j + 1, k + 1}, fv);
                }
            }
        }
    }
    table.finalize();
    return table;
}

double max_symmetric_difference(const StructureConstantTable& a, const StructureConstantTable& b) {
    double worst = 0.0;
    for (const auto& [t, v] : a.symmetric()) worst = std::max(worst, std::abs(v - b.d(t[0], t[1], t[2])));
    for (const auto& [t, v] : b.symmetric()) worst = std::max(worst, std::abs(v - a.d(t[0], t[1], t[2])));
    return worst;
}

}  // namespace stoq
