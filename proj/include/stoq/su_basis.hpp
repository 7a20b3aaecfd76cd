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

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "stoq/matrix.hpp"
#include "stoq/tolerances.hpp"

namespace stoq {

/// Sector of a generalized Gell-Mann element: symmetric off-diagonal (X),
/// skew-symmetric off-diagonal (Y), or diagonal (D).
enum class Sector { X, Y, D };

/// Linear indices are 1-based, as produced by
///   X_jk = k^2 + 2(j-k) - 1,  Y_jk = k^2 + 2(j-k),  D_j = j(j+2),
/// with 1 <= j < k <= d for X/Y and 1 <= j <= d-1 for D. Vector storage
/// offset of linear index i is i - 1.
class IndexMap {
public:
    struct Entry {
        Sector sector;
        std::size_t j;
        std::size_t k;  // unused for Sector::D
    };

    explicit IndexMap(std::size_t d);

    std::size_t dim() const { return d_; }
    std::size_t size() const { return d_ * d_ - 1; }

    std::size_t x(std::size_t j, std::size_t k) const;
    std::size_t y(std::size_t j, std::size_t k) const;
    std::size_t diag(std::size_t j) const;
    /// Lookup by linear index in [1, d^2-1].
    const Entry& at(std::size_t linear) const;

    std::vector<std::size_t> sector_indices(Sector s) const;

private:
    void check_pair(std::size_t j, std::size_t k) const;
    std::size_t d_;
    std::vector<Entry> entries_;
};

IndexMap index_maps(std::size_t d);

/// The d^2-1 generalized Gell-Mann matrices ordered by IndexMap linear index,
/// normalized to Tr(l_i l_j) = 2 delta_ij.
class GellMannBasis {
public:
    struct SparseEntry {
        std::size_t row;
        std::size_t col;
        Complex value;
    };

    std::size_t dim() const { return d_; }
    std::size_t size() const { return elements_.size(); }
    const IndexMap& index() const { return index_; }
    /// 0-based storage offset.
    const HermitianMatrix& operator[](std::size_t offset) const { return elements_[offset]; }
    std::span<const HermitianMatrix> elements() const { return elements_; }
    /// Nonzero entries of element `offset`.
    std::span<const SparseEntry> sparse(std::size_t offset) const { return sparse_[offset]; }

    /// sum_i coeffs[i] * l_i
    HermitianMatrix combine(std::span<const double> coeffs) const;

private:
    friend GellMannBasis build_basis(std::size_t d);
    explicit GellMannBasis(std::size_t d) : d_(d), index_(d) {}
    std::size_t d_;
    IndexMap index_;
    std::vector<HermitianMatrix> elements_;
    std::vector<std::vector<SparseEntry>> sparse_;
};

GellMannBasis build_basis(std::size_t d);

/// Sparse structure constants keyed by 1-based linear indices.
///
/// d_ijk is stored once per sorted triple i <= j <= k. f_ijk is stored once
/// per strictly increasing triple i < j < k; lookups of other orderings pick
/// up the permutation sign.
class StructureConstantTable {
public:
    using Triple = std::array<std::size_t, 3>;

    /// One term of the star-product contraction: out[k] += value * sym(a_i b_j).
    struct Contraction {
        std::size_t i;  // 0-based offsets, i <= j
        std::size_t j;
        std::size_t k;
        double value;
    };

    StructureConstantTable() = default;
    explicit StructureConstantTable(std::size_t d) : d_(d) {}

    std::size_t dim() const { return d_; }
    std::size_t vector_size() const { return d_ * d_ - 1; }

    void set_symmetric(Triple t, double value);
    void set_antisymmetric(Triple t, double value);

    double d(std::size_t i, std::size_t j, std::size_t k) const;
    double f(std::size_t i, std::size_t j, std::size_t k) const;

    const std::map<Triple, double>& symmetric() const { return sym_; }
    const std::map<Triple, double>& antisymmetric() const { return antisym_; }

    /// Contraction list for the star product. Both table builders return
    /// finalized tables; call finalize() again after any set_symmetric().
    const std::vector<Contraction>& contractions() const { return contractions_; }
    void finalize();

private:
    std::size_t d_ = 0;
    std::map<Triple, double> sym_;
    std::map<Triple, double> antisym_;
    std::vector<Contraction> contractions_;
};

/// Closed-form nonzero d_ijk families of the generalized Gell-Mann basis.
StructureConstantTable structure_constants_analytic(std::size_t d);

/// d_ijk = Re Tr(l_i l_j l_k)/2 and f_ijk = Im Tr(l_i l_j l_k)/2 by direct
/// evaluation over all triples. Throws if Tr(l_j l_i l_k) != conj Tr(l_i l_j l_k).
StructureConstantTable structure_constants_trace(const GellMannBasis& basis,
                                                 const Tolerances& tol = kDefaultTolerances);

/// Largest |analytic - oracle| over the union of symmetric keys.
double max_symmetric_difference(const StructureConstantTable& a, const StructureConstantTable& b);

}  // namespace stoq
