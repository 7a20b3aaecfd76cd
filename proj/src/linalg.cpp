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

#include "stoq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

namespace stoq {

namespace {

double offdiag_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.dim(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Annihilate a(p,q) with G = D R, where D = diag(1, e^{-i phi}) removes the
// phase of a(p,q) and R is the real symmetric Jacobi rotation. A <- G^dagger A G,
// V <- V G.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.dim();
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    const Complex phase = apq / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex g_pp = c;
    const Complex g_pq = s;
    const Complex g_qp = -s * std::conj(phase);
    const Complex g_qq = c * std::conj(phase);

    for (std::size_t k = 0; k < n; ++k) {  // columns: A G
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * g_pp + akq * g_qp;
        a(k, q) = akp * g_pq + akq * g_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {  // rows: G^dagger (A G)
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
        a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * g_pp + vkq * g_qp;
        v(k, q) = vkp * g_pq + vkq * g_qq;
    }
}

}  // namespace

EigenSystem hermitian_eigensystem(const HermitianMatrix& h, const Tolerances& tol) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = a.frobenius_norm();
    const double target = tol.jacobi_offdiag * scale;

    int sweep = 0;
    double mass = offdiag_mass(a);
    while (mass > target) {
        if (sweep == tol.jacobi_max_sweeps) {
            std::ostringstream msg;
            msg << "hermitian_eigensystem: no convergence after " << sweep << " sweeps, off-diagonal residual "
                << mass << " (target " << target << ")";
            throw Error(msg.str());
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 0.0) rotate(a, v, p, q);
        mass = offdiag_mass(a);
        ++sweep;
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem es;
    es.eigenvalues.resize(n);
    ComplexMatrix vs(n);
    for (std::size_t j = 0; j < n; ++j) {
        es.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t k = 0; k < n; ++k) vs(k, j) = v(k, order[j]);
    }
    es.eigenvectors = UnitaryMatrix(std::move(vs), tol);
    return es;
}

std::vector<double> eigenvalues(const HermitianMatrix& h, const Tolerances& tol) {
    return hermitian_eigensystem(h, tol).eigenvalues;
}

double reconstruction_residual(const EigenSystem& es, const HermitianMatrix& h) {
    const ComplexMatrix& v = es.eigenvectors.matrix();
    ComplexMatrix vl = v;
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c) vl(r, c) *= es.eigenvalues[c];
    return max_abs_diff(multiply_adjoint(vl, v), h.matrix());
}

double spectral_norm(const HermitianMatrix& h, const Tolerances& tol) {
    const auto ev = eigenvalues(h, tol);
    if (ev.empty()) return 0.0;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

HermitianMatrix commutator_i(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw Error("commutator_i: dimension mismatch");
    ComplexMatrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    c *= Complex(0.0, 1.0);
    const double scale = std::max(1.0, a.matrix().frobenius_norm() * b.matrix().frobenius_norm());
    if (c.hermiticity_residual() > 1e-12 * scale) {
        throw Error("commutator_i: result not Hermitian; inputs are not Hermitian enough");
    }
    return HermitianMatrix::hermitize(c);
}

UnitaryMatrix exp_i(const HermitianMatrix& generator, const Tolerances& tol) {
    const EigenSystem es = hermitian_eigensystem(generator, tol);
    const ComplexMatrix& v = es.eigenvectors.matrix();
    ComplexMatrix ve = v;
    for (std::size_t r = 0; r < v.dim(); ++r)
        for (std::size_t c = 0; c < v.dim(); ++c) ve(r, c) *= std::polar(1.0, es.eigenvalues[c]);
    return UnitaryMatrix(multiply_adjoint(ve, v), tol);
}

UnitaryMatrix unitary_from_generator(std::span<const double> theta, const GellMannBasis& basis,
                                     const Tolerances& tol) {
    if (theta.size() != basis.size()) {
        throw Error("unitary_from_generator: theta has length " + std::to_string(theta.size()) + ", expected " +
                    std::to_string(basis.size()));
    }
    return exp_i(basis.combine(theta), tol);
}

HermitianMatrix conjugate(const UnitaryMatrix& u, const HermitianMatrix& h) {
    if (u.dim() != h.dim()) throw Error("conjugate: dimension mismatch");
    return HermitianMatrix::hermitize(multiply_adjoint(u.matrix() * h.matrix(), u.matrix()));
}

HermitianMatrix random_traceless_hermitian(std::size_t d, std::uint64_t seed) {
    if (d < 2) throw Error("random_traceless_hermitian: d must be >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix a(d);
    for (Complex& z : a.entries()) {
        const double re = normal(rng);
        const double im = normal(rng);
        z = {re, im};
    }
    ComplexMatrix h = a + a.adjoint();
    h *= 0.5;
    const double shift = h.trace().real() / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) h(i, i) = h(i, i).real() - shift;
    return HermitianMatrix::hermitize(h);
}

UnitaryMatrix random_unitary(const GellMannBasis& basis, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(basis.size());
    for (double& t : theta) t = angle(rng);
    return unitary_from_generator(theta, basis);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

TracelessPart remove_trace(const HermitianMatrix& h) {
    const double shift = h.trace() / static_cast<double>(h.dim());
    ComplexMatrix m = h.matrix();
    for (std::size_t i = 0; i < m.dim(); ++i) m(i, i) -= shift;
    return {HermitianMatrix::hermitize(m), shift};
}

}  // namespace stoq
