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

#include "stoq/curing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "stoq/kernels.hpp"

namespace stoq {

void CuringConfig::validate() const {
    if (restarts == 0 || max_iters == 0 || batch == 0) throw Error("CuringConfig: counts must be positive");
    if (!(success_tol > 0.0) || !(fd_step > 0.0) || !(shrink > 0.0) || !(initial_step > 0.0)) {
        throw Error("CuringConfig: tolerances and steps must be positive");
    }
    if (!(success_tol < 1e-4)) throw Error("CuringConfig: success_tol must be < 1e-4");
    if (!(shrink < 1.0)) throw Error("CuringConfig: shrink must be < 1");
}

double stoq_penalty(std::span<const HermitianMatrix> set) {
    const auto& k = kernels::active();
    double total = 0.0;
    for (const HermitianMatrix& h : set) total += k.offdiag_penalty(h.dim(), h.matrix().entries().data());
    return total;
}

double curing_objective(std::span<const HermitianMatrix> set, std::span<const double> theta,
                        const GellMannBasis& basis) {
    const UnitaryMatrix u = unitary_from_generator(theta, basis);
    const auto& k = kernels::active();
    double total = 0.0;
    for (const HermitianMatrix& h : set) {
        const ComplexMatrix t = multiply_adjoint(u.matrix() * h.matrix(), u.matrix());
        total += k.offdiag_penalty(t.dim(), t.entries().data());
    }
    return total;
}

std::vector<double> curing_gradient(std::span<const HermitianMatrix> set, std::span<const double> theta,
                                    const GellMannBasis& basis, double h) {
    std::vector<double> x(theta.begin(), theta.end());
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x0 = x[i];
        x[i] = x0 + h;
        const double fp = curing_objective(set, x, basis);
        x[i] = x0 - h;
        const double fm = curing_objective(set, x, basis);
        x[i] = x0;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

namespace {

struct RestartOutcome {
    std::vector<double> theta;
    double penalty = std::numeric_limits<double>::infinity();
    std::size_t iterations = 0;
};

RestartOutcome descend(std::span<const HermitianMatrix> set, std::vector<double> theta, const CuringConfig& cfg,
                       const GellMannBasis& basis) {
    RestartOutcome out;
    double f = curing_objective(set, theta, basis);
    double step = cfg.initial_step;
    std::vector<double> trial(theta.size());
    std::size_t it = 0;
    for (; it < cfg.max_iters && f >= cfg.success_tol; ++it) {
        const std::vector<double> g = curing_gradient(set, theta, basis, cfg.fd_step);
        double gg = 0.0;
        for (double v : g) gg += v * v;
        if (std::sqrt(gg) < 1e-12) break;

        // Backtracking (Armijo). Each line search starts from twice the last
        // accepted step, so the step adapts to the local curvature.
        double t = step;
        bool accepted = false;
        while (t > 1e-14) {
            for (std::size_t i = 0; i < theta.size(); ++i) trial[i] = theta[i] - t * g[i];
            const double ft = curing_objective(set, trial, basis);
            if (ft <= f - 1e-4 * t * gg) {
                theta.swap(trial);
                f = ft;
                accepted = true;
                break;
            }
            t *= cfg.shrink;
        }
        if (!accepted) break;
        step = std::min(2.0 * t, 1e3 * cfg.initial_step);
    }
    out.theta = std::move(theta);
    out.penalty = f;
    out.iterations = it;
    return out;
}

// Off-diagonal residuals r with |r|^2 = penalty: sqrt(2) max(0, Re t_jk) and
// sqrt(2) Im t_jk for j < k.
void residuals(std::span<const HermitianMatrix> set, std::span<const double> theta, const GellMannBasis& basis,
               std::vector<double>& r) {
    const UnitaryMatrix u = unitary_from_generator(theta, basis);
    r.clear();
    for (const HermitianMatrix& h : set) {
        const ComplexMatrix t = multiply_adjoint(u.matrix() * h.matrix(), u.matrix());
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = j + 1; k < t.dim(); ++k) {
                r.push_back(std::numbers::sqrt2 * std::max(0.0, t(j, k).real()));
                r.push_back(std::numbers::sqrt2 * t(j, k).imag());
            }
    }
}

double squared(const std::vector<double>& r) {
    double s = 0.0;
    for (double v : r) s += v * v;
    return s;
}

// Solves a symmetric positive definite system in place by Cholesky. Returns
// false if the matrix is not numerically positive definite.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) diag -= a[j * n + k] * a[j * n + k];
        if (!(diag > 0.0)) return false;
        const double l = std::sqrt(diag);
        a[j * n + j] = l;
        for (std::size_t i = j + 1; i < n; ++i) {
            double v = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) v -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = v / l;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) b[i] -= a[i * n + k] * b[k];
        b[i] /= a[i * n + i];
    }
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t k = i + 1; k < n; ++k) b[i] -= a[k * n + i] * b[k];
        b[i] /= a[i * n + i];
    }
    return true;
}

// Levenberg-Marquardt on the residual vector with a central-difference
// Jacobian. Only decreasing steps are taken.
void polish(std::span<const HermitianMatrix> set, RestartOutcome& out, const CuringConfig& cfg,
            const GellMannBasis& basis) {
    const std::size_t n = out.theta.size();
    std::vector<double> r, rp, rm;
    residuals(set, out.theta, basis, r);
    double f = squared(r);
    double mu = 1e-3;
    std::vector<double> x = out.theta, trial(n), jac, jtj(n * n), rhs(n), a, b;
    for (std::size_t it = 0; it < cfg.polish_iters && f > 0.0; ++it) {
        const std::size_t rows = r.size();
        jac.assign(rows * n, 0.0);
        for (std::size_t c = 0; c < n; ++c) {
            const double x0 = x[c];
            x[c] = x0 + cfg.fd_step;
            residuals(set, x, basis, rp);
            x[c] = x0 - cfg.fd_step;
            residuals(set, x, basis, rm);
            x[c] = x0;
            for (std::size_t q = 0; q < rows; ++q) jac[q * n + c] = (rp[q] - rm[q]) / (2.0 * cfg.fd_step);
        }
        for (std::size_t i = 0; i < n; ++i) {
            rhs[i] = 0.0;
            for (std::size_t q = 0; q < rows; ++q) rhs[i] -= jac[q * n + i] * r[q];
            for (std::size_t j = 0; j <= i; ++j) {
                double s = 0.0;
                for (std::size_t q = 0; q < rows; ++q) s += jac[q * n + i] * jac[q * n + j];
                jtj[i * n + j] = jtj[j * n + i] = s;
            }
        }
        bool improved = false;
        for (int attempt = 0; attempt < 12 && !improved; ++attempt, mu *= 10.0) {
            a = jtj;
            b = rhs;
            double scale = 0.0;
            for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, jtj[i * n + i]);
            for (std::size_t i = 0; i < n; ++i) a[i * n + i] += mu * std::max(scale, 1e-300);
            if (!cholesky_solve(a, b, n)) continue;
            for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + b[i];
            residuals(set, trial, basis, rp);
            const double ft = squared(rp);
            if (ft < f) {
                x.swap(trial);
                r.swap(rp);
                f = ft;
                mu = std::max(mu / 100.0, 1e-12);
                improved = true;
            }
        }
        ++out.iterations;
        if (!improved) break;
    }
    if (f < out.penalty) {
        out.theta = std::move(x);
        out.penalty = f;
    }
}

std::vector<double> restart_start(std::size_t restart, const CuringConfig& cfg, std::size_t n) {
    std::vector<double> theta(n, 0.0);
    if (restart == 0) return theta;
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (double& t : theta) t = angle(rng);
    return theta;
}

}  // namespace

CuringResult cure_search(std::span<const HermitianMatrix> set, const CuringConfig& config, const GellMannBasis& basis) {
    config.validate();
    if (set.empty()) throw Error("cure_search: empty set");
    for (const HermitianMatrix& h : set)
        if (h.dim() != basis.dim()) throw Error("cure_search: set dimension does not match basis");

    const std::size_t n = basis.size();
    std::vector<RestartOutcome> outcomes;
    outcomes.reserve(config.restarts);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<RestartOutcome> batch(end - begin);
        std::size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = std::min(workers, batch.size());
        auto work = [&](std::size_t w) {
            for (std::size_t r = begin + w; r < end; r += workers)
            {
                batch[r - begin] = descend(set, restart_start(r, config, n), config, basis);
                if (config.polish_iters > 0) polish(set, batch[r - begin], config, basis);
            }
        };
        if (workers <= 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        }
        for (auto& o : batch) outcomes.push_back(std::move(o));
    };
    auto any_success = [&] {
        return std::any_of(outcomes.begin(), outcomes.end(),
                           [&](const RestartOutcome& o) { return o.penalty < config.success_tol; });
    };

    run_range(0, 1);
    for (std::size_t begin = 1; begin < config.restarts && !any_success(); begin += config.batch)
        run_range(begin, std::min(config.restarts, begin + config.batch));

    std::size_t best = 0;
    for (std::size_t r = 1; r < outcomes.size(); ++r)
        if (outcomes[r].penalty < outcomes[best].penalty) best = r;

    CuringResult result;
    result.theta = outcomes[best].theta;
    result.unitary = unitary_from_generator(result.theta, basis);
    for (const HermitianMatrix& h : set) result.transformed.push_back(conjugate(result.unitary, h));
    result.penalty = stoq_penalty(result.transformed);
    for (const HermitianMatrix& t : result.transformed)
        for (std::size_t j = 0; j < t.dim(); ++j)
            for (std::size_t k = 0; k < t.dim(); ++k)
                if (j != k)
                    result.max_violation =
                        std::max({result.max_violation, t(j, k).real(), std::abs(t(j, k).imag())});
    result.found = result.penalty < config.success_tol && result.max_violation <= 10.0 * config.success_tol;
    result.best_restart = best;
    result.restarts_used = outcomes.size();
    for (const auto& o : outcomes) result.iterations_total += o.iterations;
    return result;
}

std::vector<HermitianMatrix> random_stoquastic_set(std::size_t d, std::size_t m, std::uint64_t seed) {
    if (d < 2 || m < 1) throw Error("random_stoquastic_set: need d >= 2 and m >= 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<HermitianMatrix> out;
    for (std::size_t s = 0; s < m; ++s) {
        ComplexMatrix h(d);
        for (std::size_t j = 0; j < d; ++j) {
            h(j, j) = normal(rng);
            for (std::size_t k = j + 1; k < d; ++k) {
                const double v = -std::abs(normal(rng));
                h(j, k) = v;
                h(k, j) = v;
            }
        }
        const double shift = h.trace().real() / static_cast<double>(d);
        for (std::size_t j = 0; j < d; ++j) h(j, j) -= shift;
        out.push_back(HermitianMatrix::hermitize(h));
    }
    return out;
}

PlantedInstance plant_instance(std::size_t d, std::size_t m, std::uint64_t seed, const GellMannBasis& basis) {
    if (basis.dim() != d) throw Error("plant_instance: basis dimension mismatch");
    PlantedInstance p;
    p.stoquastic = random_stoquastic_set(d, m, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    p.theta_star.resize(basis.size());
    for (double& t : p.theta_star) t = angle(rng);
    const UnitaryMatrix v = unitary_from_generator(p.theta_star, basis);
    for (const HermitianMatrix& h : p.stoquastic) p.set.push_back(conjugate(v, h));
    return p;
}

}  // namespace stoq
