// Copyright 2026 The Otomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "otomo/direction_optimizer.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "otomo/measurement_map.h"
#include "otomo/minimize.h"
#include "otomo/parallel.h"

namespace otomo {

OptimizerConfig OptimizerConfig::with_w2(double w2) {
    OptimizerConfig cfg;
    cfg.w2 = w2;
    cfg.w1 = std::sqrt(std::max(0.0, 1 - w2 * w2));
    return cfg;
}

void OptimizerConfig::validate(size_t n, size_t m) const {
    if (w1 < 0 || w2 < 0 || std::abs(w1 * w1 + w2 * w2 - 1) > 1e-9) {
        throw std::invalid_argument("weights must be non-negative with w1^2 + w2^2 = 1");
    }
    if (restarts < 1 || max_iterations < 0 || !(gradient_step > 0)) {
        throw std::invalid_argument("need restarts >= 1, max_iterations >= 0 and a positive gradient step");
    }
    if (constraint == DirectionConstraint::kOrthonormal) {
        if (m % 3 != 0) {
            throw std::invalid_argument("orthonormal partitions need a multiple of three settings");
        }
        if (!partitions.empty()) {
            if (partitions.size() != n) {
                throw std::invalid_argument("need one partition per qubit");
            }
            for (const auto &qubit : partitions) {
                std::vector<int> seen(m, 0);
                if (qubit.size() * 3 != m) {
                    throw std::invalid_argument("each partition must use every setting exactly once");
                }
                for (const auto &triple : qubit) {
                    for (int i : triple) {
                        if (i < 0 || static_cast<size_t>(i) >= m || seen[i]++) {
                            throw std::invalid_argument("each partition must use every setting exactly once");
                        }
                    }
                }
            }
        }
    }
}

double portfolio_objective(const DirectionSet &ds, size_t k, double w1, double w2) {
    double sum = 0;
    double sum_sq = 0;
    for (const auto &s : all_subsets(ds.n(), k)) {
        double d = std::abs(z_matrix(ds, s, k).fullPivLu().determinant());
        sum += d;
        sum_sq += d * d;
    }
    return w1 * sum - w2 * sum_sq;
}

Eigen::VectorXd direction_angles(const DirectionSet &ds) {
    Eigen::VectorXd x(static_cast<Eigen::Index>(2 * ds.n() * ds.m()));
    for (size_t q = 0; q < ds.n(); q++) {
        for (size_t a = 0; a < ds.m(); a++) {
            x[static_cast<Eigen::Index>(2 * (q * ds.m() + a))] = ds.at(q, a).theta;
            x[static_cast<Eigen::Index>(2 * (q * ds.m() + a) + 1)] = ds.at(q, a).phi;
        }
    }
    return x;
}

DirectionSet directions_from_angles(const Eigen::VectorXd &angles, size_t n, size_t m) {
    if (static_cast<size_t>(angles.size()) != 2 * n * m) {
        throw std::invalid_argument("angle vector has the wrong length");
    }
    std::vector<std::vector<BlochDirection>> dirs(n, std::vector<BlochDirection>(m));
    for (size_t q = 0; q < n; q++) {
        for (size_t a = 0; a < m; a++) {
            dirs[q][a] = {angles[static_cast<Eigen::Index>(2 * (q * m + a))],
                          angles[static_cast<Eigen::Index>(2 * (q * m + a) + 1)]};
        }
    }
    return DirectionSet(std::move(dirs));
}

Eigen::VectorXd abs_det_sum_gradient(const DirectionSet &ds, size_t k) {
    const size_t n = ds.n();
    const size_t m = ds.m();
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(2 * n * m));
    for (const auto &subset : all_subsets(n, k)) {
        Eigen::MatrixXd z = z_matrix(ds, subset, k);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(z);
        double det = lu.determinant();
        if (std::abs(det) < 1e-300 || !lu.isInvertible()) {
            continue;
        }
        // ∂|det Z| = |det Z| · tr(Z⁻¹ ∂Z); only column α of Z moves.
        Eigen::MatrixXd z_inv = lu.inverse();
        for (size_t a = 0; a < m; a++) {
            for (size_t pos = 0; pos < k; pos++) {
                const auto &d = ds.at(subset[pos], a);
                Eigen::Vector3d dtheta(std::cos(d.theta) * std::cos(d.phi), std::cos(d.theta) * std::sin(d.phi),
                                       -std::sin(d.theta));
                Eigen::Vector3d dphi(-std::sin(d.theta) * std::sin(d.phi), std::sin(d.theta) * std::cos(d.phi), 0);
                for (int which = 0; which < 2; which++) {
                    Eigen::VectorXd col = Eigen::VectorXd::Ones(1);
                    for (size_t i = 0; i < k; i++) {
                        Eigen::Vector3d v = i == pos ? (which == 0 ? dtheta : dphi) : ds.vector(subset[i], a);
                        Eigen::VectorXd next(col.size() * 3);
                        for (Eigen::Index j = 0; j < col.size(); j++) {
                            next.segment<3>(3 * j) = col[j] * v;
                        }
                        col = std::move(next);
                    }
                    double trace = z_inv.row(static_cast<Eigen::Index>(a)).dot(col);
                    grad[static_cast<Eigen::Index>(2 * (subset[pos] * m + a) + which)] += std::abs(det) * trace;
                }
            }
        }
    }
    return grad;
}

Eigen::Matrix3d euler_rotation(double a, double b, double c) {
    return (Eigen::AngleAxisd(a, Eigen::Vector3d::UnitZ()) * Eigen::AngleAxisd(b, Eigen::Vector3d::UnitY()) *
            Eigen::AngleAxisd(c, Eigen::Vector3d::UnitZ()))
        .toRotationMatrix();
}

namespace {

OrthonormalPartition effective_partitions(const OptimizerConfig &cfg, size_t n, size_t m) {
    if (!cfg.partitions.empty()) {
        return cfg.partitions;
    }
    OrthonormalPartition out(n);
    for (size_t q = 0; q < n; q++) {
        for (size_t t = 0; t < m / 3; t++) {
            int b = static_cast<int>(3 * t);
            out[q].push_back({b, b + 1, b + 2});
        }
    }
    return out;
}

DirectionSet directions_from_rotations(const Eigen::VectorXd &params, const OrthonormalPartition &parts, size_t m) {
    std::vector<std::vector<BlochDirection>> dirs(parts.size(), std::vector<BlochDirection>(m));
    Eigen::Index p = 0;
    for (size_t q = 0; q < parts.size(); q++) {
        for (const auto &triple : parts[q]) {
            Eigen::Matrix3d r = euler_rotation(params[p], params[p + 1], params[p + 2]);
            p += 3;
            for (int i = 0; i < 3; i++) {
                dirs[q][triple[i]] = BlochDirection::from_vector(r.col(i));
            }
        }
    }
    return DirectionSet(std::move(dirs));
}

uint64_t restart_seed(uint64_t seed, int restart) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(restart)};
    std::mt19937_64 rng(seq);
    return rng();
}

struct RestartOutcome {
    DirectionSet directions;
    double objective = -INFINITY;
    bool complete = false;
};

}  // namespace

OptimizationResult optimize_directions(size_t n, size_t k, const OptimizerConfig &cfg, uint64_t seed,
                                       size_t threads) {
    if (k == 0 || k > n) {
        throw std::invalid_argument("need 1 <= k <= n");
    }
    size_t m = 1;
    for (size_t i = 0; i < k; i++) {
        m *= 3;
    }
    cfg.validate(n, m);
    const bool orthonormal = cfg.constraint == DirectionConstraint::kOrthonormal;
    const OrthonormalPartition parts = orthonormal ? effective_partitions(cfg, n, m) : OrthonormalPartition{};

    auto to_directions = [&](const Eigen::VectorXd &x) {
        return orthonormal ? directions_from_rotations(x, parts, m) : directions_from_angles(x, n, m);
    };
    Objective loss = [&](const Eigen::VectorXd &x) { return -portfolio_objective(to_directions(x), k, cfg.w1, cfg.w2); };
    GradientFn grad = [&](const Eigen::VectorXd &x) { return central_difference_gradient(loss, x, cfg.gradient_step); };

    std::vector<RestartOutcome> outcomes(static_cast<size_t>(cfg.restarts));
    parallel_for(outcomes.size(), threads, [&](size_t r) {
        uint64_t s = restart_seed(seed, static_cast<int>(r));
        Eigen::VectorXd x0;
        if (orthonormal) {
            std::mt19937_64 rng(s);
            std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
            x0.resize(static_cast<Eigen::Index>(n * (m / 3) * 3));
            for (auto &v : x0) {
                v = angle(rng);
            }
        } else {
            x0 = direction_angles(sample_uniform_directions(n, m, s));
        }
        MinimizeOptions opts;
        opts.max_iterations = cfg.max_iterations;
        auto res = minimize_bfgs(loss, grad, x0, opts);
        outcomes[r].directions = to_directions(res.x);
        outcomes[r].objective = -res.value;
        outcomes[r].complete = completeness_check(outcomes[r].directions, k).complete;
    });

    OptimizationResult result;
    int best = -1;
    for (size_t r = 0; r < outcomes.size(); r++) {
        result.restart_objectives.push_back(outcomes[r].objective);
        if (outcomes[r].complete && (best < 0 || outcomes[r].objective > outcomes[best].objective)) {
            best = static_cast<int>(r);
        }
    }
    if (best >= 0) {
        result.directions = outcomes[best].directions;
        result.objective = outcomes[best].objective;
        result.best_restart = best;
    } else {
        // Degenerate weights can drive every determinant to zero; random sets
        // are complete almost surely.
        uint64_t s = seed;
        do {
            result.directions = sample_uniform_directions(n, m, s++);
        } while (!completeness_check(result.directions, k).complete);
        result.objective = portfolio_objective(result.directions, k, cfg.w1, cfg.w2);
        result.best_restart = -1;
    }
    result.sigma_max = sigma_max(result.directions, k, threads).sigma_max;
    return result;
}

}  // namespace otomo
