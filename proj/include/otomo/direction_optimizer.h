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


#ifndef OTOMO_DIRECTION_OPTIMIZER_H
#define OTOMO_DIRECTION_OPTIMIZER_H

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "otomo/directions.h"

namespace otomo {

/// Per qubit, index triples (0-based settings) that must form orthonormal bases.
using OrthonormalPartition = std::vector<std::vector<std::array<int, 3>>>;

enum class DirectionConstraint { kFree, kOrthonormal };

struct OptimizerConfig {
    double w1 = 1;
    double w2 = 0;
    int restarts = 20;
    int max_iterations = 300;
    double gradient_step = 1e-5;
    DirectionConstraint constraint = DirectionConstraint::kFree;
    /// Orthonormal constraint only; empty means consecutive triples
    /// {0,1,2}, {3,4,5}, ... on every qubit.
    OrthonormalPartition partitions;

    /// Weights from w2 alone: w1 = √(1 - w2²).
    static OptimizerConfig with_w2(double w2);
    /// Throws std::invalid_argument on negative weights, w1² + w2² ≠ 1, or
    /// partitions that do not cover each qubit's settings exactly once.
    void validate(size_t n, size_t m) const;
};

/// f = w1 Σ_S |det Z_S| - w2 Σ_S |det Z_S|² over all k-subsets S.
double portfolio_objective(const DirectionSet &ds, size_t k, double w1, double w2);

/// Gradient of Σ_S |det Z_S| with respect to the angles, by Jacobi's
/// formula. Entry 2(q·m + α) is ∂/∂θ of qubit q, setting α; the next is ∂/∂φ.
Eigen::VectorXd abs_det_sum_gradient(const DirectionSet &ds, size_t k);

/// Angle vector in the layout used by abs_det_sum_gradient, and back.
Eigen::VectorXd direction_angles(const DirectionSet &ds);
DirectionSet directions_from_angles(const Eigen::VectorXd &angles, size_t n, size_t m);

/// Rotation Rz(a) Ry(b) Rz(c); its columns form an orthonormal basis.
Eigen::Matrix3d euler_rotation(double a, double b, double c);

struct OptimizationResult {
    DirectionSet directions;
    double objective = 0;
    double sigma_max = 0;
    int best_restart = 0;
    /// Objective reached by every restart, in restart order.
    std::vector<double> restart_objectives;
};

/// Multi-start local ascent of the portfolio objective with central-difference
/// gradients. Free: θ, φ per direction. Orthonormal: three Euler angles per
/// basis triple. The best complete result (|det Z_S| > 1e-8 for every S)
/// wins; restarts run on up to `threads` workers with a per-restart seed.
OptimizationResult optimize_directions(size_t n, size_t k, const OptimizerConfig &cfg, uint64_t seed,
                                       size_t threads = 1);

}  // namespace otomo

#endif
