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


#include "otomo/minimize.h"

#include <cmath>

namespace otomo {

Eigen::VectorXd central_difference_gradient(const Objective &f, const Eigen::VectorXd &x, double h) {
    Eigen::VectorXd g(x.size());
    Eigen::VectorXd probe = x;
    for (Eigen::Index i = 0; i < x.size(); i++) {
        probe[i] = x[i] + h;
        double up = f(probe);
        probe[i] = x[i] - h;
        double down = f(probe);
        probe[i] = x[i];
        g[i] = (up - down) / (2 * h);
    }
    return g;
}

namespace {

struct LineSearchResult {
    bool accepted = false;
    Eigen::VectorXd x;
    double value = 0;
};

LineSearchResult backtrack(const Objective &f, const Eigen::VectorXd &x, double fx, const Eigen::VectorXd &g,
                           const Eigen::VectorXd &direction) {
    const double slope = g.dot(direction);
    LineSearchResult out;
    if (!(slope < 0)) {
        return out;
    }
    double step = 1;
    for (int i = 0; i < 60; i++) {
        Eigen::VectorXd trial = x + step * direction;
        double ft = f(trial);
        if (std::isfinite(ft) && ft <= fx + 1e-4 * step * slope) {
            out.accepted = ft <= fx;
            out.x = std::move(trial);
            out.value = ft;
            return out;
        }
        step *= 0.5;
    }
    return out;
}

}  // namespace

MinimizeResult minimize_bfgs(const Objective &f, const GradientFn &grad, const Eigen::VectorXd &x0,
                             const MinimizeOptions &options) {
    const Eigen::Index dim = x0.size();
    MinimizeResult result;
    result.x = x0;
    result.value = f(x0);
    result.history.push_back(result.value);
    Eigen::VectorXd g = grad(result.x);
    Eigen::MatrixXd inv_hessian = Eigen::MatrixXd::Identity(dim, dim);

    for (result.iterations = 0; result.iterations < options.max_iterations; result.iterations++) {
        if (g.norm() <= options.gradient_tolerance) {
            result.converged = true;
            break;
        }
        Eigen::VectorXd direction = -inv_hessian * g;
        LineSearchResult ls = backtrack(f, result.x, result.value, g, direction);
        if (!ls.accepted) {
            inv_hessian.setIdentity();
            direction = -g;
            ls = backtrack(f, result.x, result.value, g, direction);
            if (!ls.accepted) {
                result.converged = true;
                break;
            }
        }
        Eigen::VectorXd step = ls.x - result.x;
        Eigen::VectorXd g_new = grad(ls.x);
        Eigen::VectorXd dg = g_new - g;
        const double change = result.value - ls.value;
        result.x = std::move(ls.x);
        result.value = ls.value;
        result.history.push_back(result.value);
        g = std::move(g_new);

        const double curvature = step.dot(dg);
        if (curvature > 1e-12 * step.norm() * dg.norm()) {
            const double rho = 1 / curvature;
            Eigen::MatrixXd left = Eigen::MatrixXd::Identity(dim, dim) - rho * step * dg.transpose();
            inv_hessian = left * inv_hessian * left.transpose() + rho * step * step.transpose();
        }
        if (change < options.f_tolerance * (1 + std::abs(result.value))) {
            result.converged = true;
            result.iterations++;
            break;
        }
    }
    return result;
}

}  // namespace otomo
