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


#ifndef OTOMO_MINIMIZE_H
#define OTOMO_MINIMIZE_H

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace otomo {

using Objective = std::function<double(const Eigen::VectorXd &)>;
using GradientFn = std::function<Eigen::VectorXd(const Eigen::VectorXd &)>;

/// (f(x + h e_i) - f(x - h e_i)) / 2h for every coordinate.
Eigen::VectorXd central_difference_gradient(const Objective &f, const Eigen::VectorXd &x, double h);

struct MinimizeOptions {
    int max_iterations = 500;
    /// Stop once an accepted step changes f by less than f_tolerance·(1 + |f|).
    double f_tolerance = 1e-9;
    double gradient_tolerance = 1e-12;
};

struct MinimizeResult {
    Eigen::VectorXd x;
    double value = 0;
    int iterations = 0;
    bool converged = false;
    /// f after every accepted step, starting with f(x0); non-increasing.
    std::vector<double> history;
};

/// Quasi-Newton descent (BFGS inverse-Hessian update, Armijo backtracking).
/// Falls back to steepest descent when the quasi-Newton direction fails.
MinimizeResult minimize_bfgs(const Objective &f, const GradientFn &grad, const Eigen::VectorXd &x0,
                             const MinimizeOptions &options = {});

}  // namespace otomo

#endif
