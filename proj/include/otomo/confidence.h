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


#ifndef OTOMO_CONFIDENCE_H
#define OTOMO_CONFIDENCE_H

#include <cstdint>

namespace otomo {

/// Total sample count N and failure probability δ of a confidence region.
struct ConfidenceParams {
    double samples = 1;
    double delta = 0.05;

    /// Throws std::invalid_argument unless N ≥ 1 and 0 < δ < 1.
    void validate() const;
    /// u = 2 log(8/δ) / (9N)
    double u() const;
    /// ε = 3√u (√u + √(u+1))
    double epsilon() const;
};

/// Hilbert–Schmidt radius ε(N, δ)·σ: the marginal lies within it of the
/// estimate with probability at least 1 - δ.
double confidence_radius(const ConfidenceParams &cp, double sigma);

/// Real-valued N at which ε(N, δ)·σ equals `radius` exactly.
double required_samples(double sigma, double radius, double delta);

/// Smallest integer N with ε(N, δ)·σ ≤ radius, by monotone bisection.
uint64_t samples_for_radius(double sigma, double radius, double delta);

/// N(σ)/N(σ_ref) at a common radius, from the real-valued sample counts.
/// Independent of δ.
double sample_ratio(double sigma, double sigma_ref, double radius, double delta);

}  // namespace otomo

#endif
