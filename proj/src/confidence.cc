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


#include "otomo/confidence.h"

#include <cmath>
#include <stdexcept>

namespace otomo {

void ConfidenceParams::validate() const {
    if (!(samples >= 1)) {
        throw std::invalid_argument("sample count must be at least 1");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
}

double ConfidenceParams::u() const {
    validate();
    return 2 * std::log(8 / delta) / (9 * samples);
}

double ConfidenceParams::epsilon() const {
    double v = u();
    return 3 * std::sqrt(v) * (std::sqrt(v) + std::sqrt(v + 1));
}

double confidence_radius(const ConfidenceParams &cp, double sigma) {
    return cp.epsilon() * sigma;
}

namespace {

void check_radius_args(double sigma, double radius, double delta) {
    if (!(sigma > 0) || !(radius > 0)) {
        throw std::invalid_argument("sigma and radius must be positive");
    }
    ConfidenceParams{1, delta}.validate();
}

}  // namespace

double required_samples(double sigma, double radius, double delta) {
    check_radius_args(sigma, radius, delta);
    // Solve √u(√u + √(u+1)) = t for u: u = t² / (1 + 2t).
    double t = radius / (3 * sigma);
    double u = t * t / (1 + 2 * t);
    return 2 * std::log(8 / delta) / (9 * u);
}

uint64_t samples_for_radius(double sigma, double radius, double delta) {
    check_radius_args(sigma, radius, delta);
    auto ok = [&](uint64_t n) { return confidence_radius({static_cast<double>(n), delta}, sigma) <= radius; };
    uint64_t hi = 1;
    while (!ok(hi)) {
        if (hi > (uint64_t{1} << 62)) {
            throw std::overflow_error("required sample count exceeds 2^62");
        }
        hi *= 2;
    }
    uint64_t lo = hi / 2;  // !ok(lo) unless hi == 1
    if (hi == 1) {
        return 1;
    }
    while (hi - lo > 1) {
        uint64_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return hi;
}

double sample_ratio(double sigma, double sigma_ref, double radius, double delta) {
    return required_samples(sigma, radius, delta) / required_samples(sigma_ref, radius, delta);
}

}  // namespace otomo
