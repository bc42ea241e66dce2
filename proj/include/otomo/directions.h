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


#ifndef OTOMO_DIRECTIONS_H
#define OTOMO_DIRECTIONS_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "otomo/pauli.h"

namespace otomo {

/// A point on the Bloch sphere, v = (sin θ cos φ, sin θ sin φ, cos θ).
/// The measured observable is v·(X, Y, Z) with projectors (1 ± v·σ)/2.
struct BlochDirection {
    double theta = 0;
    double phi = 0;

    Eigen::Vector3d vector() const;
    /// Angles of a non-zero vector (normalized first); φ in (-π, π].
    static BlochDirection from_vector(const Eigen::Vector3d &v);
    bool operator==(const BlochDirection &) const = default;
};

/// Setting α measures qubit i along `at(i, α)`; an n × m rectangle.
class DirectionSet {
   public:
    DirectionSet() = default;
    /// `directions[i][α]`; throws std::invalid_argument if not rectangular.
    explicit DirectionSet(std::vector<std::vector<BlochDirection>> directions);

    size_t n() const {
        return directions_.size();
    }
    size_t m() const {
        return directions_.empty() ? 0 : directions_[0].size();
    }
    const BlochDirection &at(size_t qubit, size_t setting) const {
        return directions_[qubit][setting];
    }
    Eigen::Vector3d vector(size_t qubit, size_t setting) const {
        return directions_[qubit][setting].vector();
    }
    const std::vector<std::vector<BlochDirection>> &directions() const {
        return directions_;
    }

    /// `{"angles": [[[θ, φ], ...m...], ...n...], "m": 9, "n": 6}`
    std::string to_json() const;
    static DirectionSet from_json(std::string_view text);
    bool operator==(const DirectionSet &) const = default;

   private:
    std::vector<std::vector<BlochDirection>> directions_;
};

/// Each direction is three standard normals, normalized. Deterministic per seed.
DirectionSet sample_uniform_directions(size_t n, size_t m, uint64_t seed);

/// X → (π/2, 0), Y → (π/2, π/2), Z → (0, 0); setting α is the α-th string.
DirectionSet pauli_to_directions(const PauliSet &ps);

/// The optimized nine-setting six-qubit set with orthonormal partitions,
/// angles to five decimals.
DirectionSet paper_table_a1();

/// Per qubit, three index triples (0-based) that partition the nine
/// settings of `paper_table_a1` into orthonormal bases.
std::vector<std::vector<std::array<int, 3>>> paper_table_a1_partitions();

}  // namespace otomo

#endif
