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


#include "otomo/directions.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "otomo/serialization.h"

namespace otomo {

Eigen::Vector3d BlochDirection::vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

BlochDirection BlochDirection::from_vector(const Eigen::Vector3d &v) {
    double norm = v.norm();
    if (!(norm > 0)) {
        throw std::invalid_argument("cannot take the direction of a zero vector");
    }
    Eigen::Vector3d u = v / norm;
    return {std::acos(std::clamp(u.z(), -1.0, 1.0)), std::atan2(u.y(), u.x())};
}

DirectionSet::DirectionSet(std::vector<std::vector<BlochDirection>> directions) : directions_(std::move(directions)) {
    for (const auto &row : directions_) {
        if (row.size() != directions_[0].size()) {
            throw std::invalid_argument("direction set is not rectangular");
        }
    }
}

std::string DirectionSet::to_json() const {
    nlohmann::json angles = nlohmann::json::array();
    for (const auto &row : directions_) {
        nlohmann::json q = nlohmann::json::array();
        for (const auto &d : row) {
            q.push_back({d.theta, d.phi});
        }
        angles.push_back(q);
    }
    nlohmann::json j;
    j["angles"] = angles;
    j["m"] = m();
    j["n"] = n();
    return canonical_json(j);
}

DirectionSet DirectionSet::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("direction set JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("angles") || !j["angles"].is_array()) {
        throw std::invalid_argument("direction set JSON needs an \"angles\" array");
    }
    std::vector<std::vector<BlochDirection>> dirs;
    try {
        for (const auto &q : j["angles"]) {
            std::vector<BlochDirection> row;
            for (const auto &a : q) {
                if (!a.is_array() || a.size() != 2) {
                    throw std::invalid_argument("each direction must be a [theta, phi] pair");
                }
                row.push_back({a[0].get<double>(), a[1].get<double>()});
            }
            dirs.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("direction set JSON: ") + e.what());
    }
    DirectionSet ds(std::move(dirs));
    if (j.contains("n") && j["n"].get<size_t>() != ds.n()) {
        throw std::invalid_argument("direction set JSON: \"n\" does not match the angle table");
    }
    if (j.contains("m") && j["m"].get<size_t>() != ds.m()) {
        throw std::invalid_argument("direction set JSON: \"m\" does not match the angle table");
    }
    return ds;
}

DirectionSet sample_uniform_directions(size_t n, size_t m, uint64_t seed) {
    if (n == 0 || m == 0) {
        throw std::invalid_argument("direction sets need n, m >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<std::vector<BlochDirection>> dirs(n, std::vector<BlochDirection>(m));
    for (size_t q = 0; q < n; q++) {
        for (size_t a = 0; a < m; a++) {
            Eigen::Vector3d v;
            do {
                v = {normal(rng), normal(rng), normal(rng)};
            } while (v.norm() < 1e-12);
            dirs[q][a] = BlochDirection::from_vector(v);
        }
    }
    return DirectionSet(std::move(dirs));
}

DirectionSet pauli_to_directions(const PauliSet &ps) {
    constexpr double half_pi = std::numbers::pi / 2;
    std::vector<std::vector<BlochDirection>> dirs(ps.n(), std::vector<BlochDirection>(ps.size()));
    for (size_t a = 0; a < ps.size(); a++) {
        for (size_t q = 0; q < ps.n(); q++) {
            switch (ps[a][q]) {
                case PauliAxis::X:
                    dirs[q][a] = {half_pi, 0};
                    break;
                case PauliAxis::Y:
                    dirs[q][a] = {half_pi, half_pi};
                    break;
                case PauliAxis::Z:
                    dirs[q][a] = {0, 0};
                    break;
            }
        }
    }
    return DirectionSet(std::move(dirs));
}

namespace {

// Row = setting, columns = (θ, φ) for qubits 0..5.
constexpr double kTableA1[9][12] = {
    {1.34851, -1.7187, 0.74451, 1.85896, 2.81234, -1.66384, 1.22444, -2.24737, 2.62025, -1.56922, 1.61654, 2.41608},
    {1.62452, -0.16006, 0.83181, -1.13389, 1.24291, -1.56911, 1.86266, 1.89939, 0.78386, 2.4564, 0.32988, 0.14995},
    {0.2289, 1.17782, 0.83405, -0.17509, 2.33714, 0.27682, 0.74332, -0.27308, 2.61964, -1.73379, 1.32478, -1.55164},
    {0.88628, 0.06155, 0.98653, -2.38924, 2.63105, -1.5318, 0.94539, 2.20137, 1.04552, 0.26519, 1.65486, 1.47209},
    {0.9695, 2.22663, 1.64509, 0.36903, 1.06042, -1.5596, 1.70326, -2.5176, 1.60308, 3.08691, 2.42079, -0.27072},
    {1.01301, -2.04348, 1.83028, 0.04163, 2.21489, 2.65553, 2.12737, 2.11179, 1.05058, -1.644, 1.56836, -2.29642},
    {2.70374, 0.28677, 2.08781, -1.20394, 1.16136, 1.41667, 2.56575, -0.74011, 2.09094, 1.49761, 0.04581, 2.36286},
    {1.69042, -1.54368, 1.55645, -1.52536, 1.54184, 3.13342, 2.56242, -2.33567, 1.532, 3.04614, 0.91042, 0.21545},
    {1.9898, 3.11515, 2.88169, -3.04215, 1.58265, -3.12376, 1.08649, -2.97173, 2.09094, 1.49761, 1.2526, 3.01513},
};

}  // namespace

DirectionSet paper_table_a1() {
    std::vector<std::vector<BlochDirection>> dirs(6, std::vector<BlochDirection>(9));
    for (size_t a = 0; a < 9; a++) {
        for (size_t q = 0; q < 6; q++) {
            dirs[q][a] = {kTableA1[a][2 * q], kTableA1[a][2 * q + 1]};
        }
    }
    return DirectionSet(std::move(dirs));
}

std::vector<std::vector<std::array<int, 3>>> paper_table_a1_partitions() {
    std::vector<std::vector<std::array<int, 3>>> one_based = {
        {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, {{1, 2, 5}, {3, 4, 7}, {6, 8, 9}}, {{1, 2, 8}, {3, 6, 7}, {4, 5, 9}},
        {{1, 3, 4}, {2, 8, 9}, {5, 6, 7}}, {{1, 5, 9}, {2, 4, 7}, {3, 6, 8}}, {{1, 6, 7}, {2, 4, 9}, {3, 5, 8}},
    };
    for (auto &qubit : one_based) {
        for (auto &triple : qubit) {
            for (auto &i : triple) {
                i--;
            }
        }
    }
    return one_based;
}

}  // namespace otomo
