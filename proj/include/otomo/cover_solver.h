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

#ifndef OTOMO_COVER_SOLVER_H
#define OTOMO_COVER_SOLVER_H

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otomo/hypergraph.h"
#include "otomo/marginal_design.h"
#include "otomo/pauli.h"

namespace otomo {

/// Hard cap on qubits for enumerating all 3^n candidate settings.
inline constexpr size_t kMaxEnumeratedQubits = 12;

/// The minimal-cover binary program: pick the fewest candidate settings so
/// that every requirement is covered by at least one of them.
///
/// Requirements are grouped by edge. Requirement ids are
/// `edge_offset(e) + restricted code`, so a candidate covers exactly one
/// requirement per edge.
class CoverInstance {
   public:
    /// All 3^n strings are candidates. Throws std::invalid_argument if n > 12.
    static CoverInstance from_hypergraph(const ConnectivityHypergraph &h);
    /// Only the listed strings are candidates. Throws std::invalid_argument
    /// if some requirement is not coverable by any of them.
    static CoverInstance with_candidates(const ConnectivityHypergraph &h, const PauliSet &candidates);

    const ConnectivityHypergraph &hypergraph() const {
        return h_;
    }
    size_t num_qubits() const {
        return h_.n();
    }
    size_t num_edges() const {
        return h_.edges().size();
    }
    size_t num_requirements() const {
        return edge_offset_.back();
    }
    size_t num_candidates() const {
        return explicit_ ? candidates_.size() : total_;
    }
    size_t edge_offset(size_t e) const {
        return edge_offset_[e];
    }
    /// Candidate ids are sorted lexicographically by their strings.
    PauliString candidate(size_t id) const;
    std::optional<size_t> candidate_id(const PauliString &s) const;
    Requirement requirement(size_t id) const;
    size_t edge_of(size_t requirement_id) const;

    /// Requirement ids covered by candidate `id`, one per edge.
    void covered_by(size_t id, std::vector<uint32_t> &out) const;
    /// Candidate ids covering requirement `r`, ascending.
    void covering(size_t r, std::vector<uint32_t> &out) const;

    /// True when every per-qubit axis relabelling maps the instance to itself.
    bool axis_symmetric() const {
        return !explicit_;
    }

   private:
    CoverInstance() = default;
    void index_edges();

    ConnectivityHypergraph h_;
    std::vector<size_t> edge_offset_;
    std::vector<uint64_t> place_value_;  // 3^(n-1-q)
    bool explicit_ = false;
    size_t total_ = 0;
    std::vector<uint64_t> candidates_;               // explicit mode: sorted codes
    std::vector<std::vector<uint32_t>> covering_;  // explicit mode
};

/// Max over edges of the number of uncovered requirements on that edge.
/// `covered` is indexed by requirement id. Every candidate covers at most
/// one requirement per edge, so this never exceeds the optimum remaining.
int lower_bound(const CoverInstance &inst, const std::vector<bool> &covered);

/// Repeatedly takes the candidate covering the most uncovered requirements,
/// ties broken lexicographically.
PauliSet greedy_cover(const CoverInstance &inst);

struct SolveBudget {
    uint64_t max_nodes = UINT64_MAX;
    std::chrono::duration<double> max_time = std::chrono::duration<double>(600.0);
};

struct SolveReport {
    PauliSet solution;
    int size = 0;
    int lower_bound = 0;
    bool optimal = false;
    uint64_t nodes_explored = 0;
    std::chrono::duration<double> wall_time{0};
    bool budget_hit = false;

    /// Keys sorted, floats with 17 significant digits. Without timing the
    /// text depends only on the search, not on the machine.
    std::string to_json(bool include_timing = true) const;
};

/// Exact depth-first branch and bound. Branches on the uncovered requirement
/// with the fewest remaining candidates; siblings exclude earlier siblings'
/// candidates. The root fixes the all-X setting on axis-symmetric instances.
SolveReport branch_and_bound(const CoverInstance &inst, const SolveBudget &budget,
                             const std::optional<PauliSet> &incumbent = std::nullopt);

/// Tabu search for a cover of h with exactly `rows` settings: repeatedly
/// picks an uncovered requirement and writes it into the row where that
/// loses the fewest other requirements. Deterministic per seed; nullopt if
/// no cover is found within `max_steps`.
std::optional<PauliSet> local_search_cover(const ConnectivityHypergraph &h, size_t rows, uint64_t seed,
                                           uint64_t max_steps);

/// Exact solve of all of h's requirements over every 3^n string, seeded
/// with the greedy cover and, when h can be strongly coloured with fewer
/// colours than qubits, with colouring_construction over an exact solution
/// for the complete instance on that many qubits; then tightened by
/// local_search_cover one setting at a time down to the root bound.
SolveReport solve_minimal_cover(const ConnectivityHypergraph &h, const SolveBudget &budget);

/// Minimal pair-covering sets on 2..max_qubits qubits (index i has i + 2
/// qubits), solved exactly; used as recursive_cover bases.
std::vector<PauliSet> minimal_pair_bases(size_t max_qubits, const SolveBudget &budget);

/// CPLEX LP text: binary `z_<string>` per candidate, minimize their sum,
/// one `>= 1` row per requirement.
std::string ilp_export(const CoverInstance &inst);
void ilp_export(const CoverInstance &inst, const std::string &path);

}  // namespace otomo

#endif
