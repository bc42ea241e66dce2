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

#ifndef OTOMO_MARGINAL_DESIGN_H
#define OTOMO_MARGINAL_DESIGN_H

#include <optional>
#include <string>
#include <vector>

#include "otomo/hypergraph.h"
#include "otomo/pauli.h"

namespace otomo {

/// One multi-qubit Pauli operator whose expectation value is needed: the
/// axes `assignment[i]` on qubits `subset[i]`.
struct Requirement {
    VertexSubset subset;
    std::vector<PauliAxis> assignment;

    std::string str() const;  // e.g. "{0,1}:XY"
    auto operator<=>(const Requirement &) const = default;
    bool operator==(const Requirement &) const = default;
};

/// All 3^|e| assignments for every edge, edges in stored order, assignments
/// lexicographic (X < Y < Z, first vertex most significant).
std::vector<Requirement> build_universe(const ConnectivityHypergraph &h);

/// True iff `s` restricted to `r.subset` equals `r.assignment`.
bool covers(const PauliString &s, const Requirement &r);

struct CoverReport {
    bool complete = false;
    std::vector<Requirement> missing;
    size_t min_multiplicity = 0;
    size_t max_multiplicity = 0;
};

/// Throws std::invalid_argument if set.n() != h.n().
CoverReport verify_cover(const PauliSet &set, const ConnectivityHypergraph &h);

/// Copies column colour(i) of `base` into column i of the result. `base`
/// must cover every max-edge-size subset of its own qubits.
PauliSet colouring_construction(const ConnectivityHypergraph &h, const PauliSet &base);
PauliSet colouring_construction(const ConnectivityHypergraph &h, const PauliSet &base, const Colouring &colouring);

struct RecursiveOptions {
    /// Relabel axes per qubit so both inputs share the constant all-X row
    /// when they do not already share a constant row.
    bool relabel = true;
    /// Emit a shared constant row once. When false the output always has
    /// m1 + m2 rows.
    bool merge = true;
};

/// Pair-covering set on n1*n2 qubits from pair-covering sets on n1 and n2
/// qubits. Qubit x*n1 + z takes column z of `a` in the first block and
/// column x of `b` in the second. A shared constant row is emitted once,
/// as is any other row the two blocks have in common.
PauliSet recursive_construction(const PauliSet &a, const PauliSet &b, RecursiveOptions options = {});

/// The first n columns of `set`, repeated rows dropped. Column restriction
/// keeps every covered assignment on the remaining qubits.
PauliSet restrict_qubits(const PauliSet &set, size_t n);

/// Pair cover on n qubits by chaining recursive_construction over the
/// factor choice from `bases` (each complete for all pairs of its qubits)
/// with the fewest predicted rows, then keeping the first n columns.
PauliSet recursive_cover(size_t n, const std::vector<PauliSet> &bases);

struct PhiBounds {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<std::string> sources;
};

/// Bounds on the minimal number of Pauli settings covering all k-subsets of
/// n qubits (or, with `g`, the edges of g).
PhiBounds phi_bounds(int n, int k, const ConnectivityHypergraph *g = nullptr);

/// Exactly known values of the minimal k-covering size, if tabulated.
std::optional<int> known_phi(int n, int k);

}  // namespace otomo

#endif
