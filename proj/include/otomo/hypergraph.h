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

#ifndef OTOMO_HYPERGRAPH_H
#define OTOMO_HYPERGRAPH_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otomo {

using VertexSubset = std::vector<int>;

/// Which marginals are requested: vertices are qubits, hyperedges are the
/// qubit subsets whose reduced states must be reconstructable.
///
/// Edges are stored sorted and deduplicated. An edge contained in another
/// edge is dropped, since covering the larger subset covers the smaller one.
class ConnectivityHypergraph {
   public:
    ConnectivityHypergraph() = default;
    /// Throws std::invalid_argument on out-of-range or repeated vertices, or empty edges.
    ConnectivityHypergraph(size_t n, std::vector<VertexSubset> edges);

    size_t n() const {
        return n_;
    }
    const std::vector<VertexSubset> &edges() const {
        return edges_;
    }
    /// Edge size if every edge has the same size.
    std::optional<size_t> uniform_edge_size() const;
    size_t max_edge_size() const;

    /// Adjacency of the 2-section: u ~ v iff some edge contains both.
    std::vector<std::vector<bool>> two_section() const;

    /// `{"n": 6, "edges": [[0,1], ...]}`
    std::string to_json() const;
    static ConnectivityHypergraph from_json(std::string_view text);

    bool operator==(const ConnectivityHypergraph &) const = default;

   private:
    size_t n_ = 0;
    std::vector<VertexSubset> edges_;
};

ConnectivityHypergraph complete_hypergraph(size_t n, size_t k);
/// Hyperedges {i, ..., i+k-1 mod n}.
ConnectivityHypergraph ring_hypergraph(size_t n, size_t k);
/// Hyperedges {i, ..., i+k-1} for i = 0 .. n-k.
ConnectivityHypergraph line_hypergraph(size_t n, size_t k);
/// 4x4 square grid with first (horizontal/vertical) and second (diagonal) neighbours.
ConnectivityHypergraph grid16();
/// Seven-vertex graph with clique number 4 and chromatic number 5: a
/// 5-cycle on vertices 2..6 joined to the edge {0,1}.
ConnectivityHypergraph g7();

/// Parses "complete:n:k", "ring:n:k", "line:n:k", "grid16", "g7" (also
/// accepts "complete(4,2)"-style parentheses).
ConnectivityHypergraph preset_connectivity(std::string_view spec);

/// Largest vertex set all of whose k-subsets are edges (k = uniform edge size).
/// Throws std::invalid_argument if edges are not uniform or n > 32.
int clique_number(const ConnectivityHypergraph &h);

struct Colouring {
    int colours = 0;
    std::vector<int> colour_of;  // colour index per vertex
    bool exact = false;
};

/// Strong colouring: vertices sharing an edge get distinct colours. Exact by
/// backtracking for n <= 20, otherwise a DSATUR greedy colouring.
Colouring strong_chromatic_number(const ConnectivityHypergraph &h);

}  // namespace otomo

#endif
