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

#include "otomo/cover_solver.h"

#include <algorithm>
#include <climits>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "otomo/serialization.h"

namespace otomo {

namespace {

constexpr uint64_t kLocalSearchSteps = 200000;

uint64_t pow3(size_t k) {
    uint64_t p = 1;
    for (size_t i = 0; i < k; i++) {
        p *= 3;
    }
    return p;
}

}  // namespace

void CoverInstance::index_edges() {
    edge_offset_.assign(1, 0);
    for (const auto &e : h_.edges()) {
        edge_offset_.push_back(edge_offset_.back() + pow3(e.size()));
    }
    place_value_.assign(h_.n(), 1);
    for (size_t q = h_.n(); q-- > 1;) {
        place_value_[q - 1] = place_value_[q] * 3;
    }
}

CoverInstance CoverInstance::from_hypergraph(const ConnectivityHypergraph &h) {
    if (h.n() > kMaxEnumeratedQubits) {
        throw std::invalid_argument(
            "explicit candidate enumeration is capped at " + std::to_string(kMaxEnumeratedQubits) + " qubits (got " +
            std::to_string(h.n()) + ")");
    }
    CoverInstance inst;
    inst.h_ = h;
    inst.total_ = pow3(h.n());
    inst.index_edges();
    return inst;
}

CoverInstance CoverInstance::with_candidates(const ConnectivityHypergraph &h, const PauliSet &candidates) {
    if (candidates.n() != h.n()) {
        throw std::invalid_argument("candidate strings do not match the hypergraph size");
    }
    if (h.n() > 40) {
        throw std::invalid_argument("candidate strings longer than 40 qubits are not supported");
    }
    CoverInstance inst;
    inst.h_ = h;
    inst.explicit_ = true;
    inst.index_edges();
    for (const auto &s : candidates.settings()) {
        inst.candidates_.push_back(s.code());
    }
    std::sort(inst.candidates_.begin(), inst.candidates_.end());
    inst.total_ = inst.candidates_.size();
    inst.covering_.assign(inst.num_requirements(), {});
    std::vector<uint32_t> buf;
    for (size_t c = 0; c < inst.candidates_.size(); c++) {
        inst.covered_by(c, buf);
        for (auto r : buf) {
            inst.covering_[r].push_back(static_cast<uint32_t>(c));
        }
    }
    for (size_t r = 0; r < inst.covering_.size(); r++) {
        if (inst.covering_[r].empty()) {
            throw std::invalid_argument("requirement " + inst.requirement(r).str() + " is not coverable");
        }
    }
    return inst;
}

PauliString CoverInstance::candidate(size_t id) const {
    return PauliString::from_code(explicit_ ? candidates_[id] : id, h_.n());
}

std::optional<size_t> CoverInstance::candidate_id(const PauliString &s) const {
    if (s.size() != h_.n()) {
        return std::nullopt;
    }
    uint64_t code = s.code();
    if (!explicit_) {
        return code;
    }
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), code);
    if (it == candidates_.end() || *it != code) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - candidates_.begin());
}

size_t CoverInstance::edge_of(size_t requirement_id) const {
    auto it = std::upper_bound(edge_offset_.begin(), edge_offset_.end(), requirement_id);
    return static_cast<size_t>(it - edge_offset_.begin()) - 1;
}

Requirement CoverInstance::requirement(size_t id) const {
    size_t e = edge_of(id);
    const auto &edge = h_.edges()[e];
    auto s = PauliString::from_code(id - edge_offset_[e], edge.size());
    return {edge, std::vector<PauliAxis>(s.axes().begin(), s.axes().end())};
}

void CoverInstance::covered_by(size_t id, std::vector<uint32_t> &out) const {
    out.clear();
    uint64_t code = explicit_ ? candidates_[id] : id;
    const size_t n = h_.n();
    uint8_t digits[64];
    for (size_t q = n; q-- > 0;) {
        digits[q] = static_cast<uint8_t>(code % 3);
        code /= 3;
    }
    const auto &edges = h_.edges();
    for (size_t e = 0; e < edges.size(); e++) {
        uint64_t c = 0;
        for (int v : edges[e]) {
            c = c * 3 + digits[v];
        }
        out.push_back(static_cast<uint32_t>(edge_offset_[e] + c));
    }
}

void CoverInstance::covering(size_t r, std::vector<uint32_t> &out) const {
    out.clear();
    if (explicit_) {
        out = covering_[r];
        return;
    }
    size_t e = edge_of(r);
    const auto &edge = h_.edges()[e];
    uint64_t local = r - edge_offset_[e];
    uint64_t fixed = 0;
    for (size_t i = edge.size(); i-- > 0;) {
        fixed += (local % 3) * place_value_[edge[i]];
        local /= 3;
    }
    std::vector<uint64_t> free_places;
    for (size_t q = 0; q < h_.n(); q++) {
        if (!std::binary_search(edge.begin(), edge.end(), static_cast<int>(q))) {
            free_places.push_back(place_value_[q]);
        }
    }
    std::vector<uint8_t> counter(free_places.size(), 0);
    uint64_t code = fixed;
    while (true) {
        out.push_back(static_cast<uint32_t>(code));
        // Increment the least significant free digit first; codes stay ascending.
        size_t i = counter.size();
        while (i > 0 && counter[i - 1] == 2) {
            counter[i - 1] = 0;
            code -= 2 * free_places[i - 1];
            i--;
        }
        if (i == 0) {
            break;
        }
        counter[i - 1]++;
        code += free_places[i - 1];
    }
}

int lower_bound(const CoverInstance &inst, const std::vector<bool> &covered) {
    int best = 0;
    for (size_t e = 0; e < inst.num_edges(); e++) {
        int unc = 0;
        for (size_t r = inst.edge_offset(e); r < inst.edge_offset(e + 1); r++) {
            if (r >= covered.size() || !covered[r]) {
                unc++;
            }
        }
        best = std::max(best, unc);
    }
    return best;
}

PauliSet greedy_cover(const CoverInstance &inst) {
    const size_t num_req = inst.num_requirements();
    const size_t num_cand = inst.num_candidates();
    std::vector<bool> covered(num_req, false);
    size_t remaining = num_req;
    std::vector<uint32_t> gain(num_cand, static_cast<uint32_t>(inst.num_edges()));
    std::vector<uint32_t> buf;
    std::vector<uint32_t> buf2;
    std::vector<PauliString> chosen;
    while (remaining > 0) {
        // Lowest id among maximal gains is the lexicographically first string.
        size_t pick = 0;
        for (size_t c = 1; c < num_cand; c++) {
            if (gain[c] > gain[pick]) {
                pick = c;
            }
        }
        if (gain[pick] == 0) {
            throw std::logic_error("greedy_cover: uncoverable requirement");
        }
        chosen.push_back(inst.candidate(pick));
        inst.covered_by(pick, buf);
        for (auto r : buf) {
            if (covered[r]) {
                continue;
            }
            covered[r] = true;
            remaining--;
            inst.covering(r, buf2);
            for (auto c : buf2) {
                gain[c]--;
            }
        }
    }
    return PauliSet(inst.num_qubits(), std::move(chosen));
}

namespace {

class BranchAndBound {
   public:
    BranchAndBound(const CoverInstance &inst, const SolveBudget &budget)
        : inst_(inst),
          budget_(budget),
          num_req_(inst.num_requirements()),
          num_edges_(inst.num_edges()),
          cover_count_(num_req_, 0),
          uncovered_on_edge_(num_edges_),
          available_(num_req_),
          excluded_(inst.num_candidates(), 0) {
        for (size_t e = 0; e < num_edges_; e++) {
            uncovered_on_edge_[e] = static_cast<int>(inst.edge_offset(e + 1) - inst.edge_offset(e));
        }
        uncovered_total_ = num_req_;
        std::vector<uint32_t> buf;
        for (size_t r = 0; r < num_req_; r++) {
            inst.covering(r, buf);
            available_[r] = static_cast<uint32_t>(buf.size());
        }
        // Slice (e, pos, a) counts uncovered requirements of edge e whose
        // vertex at position pos takes axis a.
        const auto &edges = inst.hypergraph().edges();
        incidences_.assign(inst.num_qubits(), {});
        size_t slices = 0;
        for (size_t e = 0; e < num_edges_; e++) {
            for (size_t pos = 0; pos < edges[e].size(); pos++) {
                incidences_[edges[e][pos]].push_back(static_cast<uint32_t>(slices + 3 * pos));
            }
            for (size_t r = inst.edge_offset(e); r < inst.edge_offset(e + 1); r++) {
                req_slice_offset_.push_back(static_cast<uint32_t>(req_slices_.size()));
                uint64_t local = r - inst.edge_offset(e);
                std::vector<uint32_t> digits(edges[e].size());
                for (size_t pos = edges[e].size(); pos-- > 0;) {
                    digits[pos] = static_cast<uint32_t>(slices + 3 * pos + local % 3);
                    local /= 3;
                }
                req_slices_.insert(req_slices_.end(), digits.begin(), digits.end());
            }
            slices += 3 * edges[e].size();
        }
        req_slice_offset_.push_back(static_cast<uint32_t>(req_slices_.size()));
        slice_uncovered_.assign(slices, 0);
        for (size_t r = 0; r < num_req_; r++) {
            for (uint32_t i = req_slice_offset_[r]; i < req_slice_offset_[r + 1]; i++) {
                slice_uncovered_[req_slices_[i]]++;
            }
        }
        start_ = std::chrono::steady_clock::now();
    }

    void set_incumbent(std::vector<uint32_t> ids) {
        best_ = std::move(ids);
        best_size_ = static_cast<int>(best_.size());
    }

    int root_lower_bound() const {
        return bound();
    }

    /// Returns false if the budget ran out.
    bool run(bool fix_all_x) {
        if (fix_all_x) {
            auto id = inst_.candidate_id(PauliString::constant(PauliAxis::X, inst_.num_qubits()));
            if (id) {
                include(static_cast<uint32_t>(*id));
                reduce_second_row_ = vertex_symmetric();
                search(1);
                uninclude(static_cast<uint32_t>(*id));
                return !aborted_;
            }
        }
        search(0);
        return !aborted_;
    }

    const std::vector<uint32_t> &best() const {
        return best_;
    }
    int best_size() const {
        return best_size_;
    }
    uint64_t nodes() const {
        return nodes_;
    }

   private:
    /// True when every edge has the same size k and all k-subsets are edges,
    /// so any qubit permutation maps the instance to itself.
    bool vertex_symmetric() const {
        const auto &edges = inst_.hypergraph().edges();
        if (edges.empty()) {
            return false;
        }
        const size_t n = inst_.num_qubits();
        const size_t k = edges.front().size();
        double subsets = 1;
        for (size_t i = 0; i < k; i++) {
            subsets = subsets * static_cast<double>(n - i) / static_cast<double>(i + 1);
        }
        for (const auto &e : edges) {
            if (e.size() != k) {
                return false;
            }
        }
        return static_cast<double>(edges.size()) == std::round(subsets);
    }

    /// With the all-X row fixed, permuting the qubits outside the branching
    /// edge and swapping Y and Z on any of them fixes both that row and the
    /// branching requirement. Every candidate is thereby equivalent to one whose
    /// outside qubits read X...XY...Y in increasing qubit order.
    bool canonical_second_row(uint32_t c, size_t edge) const {
        const auto &inside = inst_.hypergraph().edges()[edge];
        PauliString s = inst_.candidate(c);
        bool seen_y = false;
        for (size_t q = 0; q < inst_.num_qubits(); q++) {
            if (std::find(inside.begin(), inside.end(), static_cast<int>(q)) != inside.end()) {
                continue;
            }
            if (s[q] == PauliAxis::Z || (s[q] == PauliAxis::X && seen_y)) {
                return false;
            }
            seen_y = seen_y || s[q] == PauliAxis::Y;
        }
        return true;
    }

    void include(uint32_t c) {
        inst_.covered_by(c, scratch_);
        for (size_t e = 0; e < num_edges_; e++) {
            uint32_t r = scratch_[e];
            if (cover_count_[r]++ == 0) {
                uncovered_on_edge_[e]--;
                uncovered_total_--;
                for (uint32_t i = req_slice_offset_[r]; i < req_slice_offset_[r + 1]; i++) {
                    slice_uncovered_[req_slices_[i]]--;
                }
            }
        }
        chosen_.push_back(c);
    }

    void uninclude(uint32_t c) {
        inst_.covered_by(c, scratch_);
        for (size_t e = 0; e < num_edges_; e++) {
            uint32_t r = scratch_[e];
            if (--cover_count_[r] == 0) {
                uncovered_on_edge_[e]++;
                uncovered_total_++;
                for (uint32_t i = req_slice_offset_[r]; i < req_slice_offset_[r + 1]; i++) {
                    slice_uncovered_[req_slices_[i]]++;
                }
            }
        }
        chosen_.pop_back();
    }

    /// Settings still needed. Each setting gives vertex u one axis a, and the
    /// settings giving u axis a must cover every uncovered requirement with
    /// u = a on each edge through u, one per edge. Summing over a bounds the
    /// remainder at least as well as the per-edge count.
    int bound() const {
        int best = 0;
        for (const auto &inc : incidences_) {
            int sum = 0;
            for (int a = 0; a < 3; a++) {
                int m = 0;
                for (uint32_t base : inc) {
                    m = std::max(m, slice_uncovered_[base + a]);
                }
                sum += m;
            }
            best = std::max(best, sum);
        }
        return best;
    }

    void exclude(uint32_t c) {
        excluded_[c] = 1;
        inst_.covered_by(c, scratch_);
        for (auto r : scratch_) {
            available_[r]--;
        }
    }

    void unexclude(uint32_t c) {
        excluded_[c] = 0;
        inst_.covered_by(c, scratch_);
        for (auto r : scratch_) {
            available_[r]++;
        }
    }

    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) {
            return true;
        }
        if ((nodes_ & 1023) == 0) {
            auto elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed > budget_.max_time) {
                return true;
            }
        }
        return false;
    }

    void search(int depth) {
        if (aborted_) {
            return;
        }
        nodes_++;
        if (out_of_budget()) {
            aborted_ = true;
            return;
        }
        if (uncovered_total_ == 0) {
            if (depth < best_size_) {
                best_ = chosen_;
                best_size_ = depth;
            }
            return;
        }
        if (depth + bound() >= best_size_) {
            return;
        }

        size_t branch_req = SIZE_MAX;
        uint32_t fewest = UINT32_MAX;
        for (size_t r = 0; r < num_req_; r++) {
            if (cover_count_[r] == 0 && available_[r] < fewest) {
                fewest = available_[r];
                branch_req = r;
            }
        }
        if (fewest == 0) {
            return;
        }

        struct Child {
            uint32_t id;
            int gain;
        };
        std::vector<Child> children;
        std::vector<uint32_t> cands;
        inst_.covering(branch_req, cands);
        const bool reduce = reduce_second_row_ && depth == 1;
        const size_t branch_edge = reduce ? inst_.edge_of(branch_req) : 0;
        for (auto c : cands) {
            if (excluded_[c] || (reduce && !canonical_second_row(c, branch_edge))) {
                continue;
            }
            inst_.covered_by(c, scratch_);
            int gain = 0;
            int lb_after = 0;
            for (size_t e = 0; e < num_edges_; e++) {
                int unc = uncovered_on_edge_[e];
                if (cover_count_[scratch_[e]] == 0) {
                    gain++;
                    unc--;
                }
                lb_after = std::max(lb_after, unc);
            }
            children.push_back({c, depth + 1 + lb_after < best_size_ ? gain : -1});
        }
        std::stable_sort(children.begin(), children.end(), [](const Child &a, const Child &b) {
            return a.gain > b.gain;
        });

        std::vector<uint32_t> excluded_here;
        for (const auto &child : children) {
            if (child.gain >= 0 && !aborted_) {
                include(child.id);
                search(depth + 1);
                uninclude(child.id);
            }
            // Later siblings may assume this candidate is not used.
            exclude(child.id);
            excluded_here.push_back(child.id);
            if (aborted_) {
                break;
            }
        }
        for (auto c : excluded_here) {
            unexclude(c);
        }
    }

    const CoverInstance &inst_;
    SolveBudget budget_;
    size_t num_req_;
    size_t num_edges_;
    std::vector<uint32_t> cover_count_;
    std::vector<int> uncovered_on_edge_;
    size_t uncovered_total_ = 0;
    std::vector<uint32_t> available_;
    std::vector<uint8_t> excluded_;
    std::vector<uint32_t> chosen_;
    std::vector<uint32_t> best_;
    int best_size_ = INT32_MAX;
    uint64_t nodes_ = 0;
    bool aborted_ = false;
    bool reduce_second_row_ = false;
    std::vector<uint32_t> scratch_;
    std::vector<std::vector<uint32_t>> incidences_;  // per vertex: slice bases
    std::vector<uint32_t> req_slice_offset_;
    std::vector<uint32_t> req_slices_;
    std::vector<int> slice_uncovered_;
    std::chrono::steady_clock::time_point start_;
};

PauliSet ids_to_set(const CoverInstance &inst, std::vector<uint32_t> ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<PauliString> rows;
    for (auto id : ids) {
        rows.push_back(inst.candidate(id));
    }
    return PauliSet(inst.num_qubits(), std::move(rows));
}

std::vector<uint32_t> set_to_ids(const CoverInstance &inst, const PauliSet &set) {
    std::vector<uint32_t> ids;
    for (const auto &s : set.settings()) {
        auto id = inst.candidate_id(s);
        if (!id) {
            throw std::invalid_argument("incumbent string " + s.str() + " is not a candidate");
        }
        ids.push_back(static_cast<uint32_t>(*id));
    }
    return ids;
}

}  // namespace

SolveReport branch_and_bound(const CoverInstance &inst, const SolveBudget &budget,
                             const std::optional<PauliSet> &incumbent) {
    auto start = std::chrono::steady_clock::now();
    BranchAndBound bnb(inst, budget);
    const int root_lb = bnb.root_lower_bound();

    PauliSet seed = greedy_cover(inst);
    if (incumbent) {
        if (!verify_cover(*incumbent, inst.hypergraph()).complete) {
            throw std::invalid_argument("incumbent does not cover the instance");
        }
        if (incumbent->size() < seed.size()) {
            seed = *incumbent;
        }
    }
    bnb.set_incumbent(set_to_ids(inst, seed));

    SolveReport report;
    bool finished = true;
    if (bnb.best_size() > root_lb) {
        finished = bnb.run(inst.axis_symmetric());
    }
    report.solution = ids_to_set(inst, bnb.best());
    report.size = bnb.best_size();
    report.nodes_explored = bnb.nodes();
    report.budget_hit = !finished;
    report.optimal = finished;
    report.lower_bound = finished ? report.size : root_lb;
    report.wall_time = std::chrono::steady_clock::now() - start;
    return report;
}

std::string SolveReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["budget_hit"] = budget_hit;
    j["lower_bound"] = lower_bound;
    j["nodes_explored"] = nodes_explored;
    j["optimal"] = optimal;
    j["size"] = size;
    std::vector<std::string> rows;
    for (const auto &s : solution.settings()) {
        rows.push_back(s.str());
    }
    j["solution"] = rows;
    if (include_timing) {
        j["wall_time_seconds"] = wall_time.count();
    }
    return canonical_json(j);
}

std::optional<PauliSet> local_search_cover(const ConnectivityHypergraph &h, size_t rows, uint64_t seed,
                                           uint64_t max_steps) {
    const size_t n = h.n();
    const auto &edges = h.edges();
    if (rows == 0 || n == 0) {
        return std::nullopt;
    }
    std::vector<size_t> offset(1, 0);
    for (const auto &e : edges) {
        offset.push_back(offset.back() + pow3(e.size()));
    }
    std::vector<std::vector<size_t>> incident(n);
    for (size_t e = 0; e < edges.size(); e++) {
        for (int v : edges[e]) {
            incident[v].push_back(e);
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<uint8_t>> cell(rows, std::vector<uint8_t>(n));
    for (auto &row : cell) {
        for (auto &c : row) {
            c = static_cast<uint8_t>(rng() % 3);
        }
    }
    auto code = [&](const std::vector<uint8_t> &row, size_t e) {
        size_t c = 0;
        for (int v : edges[e]) {
            c = 3 * c + row[v];
        }
        return offset[e] + c;
    };
    std::vector<uint32_t> count(offset.back(), 0);
    for (const auto &row : cell) {
        for (size_t e = 0; e < edges.size(); e++) {
            count[code(row, e)]++;
        }
    }
    size_t uncovered = static_cast<size_t>(std::count(count.begin(), count.end(), 0u));

    std::vector<size_t> stamp(edges.size(), 0);
    size_t stamp_id = 0;
    std::vector<size_t> touched;
    // Change in the uncovered count if `row` is replaced by `next`.
    auto delta = [&](const std::vector<uint8_t> &row, const std::vector<uint8_t> &next, const VertexSubset &vs) {
        stamp_id++;
        touched.clear();
        for (int v : vs) {
            for (size_t e : incident[v]) {
                if (stamp[e] != stamp_id) {
                    stamp[e] = stamp_id;
                    touched.push_back(e);
                }
            }
        }
        long d = 0;
        for (size_t e : touched) {
            size_t before = code(row, e), after = code(next, e);
            if (before != after) {
                d += count[before] == 1;
                d -= count[after] == 0;
            }
        }
        return d;
    };
    auto apply = [&](size_t i, const std::vector<uint8_t> &next) {
        for (size_t e = 0; e < edges.size(); e++) {
            size_t before = code(cell[i], e), after = code(next, e);
            if (before != after) {
                uncovered += --count[before] == 0;
                uncovered -= count[after]++ == 0;
            }
        }
        cell[i] = next;
    };

    std::vector<std::vector<uint64_t>> tabu_until(rows, std::vector<uint64_t>(n, 0));
    const uint64_t tenure = std::max<uint64_t>(2, rows / 2);
    std::vector<uint8_t> next;
    std::vector<size_t> best_rows;
    for (uint64_t step = 1; step <= max_steps && uncovered > 0; step++) {
        size_t r;
        do {
            r = rng() % count.size();
        } while (count[r] != 0);
        size_t e = static_cast<size_t>(std::upper_bound(offset.begin(), offset.end(), r) - offset.begin()) - 1;
        const VertexSubset &vs = edges[e];
        std::vector<uint8_t> digits(vs.size());
        for (size_t i = vs.size(), c = r - offset[e]; i-- > 0; c /= 3) {
            digits[i] = static_cast<uint8_t>(c % 3);
        }
        long best = LONG_MAX;
        best_rows.clear();
        for (size_t i = 0; i < rows; i++) {
            next = cell[i];
            bool tabu = false;
            for (size_t j = 0; j < vs.size(); j++) {
                if (next[vs[j]] != digits[j] && tabu_until[i][vs[j]] > step) {
                    tabu = true;
                }
                next[vs[j]] = digits[j];
            }
            long d = delta(cell[i], next, vs);
            if (tabu && static_cast<long>(uncovered) + d > 0) {
                continue;
            }
            if (d < best) {
                best = d;
                best_rows.assign(1, i);
            } else if (d == best) {
                best_rows.push_back(i);
            }
        }
        size_t i = best_rows.empty() ? rng() % rows : best_rows[rng() % best_rows.size()];
        next = cell[i];
        for (size_t j = 0; j < vs.size(); j++) {
            if (next[vs[j]] != digits[j]) {
                tabu_until[i][vs[j]] = step + tenure;
            }
            next[vs[j]] = digits[j];
        }
        apply(i, next);
    }
    if (uncovered > 0) {
        return std::nullopt;
    }
    std::vector<PauliString> out;
    for (const auto &row : cell) {
        std::vector<PauliAxis> axes(n);
        for (size_t q = 0; q < n; q++) {
            axes[q] = static_cast<PauliAxis>(row[q]);
        }
        out.emplace_back(std::move(axes));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() != rows) {
        return std::nullopt;  // a repeated row means a smaller cover exists; the caller asks for it next
    }
    return PauliSet(n, std::move(out));
}

SolveReport solve_minimal_cover(const ConnectivityHypergraph &h, const SolveBudget &budget) {
    auto start = std::chrono::steady_clock::now();
    auto inst = CoverInstance::from_hypergraph(h);
    std::optional<PauliSet> seed;
    uint64_t extra_nodes = 0;
    const size_t k = h.max_edge_size();
    Colouring colouring = strong_chromatic_number(h);
    if (static_cast<size_t>(colouring.colours) < h.n() && static_cast<size_t>(colouring.colours) >= k) {
        SolveBudget half = budget;
        half.max_time = budget.max_time / 2;
        half.max_nodes = budget.max_nodes / 2;
        SolveReport base = solve_minimal_cover(complete_hypergraph(colouring.colours, k), half);
        extra_nodes = base.nodes_explored;
        seed = colouring_construction(h, base.solution, colouring);
    }
    {
        size_t best = greedy_cover(inst).size();
        if (seed) {
            best = std::min(best, seed->size());
        }
        const size_t floor = static_cast<size_t>(lower_bound(inst, std::vector<bool>(inst.num_requirements(), false)));
        for (size_t rows = best - 1; rows >= floor && rows > 0; rows--) {
            auto found = local_search_cover(h, rows, rows, kLocalSearchSteps);
            if (!found) {
                break;
            }
            seed = found;
        }
    }
    SolveBudget rest = budget;
    rest.max_time = budget.max_time - (std::chrono::steady_clock::now() - start);
    rest.max_nodes = budget.max_nodes - std::min(budget.max_nodes, extra_nodes);
    SolveReport report = branch_and_bound(inst, rest, seed);
    report.nodes_explored += extra_nodes;
    report.wall_time = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<PauliSet> minimal_pair_bases(size_t max_qubits, const SolveBudget &budget) {
    std::vector<PauliSet> out;
    for (size_t n = 2; n <= max_qubits; n++) {
        out.push_back(solve_minimal_cover(complete_hypergraph(n, 2), budget).solution);
    }
    return out;
}

std::string ilp_export(const CoverInstance &inst) {
    std::ostringstream out;
    auto var = [&](size_t id) { return "z_" + inst.candidate(id).str(); };
    out << "\\ Minimal Pauli cover: " << inst.num_candidates() << " candidates, " << inst.num_requirements()
        << " requirements\n";
    out << "Minimize\n obj:";
    size_t line_len = 5;
    for (size_t c = 0; c < inst.num_candidates(); c++) {
        std::string term = (c == 0 ? " " : " + ") + var(c);
        if (line_len + term.size() > 240) {
            out << "\n";
            line_len = 0;
        }
        out << term;
        line_len += term.size();
    }
    out << "\nSubject To\n";
    std::vector<uint32_t> buf;
    for (size_t r = 0; r < inst.num_requirements(); r++) {
        auto req = inst.requirement(r);
        std::string name = "c";
        for (int v : req.subset) {
            name += "_" + std::to_string(v);
        }
        name += "_";
        for (auto a : req.assignment) {
            name.push_back(axis_char(a));
        }
        out << " " << name << ":";
        line_len = name.size() + 2;
        inst.covering(r, buf);
        for (size_t i = 0; i < buf.size(); i++) {
            std::string term = (i == 0 ? " " : " + ") + var(buf[i]);
            if (line_len + term.size() > 240) {
                out << "\n";
                line_len = 0;
            }
            out << term;
            line_len += term.size();
        }
        out << " >= 1\n";
    }
    out << "Binary\n";
    for (size_t c = 0; c < inst.num_candidates(); c++) {
        out << " " << var(c) << "\n";
    }
    out << "End\n";
    return out.str();
}

void ilp_export(const CoverInstance &inst, const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << ilp_export(inst);
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace otomo
