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

#include "otomo/hypergraph.h"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace otomo {

namespace {

bool is_subset(const VertexSubset &small, const VertexSubset &big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void for_each_subset(size_t n, size_t k, const std::function<void(const VertexSubset &)> &fn) {
    if (k > n) {
        return;
    }
    VertexSubset idx(k);
    for (size_t i = 0; i < k; i++) {
        idx[i] = static_cast<int>(i);
    }
    while (true) {
        fn(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == static_cast<int>(n - k + i - 1)) {
            i--;
        }
        if (i == 0) {
            return;
        }
        idx[i - 1]++;
        for (size_t j = i; j < k; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

ConnectivityHypergraph::ConnectivityHypergraph(size_t n, std::vector<VertexSubset> edges) : n_(n) {
    for (auto &e : edges) {
        if (e.empty()) {
            throw std::invalid_argument("hyperedges must contain at least one vertex");
        }
        std::sort(e.begin(), e.end());
        for (size_t i = 0; i < e.size(); i++) {
            if (e[i] < 0 || static_cast<size_t>(e[i]) >= n) {
                throw std::invalid_argument(
                    "vertex " + std::to_string(e[i]) + " out of range for n=" + std::to_string(n));
            }
            if (i > 0 && e[i] == e[i - 1]) {
                throw std::invalid_argument("vertex " + std::to_string(e[i]) + " repeated within an edge");
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Larger edges first so dominated edges can be checked against survivors only.
    std::vector<size_t> order(edges.size());
    for (size_t i = 0; i < order.size(); i++) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return edges[a].size() > edges[b].size();
    });
    std::vector<bool> keep(edges.size(), true);
    for (size_t oi = 0; oi < order.size(); oi++) {
        const auto &e = edges[order[oi]];
        for (size_t oj = 0; oj < oi; oj++) {
            const auto &f = edges[order[oj]];
            if (keep[order[oj]] && f.size() > e.size() && is_subset(e, f)) {
                keep[order[oi]] = false;
                break;
            }
        }
    }
    for (size_t i = 0; i < edges.size(); i++) {
        if (keep[i]) {
            edges_.push_back(std::move(edges[i]));
        }
    }
}

std::optional<size_t> ConnectivityHypergraph::uniform_edge_size() const {
    if (edges_.empty()) {
        return std::nullopt;
    }
    size_t k = edges_.front().size();
    for (const auto &e : edges_) {
        if (e.size() != k) {
            return std::nullopt;
        }
    }
    return k;
}

size_t ConnectivityHypergraph::max_edge_size() const {
    size_t k = 0;
    for (const auto &e : edges_) {
        k = std::max(k, e.size());
    }
    return k;
}

std::vector<std::vector<bool>> ConnectivityHypergraph::two_section() const {
    std::vector<std::vector<bool>> adj(n_, std::vector<bool>(n_, false));
    for (const auto &e : edges_) {
        for (size_t i = 0; i < e.size(); i++) {
            for (size_t j = i + 1; j < e.size(); j++) {
                adj[e[i]][e[j]] = true;
                adj[e[j]][e[i]] = true;
            }
        }
    }
    return adj;
}

std::string ConnectivityHypergraph::to_json() const {
    nlohmann::ordered_json j;
    j["edges"] = edges_;
    j["n"] = n_;
    return j.dump();
}

ConnectivityHypergraph ConnectivityHypergraph::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("hypergraph JSON: ") + ex.what());
    }
    if (!j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("hypergraph JSON needs \"n\" and \"edges\"");
    }
    auto n = j.at("n").get<long long>();
    if (n < 0) {
        throw std::invalid_argument("hypergraph JSON: negative n");
    }
    return ConnectivityHypergraph(static_cast<size_t>(n), j.at("edges").get<std::vector<VertexSubset>>());
}

ConnectivityHypergraph complete_hypergraph(size_t n, size_t k) {
    if (k == 0 || k > n) {
        throw std::invalid_argument("complete hypergraph needs 1 <= k <= n");
    }
    std::vector<VertexSubset> edges;
    for_each_subset(n, k, [&](const VertexSubset &s) {
        edges.push_back(s);
    });
    return ConnectivityHypergraph(n, std::move(edges));
}

ConnectivityHypergraph ring_hypergraph(size_t n, size_t k) {
    if (k == 0 || k > n) {
        throw std::invalid_argument("ring hypergraph needs 1 <= k <= n");
    }
    std::vector<VertexSubset> edges;
    for (size_t i = 0; i < n; i++) {
        VertexSubset e;
        for (size_t j = 0; j < k; j++) {
            e.push_back(static_cast<int>((i + j) % n));
        }
        edges.push_back(std::move(e));
    }
    return ConnectivityHypergraph(n, std::move(edges));
}

ConnectivityHypergraph line_hypergraph(size_t n, size_t k) {
    if (k == 0 || k > n) {
        throw std::invalid_argument("line hypergraph needs 1 <= k <= n");
    }
    std::vector<VertexSubset> edges;
    for (size_t i = 0; i + k <= n; i++) {
        VertexSubset e;
        for (size_t j = 0; j < k; j++) {
            e.push_back(static_cast<int>(i + j));
        }
        edges.push_back(std::move(e));
    }
    return ConnectivityHypergraph(n, std::move(edges));
}

ConnectivityHypergraph grid16() {
    std::vector<VertexSubset> edges;
    auto id = [](int r, int c) {
        return r * 4 + c;
    };
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            for (auto [dr, dc] : {std::pair{0, 1}, {1, 0}, {1, 1}, {1, -1}}) {
                int r2 = r + dr;
                int c2 = c + dc;
                if (r2 < 4 && c2 >= 0 && c2 < 4) {
                    edges.push_back({id(r, c), id(r2, c2)});
                }
            }
        }
    }
    return ConnectivityHypergraph(16, std::move(edges));
}

ConnectivityHypergraph g7() {
    std::vector<VertexSubset> edges = {{0, 1}};
    for (int i = 0; i < 5; i++) {
        edges.push_back({2 + i, 2 + (i + 1) % 5});
    }
    for (int a : {0, 1}) {
        for (int v = 2; v < 7; v++) {
            edges.push_back({a, v});
        }
    }
    return ConnectivityHypergraph(7, std::move(edges));
}

ConnectivityHypergraph preset_connectivity(std::string_view spec) {
    std::string s(spec);
    for (char &c : s) {
        if (c == '(' || c == ',' || c == ')') {
            c = ':';
        }
    }
    while (!s.empty() && s.back() == ':') {
        s.pop_back();
    }
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        auto pos = s.find(':', start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) {
            break;
        }
        start = pos + 1;
    }
    auto num = [&](size_t i) -> size_t {
        if (i >= parts.size()) {
            throw std::invalid_argument("preset '" + std::string(spec) + "' is missing a parameter");
        }
        try {
            size_t used = 0;
            long long v = std::stoll(parts[i], &used);
            if (used != parts[i].size() || v < 0) {
                throw std::invalid_argument("bad number");
            }
            return static_cast<size_t>(v);
        } catch (const std::exception &) {
            throw std::invalid_argument("preset '" + std::string(spec) + "' has a bad parameter");
        }
    };
    const auto &name = parts[0];
    if (name == "grid16" && parts.size() == 1) {
        return grid16();
    }
    if (name == "g7" && parts.size() == 1) {
        return g7();
    }
    if ((name == "complete" || name == "ring" || name == "line") && parts.size() == 3) {
        size_t n = num(1);
        size_t k = num(2);
        if (name == "complete") {
            return complete_hypergraph(n, k);
        }
        if (name == "ring") {
            return ring_hypergraph(n, k);
        }
        return line_hypergraph(n, k);
    }
    throw std::invalid_argument("unknown connectivity preset '" + std::string(spec) + "'");
}

int clique_number(const ConnectivityHypergraph &h) {
    if (h.n() > 32) {
        throw std::invalid_argument("clique_number: n > 32 exceeds the exact search limit");
    }
    auto k_opt = h.uniform_edge_size();
    if (!k_opt) {
        if (h.edges().empty()) {
            return 0;
        }
        throw std::invalid_argument("clique_number: edge sizes are not uniform");
    }
    const size_t k = *k_opt;
    std::set<VertexSubset> edge_set(h.edges().begin(), h.edges().end());
    int n = static_cast<int>(h.n());

    // Adding v to a clique S (all k-subsets are edges) keeps it a clique iff
    // every (k-1)-subset of S together with v is an edge.
    VertexSubset current;
    int best = 0;
    auto extends = [&](int v) {
        if (current.size() + 1 < k) {
            return true;
        }
        bool ok = true;
        for_each_subset(current.size(), k - 1, [&](const VertexSubset &idx) {
            if (!ok) {
                return;
            }
            VertexSubset e;
            for (int i : idx) {
                e.push_back(current[i]);
            }
            e.push_back(v);
            ok = edge_set.count(e) > 0;
        });
        return ok;
    };
    std::function<void(int)> grow = [&](int next) {
        if (current.size() >= k) {
            best = std::max(best, static_cast<int>(current.size()));
        }
        if (static_cast<int>(current.size()) + (n - next) <= best) {
            return;
        }
        for (int v = next; v < n; v++) {
            if (extends(v)) {
                current.push_back(v);
                grow(v + 1);
                current.pop_back();
            }
        }
    };
    grow(0);
    // Before any k-set is complete, nothing counts; a clique needs at least one edge.
    return best;
}

namespace {

int graph_clique_number(const std::vector<std::vector<bool>> &adj) {
    int n = static_cast<int>(adj.size());
    int best = n > 0 ? 1 : 0;
    std::vector<int> current;
    std::function<void(std::vector<int>)> grow = [&](std::vector<int> cand) {
        best = std::max(best, static_cast<int>(current.size()));
        if (current.size() + cand.size() <= static_cast<size_t>(best)) {
            return;
        }
        while (!cand.empty()) {
            if (current.size() + cand.size() <= static_cast<size_t>(best)) {
                return;
            }
            int v = cand.front();
            cand.erase(cand.begin());
            std::vector<int> next;
            for (int u : cand) {
                if (adj[v][u]) {
                    next.push_back(u);
                }
            }
            current.push_back(v);
            grow(next);
            current.pop_back();
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; i++) {
        all[i] = i;
    }
    grow(all);
    return best;
}

std::vector<int> dsatur_greedy(const std::vector<std::vector<bool>> &adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> colour(n, -1);
    for (int step = 0; step < n; step++) {
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < n; v++) {
            if (colour[v] >= 0) {
                continue;
            }
            std::set<int> seen;
            int deg = 0;
            for (int u = 0; u < n; u++) {
                if (adj[v][u]) {
                    deg++;
                    if (colour[u] >= 0) {
                        seen.insert(colour[u]);
                    }
                }
            }
            int sat = static_cast<int>(seen.size());
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<bool> used(n + 1, false);
        for (int u = 0; u < n; u++) {
            if (adj[pick][u] && colour[u] >= 0) {
                used[colour[u]] = true;
            }
        }
        int c = 0;
        while (used[c]) {
            c++;
        }
        colour[pick] = c;
    }
    return colour;
}

bool colour_with(const std::vector<std::vector<bool>> &adj, int k, std::vector<int> &colour) {
    int n = static_cast<int>(adj.size());
    std::fill(colour.begin(), colour.end(), -1);
    std::function<bool(int)> place = [&](int placed) -> bool {
        if (placed == n) {
            return true;
        }
        // DSATUR choice: uncoloured vertex with most distinct neighbour colours.
        int pick = -1;
        int pick_sat = -1;
        for (int v = 0; v < n; v++) {
            if (colour[v] >= 0) {
                continue;
            }
            uint64_t mask = 0;
            for (int u = 0; u < n; u++) {
                if (adj[v][u] && colour[u] >= 0) {
                    mask |= uint64_t{1} << colour[u];
                }
            }
            int sat = __builtin_popcountll(mask);
            if (sat > pick_sat) {
                pick = v;
                pick_sat = sat;
            }
        }
        int max_used = -1;
        for (int v = 0; v < n; v++) {
            max_used = std::max(max_used, colour[v]);
        }
        for (int c = 0; c < k && c <= max_used + 1; c++) {
            bool ok = true;
            for (int u = 0; u < n && ok; u++) {
                if (adj[pick][u] && colour[u] == c) {
                    ok = false;
                }
            }
            if (!ok) {
                continue;
            }
            colour[pick] = c;
            if (place(placed + 1)) {
                return true;
            }
            colour[pick] = -1;
        }
        return false;
    };
    return place(0);
}

}  // namespace

Colouring strong_chromatic_number(const ConnectivityHypergraph &h) {
    auto adj = h.two_section();
    int n = static_cast<int>(h.n());
    Colouring result;
    if (n == 0) {
        result.exact = true;
        return result;
    }
    auto greedy = dsatur_greedy(adj);
    int greedy_k = *std::max_element(greedy.begin(), greedy.end()) + 1;
    if (n > 20) {
        result.colours = greedy_k;
        result.colour_of = greedy;
        result.exact = false;
        return result;
    }
    int lower = graph_clique_number(adj);
    std::vector<int> colour(n);
    for (int k = lower; k < greedy_k; k++) {
        if (colour_with(adj, k, colour)) {
            result.colours = k;
            result.colour_of = colour;
            result.exact = true;
            return result;
        }
    }
    result.colours = greedy_k;
    result.colour_of = greedy;
    result.exact = true;
    return result;
}

}  // namespace otomo
