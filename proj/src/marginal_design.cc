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

#include "otomo/marginal_design.h"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace otomo {

namespace {

uint64_t pow3(size_t k) {
    uint64_t p = 1;
    for (size_t i = 0; i < k; i++) {
        p *= 3;
    }
    return p;
}

// Base-3 code of s restricted to the subset, first vertex most significant.
uint64_t restricted_code(const PauliString &s, const VertexSubset &subset) {
    uint64_t c = 0;
    for (int v : subset) {
        c = c * 3 + static_cast<uint64_t>(s[v]);
    }
    return c;
}

std::optional<PauliAxis> constant_axis(const PauliString &s) {
    if (s.size() == 0) {
        return std::nullopt;
    }
    for (size_t i = 1; i < s.size(); i++) {
        if (s[i] != s[0]) {
            return std::nullopt;
        }
    }
    return s[0];
}

// Per-qubit relabelling swapping row[q] with X on every qubit q.
AxisRelabelling make_row_all_x(const PauliString &row) {
    AxisRelabelling perm(row.size());
    for (size_t q = 0; q < row.size(); q++) {
        perm[q] = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};
        auto a = static_cast<int>(row[q]);
        std::swap(perm[q][0], perm[q][a]);
    }
    return perm;
}

int ceil_log(int base, int n) {
    int t = 0;
    long long p = 1;
    while (p < n) {
        p *= base;
        t++;
    }
    return t;
}

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
    }
    return r;
}

struct Bound {
    int value;
    std::string source;
};

int lower_complete(int n, int k, std::vector<std::string> *sources) {
    int best = static_cast<int>(pow3(k));
    std::string src = "3^k";
    for (int m = k; m <= n; m++) {
        if (auto v = known_phi(m, k); v && *v > best) {
            best = *v;
            src = "table phi_" + std::to_string(k) + "(" + std::to_string(m) + ")";
        }
    }
    if (sources) {
        sources->push_back("lower: " + src);
    }
    return best;
}

int upper_complete(int n, int k, std::vector<std::string> *sources);

std::vector<Bound> upper_candidates(int n, int k) {
    std::vector<Bound> out;
    if (auto v = known_phi(n, k)) {
        out.push_back({*v, "table"});
    }
    for (int m = n + 1; m <= 20; m++) {
        if (auto v = known_phi(m, k)) {
            out.push_back({*v, "table phi_" + std::to_string(k) + "(" + std::to_string(m) + ") by monotonicity"});
            break;
        }
    }
    if (k == 2 && n >= 2) {
        out.push_back({6 * ceil_log(3, n) + 3, "de Caen 6*ceil(log3 n)+3"});
        for (int alpha = 2; alpha <= 20; alpha++) {
            auto phi_alpha = known_phi(alpha, 2);
            if (!phi_alpha || alpha >= n) {
                continue;
            }
            out.push_back(
                {(*phi_alpha - 1) * ceil_log(alpha, n) + 1, "recursion alpha=" + std::to_string(alpha)});
        }
    }
    if (k == 3 && n > 6) {
        int m = (n + 1) / 2;
        out.push_back({upper_complete(m, 3, nullptr) + 2 * upper_complete(m, 2, nullptr),
                       "doubling phi_3(2m) <= phi_3(m) + 2 phi_2(m), m=" + std::to_string(m)});
    }
    long long naive = static_cast<long long>(pow3(k)) * binomial(n, k);
    if (naive < std::numeric_limits<int>::max()) {
        out.push_back({static_cast<int>(naive), "naive 3^k C(n,k)"});
    }
    if (n <= 19) {
        out.push_back({static_cast<int>(pow3(n)), "all 3^n strings"});
    }
    return out;
}

int upper_complete(int n, int k, std::vector<std::string> *sources) {
    auto cands = upper_candidates(n, k);
    Bound best{std::numeric_limits<int>::max(), "none"};
    for (const auto &b : cands) {
        if (b.value < best.value) {
            best = b;
        }
    }
    if (sources) {
        sources->push_back("upper: " + best.source);
    }
    return best.value;
}

}  // namespace

std::string Requirement::str() const {
    std::string s = "{";
    for (size_t i = 0; i < subset.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(subset[i]);
    }
    s += "}:";
    for (auto a : assignment) {
        s.push_back(axis_char(a));
    }
    return s;
}

std::vector<Requirement> build_universe(const ConnectivityHypergraph &h) {
    std::vector<Requirement> out;
    for (const auto &e : h.edges()) {
        uint64_t total = pow3(e.size());
        for (uint64_t c = 0; c < total; c++) {
            auto s = PauliString::from_code(c, e.size());
            out.push_back({e, std::vector<PauliAxis>(s.axes().begin(), s.axes().end())});
        }
    }
    return out;
}

bool covers(const PauliString &s, const Requirement &r) {
    for (size_t i = 0; i < r.subset.size(); i++) {
        if (static_cast<size_t>(r.subset[i]) >= s.size() || s[r.subset[i]] != r.assignment[i]) {
            return false;
        }
    }
    return true;
}

CoverReport verify_cover(const PauliSet &set, const ConnectivityHypergraph &h) {
    if (set.n() != h.n()) {
        throw std::invalid_argument(
            "verify_cover: set acts on " + std::to_string(set.n()) + " qubits but the hypergraph has " +
            std::to_string(h.n()));
    }
    CoverReport report;
    report.min_multiplicity = std::numeric_limits<size_t>::max();
    for (const auto &e : h.edges()) {
        std::vector<size_t> count(pow3(e.size()), 0);
        for (const auto &s : set.settings()) {
            count[restricted_code(s, e)]++;
        }
        for (uint64_t c = 0; c < count.size(); c++) {
            report.min_multiplicity = std::min(report.min_multiplicity, count[c]);
            report.max_multiplicity = std::max(report.max_multiplicity, count[c]);
            if (count[c] == 0) {
                auto s = PauliString::from_code(c, e.size());
                report.missing.push_back({e, std::vector<PauliAxis>(s.axes().begin(), s.axes().end())});
            }
        }
    }
    if (h.edges().empty()) {
        report.min_multiplicity = 0;
    }
    report.complete = report.missing.empty();
    return report;
}

PauliSet colouring_construction(const ConnectivityHypergraph &h, const PauliSet &base) {
    return colouring_construction(h, base, strong_chromatic_number(h));
}

PauliSet colouring_construction(const ConnectivityHypergraph &h, const PauliSet &base, const Colouring &colouring) {
    if (colouring.colour_of.size() != h.n()) {
        throw std::invalid_argument("colouring does not match the hypergraph");
    }
    if (static_cast<size_t>(colouring.colours) > base.n()) {
        throw std::invalid_argument(
            "base acts on " + std::to_string(base.n()) + " qubits but the colouring uses " +
            std::to_string(colouring.colours) + " colours");
    }
    size_t k = std::max<size_t>(h.max_edge_size(), 1);
    if (k <= base.n() && !verify_cover(base, complete_hypergraph(base.n(), k)).complete) {
        throw std::invalid_argument("base set does not cover all " + std::to_string(k) + "-subsets of its qubits");
    }
    std::vector<PauliString> rows;
    std::set<PauliString> seen;
    for (const auto &b : base.settings()) {
        std::vector<PauliAxis> axes(h.n());
        for (size_t i = 0; i < h.n(); i++) {
            axes[i] = b[colouring.colour_of[i]];
        }
        PauliString row(std::move(axes));
        // Rows can only collide when fewer colours than base columns are used.
        if (seen.insert(row).second) {
            rows.push_back(std::move(row));
        }
    }
    return PauliSet(h.n(), std::move(rows));
}

PauliSet recursive_construction(const PauliSet &a_in, const PauliSet &b_in, RecursiveOptions options) {
    for (const auto *p : {&a_in, &b_in}) {
        if (p->n() < 2 || !verify_cover(*p, complete_hypergraph(p->n(), 2)).complete) {
            throw std::invalid_argument("recursive_construction: inputs must cover all pairs of their qubits");
        }
    }
    PauliSet a = a_in;
    PauliSet b = b_in;

    std::optional<PauliAxis> shared;
    for (auto c : kAllAxes) {
        auto has = [&](const PauliSet &s) {
            return std::any_of(s.settings().begin(), s.settings().end(), [&](const PauliString &r) {
                return constant_axis(r) == c;
            });
        };
        if (has(a) && has(b)) {
            shared = c;
            break;
        }
    }
    if (!options.merge) {
        shared.reset();
    } else if (!shared && options.relabel) {
        a = relabel(a, make_row_all_x(*std::min_element(a.settings().begin(), a.settings().end())));
        b = relabel(b, make_row_all_x(*std::min_element(b.settings().begin(), b.settings().end())));
        shared = PauliAxis::X;
    }

    const size_t n1 = a.n();
    const size_t n2 = b.n();
    std::vector<PauliString> rows;
    for (const auto &r : a.settings()) {
        std::vector<PauliAxis> axes(n1 * n2);
        for (size_t x = 0; x < n2; x++) {
            for (size_t z = 0; z < n1; z++) {
                axes[x * n1 + z] = r[z];
            }
        }
        rows.emplace_back(std::move(axes));
    }
    for (const auto &r : b.settings()) {
        if (shared && constant_axis(r) == shared) {
            continue;
        }
        std::vector<PauliAxis> axes(n1 * n2);
        for (size_t x = 0; x < n2; x++) {
            for (size_t z = 0; z < n1; z++) {
                axes[x * n1 + z] = r[x];
            }
        }
        PauliString row(std::move(axes));
        // Other constant rows present in both inputs coincide as well.
        if (std::find(rows.begin(), rows.end(), row) == rows.end()) {
            rows.push_back(std::move(row));
        }
    }
    return PauliSet(n1 * n2, std::move(rows));
}

PauliSet restrict_qubits(const PauliSet &set, size_t n) {
    if (n > set.n()) {
        throw std::invalid_argument("cannot restrict to more qubits than the set has");
    }
    std::vector<PauliString> rows;
    for (const auto &r : set.settings()) {
        PauliString cut(std::vector<PauliAxis>(r.axes().begin(), r.axes().begin() + static_cast<std::ptrdiff_t>(n)));
        if (std::find(rows.begin(), rows.end(), cut) == rows.end()) {
            rows.push_back(std::move(cut));
        }
    }
    return PauliSet(n, std::move(rows));
}

PauliSet recursive_cover(size_t n, const std::vector<PauliSet> &bases) {
    std::vector<size_t> usable;
    for (size_t i = 0; i < bases.size(); i++) {
        if (bases[i].n() >= 2) {
            usable.push_back(i);
        }
    }
    if (usable.empty()) {
        throw std::invalid_argument("recursive_cover needs a base on at least two qubits");
    }
    if (n < 2) {
        throw std::invalid_argument("recursive_cover needs n >= 2");
    }
    // Depth-first over non-decreasing factor indices; rows = Σ(m_i - 1) + 1.
    std::vector<size_t> best_factors;
    size_t best_rows = SIZE_MAX;
    std::vector<size_t> factors;
    auto search = [&](auto &&self, size_t first, size_t product, size_t rows) -> void {
        if (rows >= best_rows) {
            return;
        }
        if (product >= n) {
            best_rows = rows;
            best_factors = factors;
            return;
        }
        for (size_t u = first; u < usable.size(); u++) {
            const auto &b = bases[usable[u]];
            factors.push_back(usable[u]);
            self(self, u, product * b.n(), factors.size() == 1 ? b.size() : rows + b.size() - 1);
            factors.pop_back();
        }
    };
    search(search, 0, 1, 0);
    PauliSet out = bases[best_factors[0]];
    for (size_t i = 1; i < best_factors.size(); i++) {
        out = recursive_construction(out, bases[best_factors[i]]);
    }
    return restrict_qubits(out, n);
}

std::optional<int> known_phi(int n, int k) {
    if (k < 1 || n < k) {
        return std::nullopt;
    }
    if (k == 1) {
        return 3;
    }
    if (n == k || n == k + 1) {
        return static_cast<int>(pow3(k));
    }
    if (k == 2) {
        if (n <= 4) {
            return 9;
        }
        if (n == 5) {
            return 11;
        }
        if (n <= 7) {
            return 12;
        }
        if (n <= 9) {
            return 13;
        }
        if (n == 10) {
            return 14;
        }
        if (n <= 20) {
            return 15;
        }
    }
    if (k == 3) {
        if (n <= 4) {
            return 27;
        }
        if (n <= 6) {
            return 33;
        }
    }
    return std::nullopt;
}

PhiBounds phi_bounds(int n, int k, const ConnectivityHypergraph *g) {
    if (k < 1 || n < k) {
        throw std::invalid_argument("phi_bounds needs k >= 1 and n >= k");
    }
    PhiBounds out;
    if (!g) {
        out.lower = lower_complete(n, k, &out.sources);
        out.upper = upper_complete(n, k, &out.sources);
    } else {
        // A subgraph instance is at most as hard as the complete one on n qubits,
        // and at least as hard as its largest complete sub-hypergraph.
        out.lower = static_cast<int>(pow3(k));
        out.sources.push_back("lower: 3^k");
        if (g->uniform_edge_size() == static_cast<size_t>(k) && g->n() <= 32) {
            int omega = clique_number(*g);
            if (omega >= k) {
                int w = lower_complete(omega, k, nullptr);
                if (w > out.lower) {
                    out.lower = w;
                    out.sources.push_back("lower: clique number " + std::to_string(omega));
                }
            }
        }
        out.upper = upper_complete(n, k, &out.sources);
        auto col = strong_chromatic_number(*g);
        if (col.colours >= k) {
            int u = upper_complete(col.colours, k, nullptr);
            if (u < out.upper) {
                out.upper = u;
                out.sources.push_back("upper: colouring with " + std::to_string(col.colours) + " colours");
            }
        } else if (!g->edges().empty() && col.colours > 0) {
            out.upper = std::min(out.upper, static_cast<int>(pow3(k)));
        }
    }
    out.exact = out.lower == out.upper;
    return out;
}

}  // namespace otomo
