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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.
//
// OTOMO_PROOF_SECONDS overrides the two-hour budget of the long optimality
// proofs (criteria 2 and 4).

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "otomo/confidence.h"
#include "otomo/cover_solver.h"
#include "otomo/directions.h"
#include "otomo/marginal_design.h"
#include "otomo/measurement_map.h"
#include "otomo/parallel.h"
#include "otomo/quantum_state.h"
#include "otomo/tomography.h"

namespace {

using namespace otomo;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void check(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [failed]");
    }
};

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double proof_seconds() {
    if (const char *env = std::getenv("OTOMO_PROOF_SECONDS")) {
        return std::atof(env);
    }
    return 7200;
}

SolveBudget seconds(double s) {
    SolveBudget b;
    b.max_time = std::chrono::duration<double>(s);
    return b;
}

std::optional<PauliSet> six_qubit_cover;  // shared by criteria 2 and 10

Outcome exact_small() {
    Outcome o;
    for (auto [n, phi] : {std::pair{4, 9}, std::pair{5, 11}}) {
        auto start = Clock::now();
        ConnectivityHypergraph h = complete_hypergraph(n, 2);
        SolveReport r = solve_minimal_cover(h, seconds(600));
        double t = seconds_since(start);
        CoverReport check = verify_cover(r.solution, h);
        o.check(r.optimal && r.size == phi && t < 600 && check.complete && check.min_multiplicity >= 1,
                "phi2(" + std::to_string(n) + ")=" + std::to_string(r.size) + (r.optimal ? " proven" : " unproven") +
                    " in " + fmt("%.2f", t) + " s");
    }
    return o;
}

Outcome six_qubits() {
    Outcome o;
    ConnectivityHypergraph h = complete_hypergraph(6, 2);
    auto start = Clock::now();
    // The budget leaves headroom so the first answer arrives inside ten minutes.
    SolveReport first = solve_minimal_cover(h, seconds(std::min(300.0, proof_seconds())));
    double t_first = seconds_since(start);
    o.check(first.size == 12 && verify_cover(first.solution, h).complete && t_first < 600,
            "cover of size " + std::to_string(first.size) + " in " + fmt("%.1f", t_first) + " s");
    six_qubit_cover = first.solution;
    SolveReport proof = first;
    if (!first.optimal) {
        double left = std::max(0.0, proof_seconds() - t_first);
        proof = branch_and_bound(CoverInstance::from_hypergraph(h), seconds(left), first.solution);
    }
    double t_total = seconds_since(start);
    if (proof.optimal) {
        o.check(proof.size == 12, "optimality proven at " + std::to_string(proof.size) + " after " +
                                      fmt("%.0f", t_total) + " s, " + std::to_string(proof.nodes_explored) + " nodes");
    } else {
        o.check(proof.budget_hit && proof.size == 12 && proof.lower_bound >= 9,
                "budget_hit after " + fmt("%.0f", t_total) + " s with incumbent " + std::to_string(proof.size) +
                    ", lower bound " + std::to_string(proof.lower_bound));
    }
    return o;
}

Outcome hypergraph_exactness() {
    Outcome o;
    for (auto [name, h] : {std::pair{"ring(7,3)", ring_hypergraph(7, 3)},
                           std::pair{"complete(4,3)", complete_hypergraph(4, 3)}}) {
        auto start = Clock::now();
        CoverInstance inst = CoverInstance::from_hypergraph(h);
        int root = lower_bound(inst, std::vector<bool>(inst.num_requirements(), false));
        SolveReport r = branch_and_bound(inst, seconds(600));
        double t = seconds_since(start);
        o.check(r.optimal && r.size == 27 && root == 27 && t < 600 && verify_cover(r.solution, h).complete,
                std::string(name) + " = " + std::to_string(r.size) + ", root bound " + std::to_string(root) + ", " +
                    fmt("%.2f", t) + " s");
    }
    return o;
}

Outcome colouring() {
    Outcome o;
    PauliSet grid = colouring_construction(grid16(), four_qubit_pair_set());
    o.check(grid.size() == 9 && verify_cover(grid, grid16()).complete,
            "grid16 -> " + std::to_string(grid.size()) + " settings");
    SolveReport base = solve_minimal_cover(complete_hypergraph(5, 2), seconds(600));
    PauliSet g = colouring_construction(g7(), base.solution);
    o.check(base.size == 11 && g.size() == 11 && verify_cover(g, g7()).complete,
            "G7 via " + std::to_string(base.size) + "-setting base -> " + std::to_string(g.size()));
    auto start = Clock::now();
    SolveReport exact = branch_and_bound(CoverInstance::from_hypergraph(g7()), seconds(proof_seconds()), g);
    o.check(exact.optimal && exact.size == 11,
            std::string(exact.optimal ? "no 10-cover (proven)" : "proof unfinished") + " in " +
                fmt("%.0f", seconds_since(start)) + " s, " + std::to_string(exact.nodes_explored) + " nodes");
    return o;
}

Outcome recursive() {
    Outcome o;
    PauliSet three = solve_minimal_cover(complete_hypergraph(3, 2), seconds(60)).solution;
    PauliSet twelve = recursive_construction(three, four_qubit_pair_set());
    o.check(twelve.n() == 12 && twelve.size() == 17 && verify_cover(twelve, complete_hypergraph(12, 2)).complete,
            "9 x 9 -> " + std::to_string(twelve.size()) + " settings on " + std::to_string(twelve.n()) + " qubits");
    std::vector<PauliSet> bases = minimal_pair_bases(5, seconds(600));
    const std::map<int, int> phi = {{3, 9}, {4, 9}, {5, 11}};
    for (int n : {9, 12, 16, 20}) {
        PauliSet s = recursive_cover(n, bases);
        bool ok = verify_cover(s, complete_hypergraph(n, 2)).complete;
        std::string bounds;
        for (auto [alpha, value] : phi) {
            int levels = static_cast<int>(std::ceil(std::log(n) / std::log(alpha) - 1e-12));
            int bound = (value - 1) * levels + 1;
            ok = ok && static_cast<int>(s.size()) <= bound;
            bounds += (bounds.empty() ? "" : "/") + std::to_string(bound);
        }
        o.check(ok, "n=" + std::to_string(n) + ": " + std::to_string(s.size()) + " <= " + bounds);
    }
    return o;
}

Outcome sigma() {
    Outcome o;
    double pauli = sigma_max(all_pauli_pairs(), 2).sigma_max;
    o.check(std::abs(pauli - 5) <= 1e-9, "sigma_Pauli = " + fmt("%.12f", pauli));
    DirectionSet a1 = paper_table_a1();
    double s = sigma_max(a1, 2).sigma_max;
    o.check(std::abs(s - 7.78) <= 0.02, "Table A1 sigma_max = " + fmt("%.4f", s));
    double worst = 0;
    auto parts = paper_table_a1_partitions();
    for (size_t q = 0; q < a1.n(); q++) {
        for (const auto &t : parts[q]) {
            for (int i = 0; i < 3; i++) {
                for (int j = i + 1; j < 3; j++) {
                    worst = std::max(worst, std::abs(a1.vector(q, t[i]).dot(a1.vector(q, t[j]))));
                }
            }
        }
    }
    o.check(worst <= 1e-3, "largest |v.w| within triples " + fmt("%.2e", worst));
    return o;
}

Outcome confidence() {
    Outcome o;
    auto start = Clock::now();
    double a = confidence_radius({9437, 0.318}, 6.52);
    double b = confidence_radius({8088, 0.318}, 7.65);
    double t = seconds_since(start);
    o.check(std::abs(a - 0.172) <= 0.002, "eps(9437, 6.52) = " + fmt("%.5f", a));
    o.check(std::abs(b - 0.218) <= 0.002, "eps(8088, 7.65) = " + fmt("%.5f", b));
    o.check(t < 0.1, fmt("%.1e", t) + " s");
    return o;
}

Outcome sample_ratios() {
    Outcome o;
    for (auto [sigma, percent] : {std::pair{6.52, 70.0}, std::pair{7.65, 130.0}, std::pair{7.78, 140.0},
                                  std::pair{10.7, 360.0}}) {
        double r = sample_ratio(sigma, 5, 0.1, 0.05);
        double r2 = sample_ratio(sigma, 5, 0.1, 0.318);
        double extra = 100 * (r - 1);
        o.check(std::abs(extra - percent) <= 3.0,
                fmt("%.2f", sigma) + " -> " + fmt("%.2f", extra) + "% (table " + fmt("%.0f", percent) + "%)");
        o.check(std::abs(r - r2) <= 1e-6 * r, fmt("%.2f", sigma) + " delta-independent");
    }
    return o;
}

Outcome theorem_property() {
    Outcome o;
    auto start = Clock::now();
    int complete = 0;
    for (uint64_t seed = 0; seed < 200; seed++) {
        complete += completeness_check(sample_uniform_directions(6, 9, seed), 2, 1e-10).complete;
        complete += completeness_check(sample_uniform_directions(6, 27, 1000 + seed), 3, 1e-10).complete;
    }
    double t = seconds_since(start);
    o.check(complete == 400, std::to_string(complete) + "/400 complete (200 with k=2, 200 with k=3)");
    o.check(t < 60, fmt("%.2f", t) + " s");
    return o;
}

Outcome end_to_end() {
    Outcome o;
    auto start = Clock::now();
    const size_t threads = default_thread_count();
    DensityMatrix rho = dicke_state(6, 3);
    std::vector<VertexSubset> pairs = all_subsets(6, 2);
    if (!six_qubit_cover) {
        six_qubit_cover = solve_minimal_cover(complete_hypergraph(6, 2), seconds(600)).solution;
    }
    auto worst_fidelity = [&](const DirectionSet &ds, uint64_t seed) {
        CountsRecord rec = simulate_counts(rho, ds, 100000, seed, SamplingModel::kMultinomial);
        std::vector<double> f(pairs.size());
        parallel_for(pairs.size(), threads, [&](size_t i) {
            MleOptions opts;
            opts.seed = seed;
            ReconstructionResult r = mle_reconstruct(marginalize_counts(rec, pairs[i]), ds, std::nullopt, opts);
            f[i] = fidelity(r.estimate, partial_trace(rho.matrix(), pairs[i]));
        });
        return *std::min_element(f.begin(), f.end());
    };
    double pauli = worst_fidelity(pauli_to_directions(*six_qubit_cover), 1);
    o.check(six_qubit_cover->size() == 12 && pauli >= 0.99,
            std::to_string(six_qubit_cover->size()) + " Pauli settings: min fidelity " + fmt("%.5f", pauli));
    DirectionSet random = sample_uniform_directions(6, 9, 2024);
    double rnd = worst_fidelity(random, 2);
    o.check(rnd >= 0.98, "9 random directions: min fidelity " + fmt("%.5f", rnd));
    double worst_err = 0;
    for (const auto &s : pairs) {
        Eigen::MatrixXcd truth = partial_trace(rho.matrix(), s);
        Eigen::MatrixXd table(random.m(), 4);
        for (size_t a = 0; a < random.m(); a++) {
            table.row(a) = born_probabilities(truth, random, a, s).transpose();
        }
        ReconstructionResult r = linear_reconstruct(marginal_from_table(s, table), random);
        worst_err = std::max(worst_err, (r.estimate - truth).norm());
    }
    o.check(worst_err <= 1e-8, "exact-probability linear inversion error " + fmt("%.1e", worst_err));
    double t = seconds_since(start);
    o.check(t < 900, fmt("%.1f", t) + " s");
    return o;
}

/// |Σ_b ψ_b Π_q <±_q | b_q>|² for the X eigenbasis.
Eigen::VectorXd x_basis_oracle(const Eigen::VectorXcd &psi, int n) {
    const int d = 1 << n;
    Eigen::VectorXd p(d);
    for (int o = 0; o < d; o++) {
        std::complex<double> amp = 0;
        for (int b = 0; b < d; b++) {
            int sign = std::popcount(static_cast<unsigned>(o & b)) % 2 ? -1 : 1;
            amp += static_cast<double>(sign) * psi[b];
        }
        p[o] = std::norm(amp) / d;
    }
    return p;
}

Outcome characteristic_basis() {
    Outcome o;
    DensityMatrix rho = dicke_state(6, 3);
    Eigen::VectorXd z = born_probabilities(rho, pauli_to_directions(PauliSet::from_text("ZZZZZZ\n")), 0);
    int twenty = 0;
    double z_err = 0;
    for (Eigen::Index i = 0; i < z.size(); i++) {
        if (z[i] > 1e-12) {
            twenty++;
            z_err = std::max(z_err, std::abs(z[i] - 0.05));
        }
    }
    o.check(twenty == 20 && z_err <= 1e-12, std::to_string(twenty) + " Z outcomes of 1/20");
    Eigen::VectorXd x = born_probabilities(rho, pauli_to_directions(PauliSet::from_text("XXXXXX\n")), 0);
    double oracle_err = (x - x_basis_oracle(dicke_vector(6, 3), 6)).cwiseAbs().maxCoeff();
    o.check(std::abs(x[0] - 5.0 / 16) <= 1e-12 && std::abs(x[63] - 5.0 / 16) <= 1e-12,
            "p(++++++) = " + fmt("%.15f", x[0]) + ", p(------) = " + fmt("%.15f", x[63]));
    o.check(oracle_err <= 1e-12, "amplitude oracle deviation " + fmt("%.1e", oracle_err));
    return o;
}

int exhaustive_minimum(const ConnectivityHypergraph &h) {
    std::vector<Requirement> universe = build_universe(h);
    const uint64_t full = (uint64_t{1} << universe.size()) - 1;
    std::vector<uint64_t> masks;
    const PauliSet all = all_pauli_strings(h.n());
    for (const auto &s : all.settings()) {
        uint64_t m = 0;
        for (size_t r = 0; r < universe.size(); r++) {
            m |= static_cast<uint64_t>(covers(s, universe[r])) << r;
        }
        masks.push_back(m);
    }
    std::function<bool(size_t, int, uint64_t)> search = [&](size_t from, int left, uint64_t got) {
        if (got == full) {
            return true;
        }
        for (size_t i = from; left > 0 && i < masks.size(); i++) {
            if (search(i + 1, left - 1, got | masks[i])) {
                return true;
            }
        }
        return false;
    };
    int size = 0;
    while (!search(0, size, 0)) {
        size++;
    }
    return size;
}

double binomial(int n, int k) {
    return (k < 0 || k > n) ? 0.0 : std::round(std::tgamma(n + 1) / (std::tgamma(k + 1) * std::tgamma(n - k + 1)));
}

Outcome oracles() {
    Outcome o;
    bool cover_ok = true;
    std::string sizes;
    for (const auto &h : {complete_hypergraph(2, 2), complete_hypergraph(3, 2), line_hypergraph(3, 2)}) {
        SolveReport r = branch_and_bound(CoverInstance::from_hypergraph(h), seconds(600));
        int exact = exhaustive_minimum(h);
        cover_ok = cover_ok && r.optimal && r.size == exact;
        sizes += (sizes.empty() ? "" : ",") + std::to_string(r.size) + "=" + std::to_string(exact);
    }
    o.check(cover_ok, "branch and bound vs exhaustive " + sizes);

    double trace_err = 0;
    for (int n = 2; n <= 6; n++) {
        for (int m = 0; m <= n; m++) {
            Eigen::MatrixXcd rho = dicke_state(n, m).matrix();
            for (const auto &keep : all_subsets(n, 2)) {
                Eigen::MatrixXcd red = partial_trace(rho, keep);
                for (int x = 0; x < 4; x++) {
                    for (int y = 0; y < 4; y++) {
                        int wx = std::popcount(static_cast<unsigned>(x)), wy = std::popcount(static_cast<unsigned>(y));
                        double expected = wx == wy ? binomial(n - 2, m - wx) / binomial(n, m) : 0.0;
                        trace_err = std::max(trace_err, std::abs(red(x, y) - expected));
                    }
                }
            }
        }
    }
    o.check(trace_err <= 1e-12, "Dicke pair marginals vs counting " + fmt("%.1e", trace_err));

    DirectionSet ds = sample_uniform_directions(6, 9, 17);
    CountsRecord rec = simulate_counts(noise_state(0.7), ds, 20000, 3, SamplingModel::kMultinomial);
    MleCost cost(marginalize_counts(rec, {0, 3}), ds);
    std::mt19937_64 rng(99);
    std::normal_distribution<double> g;
    double worst = 0;
    for (int point = 0; point < 10; point++) {
        Eigen::VectorXd t(static_cast<Eigen::Index>(cost.num_params()));
        for (auto &v : t) {
            v = g(rng);
        }
        Eigen::VectorXd analytic = cost.gradient(t), numeric(t.size());
        for (Eigen::Index i = 0; i < t.size(); i++) {
            const double h = 1e-6 * std::max(1.0, std::abs(t[i]));
            Eigen::VectorXd a = t, b = t;
            a[i] += h;
            b[i] -= h;
            numeric[i] = (cost(a) - cost(b)) / (2 * h);
        }
        worst = std::max(worst, (analytic - numeric).norm() / numeric.norm());
    }
    o.check(worst <= 1e-4, "MLE gradient vs finite differences " + fmt("%.1e", worst));
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"exact optimality, small instances", exact_small},
        {"six-qubit pair cover", six_qubits},
        {"hypergraph exactness", hypergraph_exactness},
        {"colouring construction", colouring},
        {"recursive construction", recursive},
        {"sigma reproduction", sigma},
        {"confidence arithmetic", confidence},
        {"sample-ratio table", sample_ratios},
        {"random direction completeness", theorem_property},
        {"end-to-end simulation", end_to_end},
        {"characteristic-basis check", characteristic_basis},
        {"oracle equivalence", oracles},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::printf("criterion %2zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
