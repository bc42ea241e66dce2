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


#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "otomo/cover_solver.h"
#include "otomo/marginal_design.h"

namespace otomo {
namespace {

/// Smallest number of `candidates` covering every requirement of h, by
/// trying all subsets of increasing size. Independent of CoverInstance.
int exhaustive_minimum(const ConnectivityHypergraph &h, const std::vector<PauliString> &candidates) {
    std::vector<Requirement> universe = build_universe(h);
    EXPECT_LE(universe.size(), 64u);
    const uint64_t full = universe.size() == 64 ? ~0ULL : (1ULL << universe.size()) - 1;
    std::vector<uint64_t> masks;
    for (const auto &c : candidates) {
        uint64_t m = 0;
        for (size_t r = 0; r < universe.size(); r++) {
            if (covers(c, universe[r])) {
                m |= 1ULL << r;
            }
        }
        masks.push_back(m);
    }
    std::function<bool(size_t, int, uint64_t)> search = [&](size_t start, int left, uint64_t got) {
        if (got == full) {
            return true;
        }
        if (left == 0) {
            return false;
        }
        for (size_t i = start; i < masks.size(); i++) {
            if (search(i + 1, left - 1, got | masks[i])) {
                return true;
            }
        }
        return false;
    };
    for (int size = 0; size <= static_cast<int>(candidates.size()); size++) {
        if (search(0, size, 0)) {
            return size;
        }
    }
    return -1;
}

TEST(CoverInstance, CandidateIndexing) {
    CoverInstance inst = CoverInstance::from_hypergraph(complete_hypergraph(3, 2));
    EXPECT_EQ(inst.num_candidates(), 27u);
    EXPECT_EQ(inst.num_requirements(), 27u);
    std::vector<uint32_t> reqs;
    for (size_t c = 0; c < inst.num_candidates(); c++) {
        inst.covered_by(c, reqs);
        ASSERT_EQ(reqs.size(), inst.num_edges());
        for (uint32_t r : reqs) {
            EXPECT_TRUE(covers(inst.candidate(c), inst.requirement(r)));
        }
        EXPECT_EQ(inst.candidate_id(inst.candidate(c)), c);
    }
    std::vector<uint32_t> cands;
    for (size_t r = 0; r < inst.num_requirements(); r++) {
        inst.covering(r, cands);
        EXPECT_EQ(cands.size(), 3u);
        EXPECT_TRUE(std::is_sorted(cands.begin(), cands.end()));
    }
    EXPECT_THROW(CoverInstance::from_hypergraph(complete_hypergraph(13, 2)), std::invalid_argument);
}

TEST(CoverInstance, ExplicitCandidatesMustCover) {
    PauliSet few = PauliSet::from_text("XX\nYY\n");
    EXPECT_THROW(CoverInstance::with_candidates(complete_hypergraph(2, 2), few), std::invalid_argument);
}

TEST(LowerBound, PerEdgeCounts) {
    auto none = [](const CoverInstance &i) { return std::vector<bool>(i.num_requirements(), false); };
    CoverInstance k6 = CoverInstance::from_hypergraph(complete_hypergraph(6, 2));
    EXPECT_EQ(lower_bound(k6, none(k6)), 9);
    CoverInstance g = CoverInstance::from_hypergraph(g7());
    EXPECT_EQ(lower_bound(g, none(g)), 9);
    EXPECT_EQ(lower_bound(g, std::vector<bool>(g.num_requirements(), true)), 0);
    CoverInstance ring = CoverInstance::from_hypergraph(ring_hypergraph(7, 3));
    EXPECT_EQ(lower_bound(ring, none(ring)), 27);
}

TEST(Greedy, ValidCoversWithinBounds) {
    CoverInstance k2 = CoverInstance::from_hypergraph(complete_hypergraph(2, 2));
    EXPECT_EQ(greedy_cover(k2).size(), 9u);
    PauliSet k4 = greedy_cover(CoverInstance::from_hypergraph(complete_hypergraph(4, 2)));
    EXPECT_TRUE(verify_cover(k4, complete_hypergraph(4, 2)).complete);
    EXPECT_GE(k4.size(), 9u);
    EXPECT_LE(k4.size(), 13u);
    PauliSet ring = greedy_cover(CoverInstance::from_hypergraph(ring_hypergraph(7, 3)));
    EXPECT_TRUE(verify_cover(ring, ring_hypergraph(7, 3)).complete);
    EXPECT_GE(ring.size(), 27u);
}

TEST(BranchAndBound, MatchesExhaustiveSearchOnSmallInstances) {
    std::vector<ConnectivityHypergraph> graphs = {complete_hypergraph(2, 2), complete_hypergraph(3, 2),
                                                  line_hypergraph(3, 2),     ConnectivityHypergraph(3, {{0, 2}}),
                                                  complete_hypergraph(3, 1), ConnectivityHypergraph(3, {{0}, {1, 2}})};
    for (const auto &h : graphs) {
        CoverInstance inst = CoverInstance::from_hypergraph(h);
        SolveReport r = branch_and_bound(inst, {});
        EXPECT_TRUE(r.optimal);
        EXPECT_TRUE(verify_cover(r.solution, h).complete);
        EXPECT_EQ(r.size, exhaustive_minimum(h, all_pauli_strings(h.n()).settings())) << h.to_json();
    }
}

TEST(BranchAndBound, MatchesExhaustiveSearchWithRestrictedCandidates) {
    std::mt19937_64 rng(11);
    const std::vector<ConnectivityHypergraph> graphs = {complete_hypergraph(3, 2), line_hypergraph(3, 2),
                                                        ConnectivityHypergraph(3, {{0, 1}, {2}})};
    int tested = 0;
    for (int trial = 0; trial < 60; trial++) {
        const auto &h = graphs[trial % graphs.size()];
        std::vector<PauliString> pool;
        const PauliSet all = all_pauli_strings(3);
        for (const auto &s : all.settings()) {
            if (rng() % 3 != 0) {
                pool.push_back(s);
            }
        }
        PauliSet candidates(3, pool);
        if (!verify_cover(candidates, h).complete) {
            continue;
        }
        tested++;
        CoverInstance inst = CoverInstance::with_candidates(h, candidates);
        SolveReport r = branch_and_bound(inst, {});
        ASSERT_TRUE(r.optimal);
        EXPECT_TRUE(verify_cover(r.solution, h).complete);
        for (const auto &s : r.solution.settings()) {
            EXPECT_NE(std::find(pool.begin(), pool.end(), s), pool.end());
        }
        EXPECT_EQ(r.size, exhaustive_minimum(h, pool));
    }
    EXPECT_GE(tested, 10);
}

TEST(BranchAndBound, KnownOptima) {
    struct Case {
        ConnectivityHypergraph h;
        int size;
    };
    for (const auto &c : std::vector<Case>{{complete_hypergraph(4, 2), 9},
                                          {complete_hypergraph(5, 2), 11},
                                          {ring_hypergraph(7, 3), 27},
                                          {complete_hypergraph(4, 3), 27}}) {
        SolveReport r = branch_and_bound(CoverInstance::from_hypergraph(c.h), {});
        EXPECT_TRUE(r.optimal);
        EXPECT_FALSE(r.budget_hit);
        EXPECT_EQ(r.size, c.size);
        EXPECT_EQ(r.lower_bound, c.size);
        EXPECT_TRUE(verify_cover(r.solution, c.h).complete);
    }
}

TEST(BranchAndBound, SymmetryReductionAgreesWithPlainSearch) {
    // Listing every string explicitly disables the symmetry shortcuts, so the
    // plain search serves as the reference for the reduced one.
    for (size_t n : {3, 4, 5}) {
        ConnectivityHypergraph h = complete_hypergraph(n, 2);
        const PauliSet all = all_pauli_strings(n);
        CoverInstance plain = CoverInstance::with_candidates(h, all);
        ASSERT_FALSE(plain.axis_symmetric());
        SolveReport reference = branch_and_bound(plain, {});
        SolveReport reduced = branch_and_bound(CoverInstance::from_hypergraph(h), {});
        ASSERT_TRUE(reference.optimal);
        ASSERT_TRUE(reduced.optimal);
        EXPECT_EQ(reduced.size, reference.size) << "n = " << n;
        EXPECT_LE(reduced.nodes_explored, reference.nodes_explored);
    }
}

TEST(BranchAndBound, BudgetKeepsIncumbent) {
    SolveBudget budget;
    budget.max_nodes = 10;
    SolveReport r = branch_and_bound(CoverInstance::from_hypergraph(complete_hypergraph(6, 2)), budget);
    EXPECT_TRUE(r.budget_hit);
    EXPECT_FALSE(r.optimal);
    EXPECT_TRUE(verify_cover(r.solution, complete_hypergraph(6, 2)).complete);
    EXPECT_GE(r.lower_bound, 9);
    EXPECT_LE(r.lower_bound, r.size);
}

TEST(BranchAndBound, AcceptsIncumbent) {
    CoverInstance inst = CoverInstance::from_hypergraph(complete_hypergraph(4, 2));
    SolveReport r = branch_and_bound(inst, {}, four_qubit_pair_set());
    EXPECT_EQ(r.size, 9);
    EXPECT_TRUE(r.optimal);
    EXPECT_THROW(branch_and_bound(inst, {}, PauliSet::from_text("XXXX\n")), std::invalid_argument);
}

TEST(BranchAndBound, ReportIsDeterministicWithoutTiming) {
    CoverInstance inst = CoverInstance::from_hypergraph(complete_hypergraph(5, 2));
    std::string a = branch_and_bound(inst, {}).to_json(false);
    std::string b = branch_and_bound(inst, {}).to_json(false);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("wall_time"), std::string::npos);
    EXPECT_NE(branch_and_bound(inst, {}).to_json(true).find("wall_time"), std::string::npos);
}

TEST(SolveMinimalCover, UsesColouringSeedForG7) {
    SolveBudget budget;
    budget.max_nodes = 1000;
    SolveReport r = solve_minimal_cover(g7(), budget);
    EXPECT_EQ(r.size, 11);
    EXPECT_TRUE(verify_cover(r.solution, g7()).complete);
}

struct LpCounts {
    size_t variables = 0;
    size_t constraints = 0;
};

LpCounts count_lp(const std::string &text) {
    LpCounts c;
    std::istringstream in(text);
    std::string line;
    bool binary = false;
    while (std::getline(in, line)) {
        if (line == "Binary") {
            binary = true;
        } else if (line == "End") {
            binary = false;
        } else if (binary) {
            c.variables++;
        }
        if (line.size() >= 5 && line.ends_with(">= 1")) {
            c.constraints++;
        }
    }
    return c;
}

TEST(IlpExport, VariableAndConstraintCounts) {
    for (auto [h, vars, cons] : std::vector<std::tuple<ConnectivityHypergraph, size_t, size_t>>{
             {complete_hypergraph(3, 2), 27, 27}, {complete_hypergraph(4, 2), 81, 54}, {line_hypergraph(3, 2), 27, 18}}) {
        std::string lp = ilp_export(CoverInstance::from_hypergraph(h));
        LpCounts c = count_lp(lp);
        EXPECT_EQ(c.variables, vars);
        EXPECT_EQ(c.constraints, cons);
        EXPECT_NE(lp.find("Minimize"), std::string::npos);
        EXPECT_NE(lp.find("Subject To"), std::string::npos);
    }
}

TEST(IlpExport, ConstraintListsCoveringStrings) {
    std::string lp = ilp_export(CoverInstance::from_hypergraph(complete_hypergraph(2, 2)));
    EXPECT_NE(lp.find(" c_0_1_XY: z_XY >= 1\n"), std::string::npos);
}

}  // namespace
}  // namespace otomo
