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

#include <cmath>

#include "otomo/cover_solver.h"
#include "otomo/marginal_design.h"

namespace otomo {
namespace {

PauliSet main_text_set() {
    return PauliSet::from_text("XXXX\nZYYX\nYZZX\nYYXY\nXZYY\nZXZY\nZZXZ\nYXYZ\nXYZZ\n");
}

TEST(Universe, Sizes) {
    EXPECT_EQ(build_universe(line_hypergraph(3, 2)).size(), 18u);
    EXPECT_EQ(build_universe(complete_hypergraph(2, 2)).size(), 9u);
    EXPECT_EQ(build_universe(ring_hypergraph(7, 3)).size(), 189u);
}

TEST(Covers, RestrictionMatches) {
    PauliString s = PauliString::parse("XYZZ");
    EXPECT_TRUE(covers(s, {{0, 1}, {PauliAxis::X, PauliAxis::Y}}));
    EXPECT_FALSE(covers(s, {{0, 1}, {PauliAxis::X, PauliAxis::Z}}));
    EXPECT_TRUE(covers(PauliString::parse("ZYYX"), {{2, 3}, {PauliAxis::Y, PauliAxis::X}}));
}

TEST(VerifyCover, MainTextSetCoversEveryPairOnce) {
    CoverReport r = verify_cover(main_text_set(), complete_hypergraph(4, 2));
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.min_multiplicity, 1u);
    EXPECT_EQ(r.max_multiplicity, 1u);
}

TEST(VerifyCover, RemovingAllXLosesXX) {
    PauliSet full = main_text_set();
    std::vector<PauliString> rows(full.settings().begin() + 1, full.settings().end());
    CoverReport r = verify_cover(PauliSet(4, rows), complete_hypergraph(4, 2));
    EXPECT_FALSE(r.complete);
    EXPECT_EQ(r.min_multiplicity, 0u);
    Requirement xx{{0, 1}, {PauliAxis::X, PauliAxis::X}};
    EXPECT_NE(std::find(r.missing.begin(), r.missing.end(), xx), r.missing.end());
}

TEST(VerifyCover, AllStringsHaveUniformMultiplicity) {
    for (size_t n = 2; n <= 5; n++) {
        for (size_t k = 1; k <= std::min<size_t>(n, 3); k++) {
            CoverReport r = verify_cover(all_pauli_strings(n), complete_hypergraph(n, k));
            EXPECT_TRUE(r.complete);
            size_t expected = static_cast<size_t>(std::pow(3, n - k));
            EXPECT_EQ(r.min_multiplicity, expected);
            EXPECT_EQ(r.max_multiplicity, expected);
        }
    }
}

TEST(VerifyCover, RejectsWidthMismatch) {
    EXPECT_THROW(verify_cover(all_pauli_pairs(), complete_hypergraph(3, 2)), std::invalid_argument);
}

TEST(Colouring, Grid16FromFourQubitBase) {
    PauliSet out = colouring_construction(grid16(), four_qubit_pair_set());
    EXPECT_EQ(out.size(), 9u);
    EXPECT_EQ(out.n(), 16u);
    EXPECT_TRUE(verify_cover(out, grid16()).complete);
}

TEST(Colouring, G7FromElevenSettingFiveQubitBase) {
    SolveReport base = solve_minimal_cover(complete_hypergraph(5, 2), {});
    ASSERT_EQ(base.size, 11);
    PauliSet out = colouring_construction(g7(), base.solution);
    EXPECT_EQ(out.size(), 11u);
    EXPECT_TRUE(verify_cover(out, g7()).complete);
}

TEST(Colouring, PathFromTwoQubitBase) {
    ConnectivityHypergraph path = line_hypergraph(50, 2);
    PauliSet out = colouring_construction(path, all_pauli_pairs());
    EXPECT_EQ(out.size(), 9u);
    EXPECT_TRUE(verify_cover(out, path).complete);
}

TEST(Colouring, ThreeUniformRing) {
    SolveReport base = solve_minimal_cover(complete_hypergraph(4, 3), {});
    PauliSet out = colouring_construction(ring_hypergraph(7, 3), base.solution);
    EXPECT_TRUE(verify_cover(out, ring_hypergraph(7, 3)).complete);
}

TEST(Recursive, ThreeTimesFourGivesSeventeen) {
    PauliSet a = solve_minimal_cover(complete_hypergraph(3, 2), {}).solution;
    PauliSet b = four_qubit_pair_set();
    ASSERT_EQ(a.size(), 9u);
    PauliSet out = recursive_construction(a, b);
    EXPECT_EQ(out.n(), 12u);
    EXPECT_EQ(out.size(), 17u);
    EXPECT_TRUE(verify_cover(out, complete_hypergraph(12, 2)).complete);
}

TEST(Recursive, UnmergedVariantHasEighteenRows) {
    PauliSet a = solve_minimal_cover(complete_hypergraph(3, 2), {}).solution;
    PauliSet out = recursive_construction(a, four_qubit_pair_set(), {.relabel = true, .merge = false});
    EXPECT_EQ(out.size(), 18u);
    EXPECT_TRUE(verify_cover(out, complete_hypergraph(12, 2)).complete);
}

TEST(Recursive, TwoQubitBasesShareAllConstantRows) {
    // Both blocks contain XXXX, YYYY and ZZZZ; each is kept once (9 + 9 - 3).
    PauliSet out = recursive_construction(all_pauli_pairs(), all_pauli_pairs());
    EXPECT_EQ(out.n(), 4u);
    EXPECT_EQ(out.size(), 15u);
    EXPECT_TRUE(verify_cover(out, complete_hypergraph(4, 2)).complete);
}

TEST(Recursive, RelabelsWhenNoCommonConstantRow) {
    // Relabel the four-qubit set so it has no constant row at all.
    AxisRelabelling perm(4, {PauliAxis::X, PauliAxis::Y, PauliAxis::Z});
    perm[1] = {PauliAxis::Y, PauliAxis::Z, PauliAxis::X};
    perm[3] = {PauliAxis::Z, PauliAxis::X, PauliAxis::Y};
    PauliSet b = relabel(four_qubit_pair_set(), perm);
    PauliSet out = recursive_construction(four_qubit_pair_set(), b);
    EXPECT_EQ(out.size(), 17u);
    EXPECT_TRUE(verify_cover(out, complete_hypergraph(16, 2)).complete);
}

TEST(Recursive, CoverSizesRespectScalingBound) {
    std::vector<PauliSet> bases = minimal_pair_bases(5, {});
    ASSERT_EQ(bases.size(), 4u);
    std::map<int, int> phi = {{3, 9}, {4, 9}, {5, 11}};
    for (size_t n : {9, 12, 16, 20}) {
        PauliSet out = recursive_cover(n, bases);
        EXPECT_EQ(out.n(), n);
        EXPECT_TRUE(verify_cover(out, complete_hypergraph(n, 2)).complete) << n;
        for (auto [alpha, value] : phi) {
            int levels = static_cast<int>(std::ceil(std::log(static_cast<double>(n)) / std::log(alpha) - 1e-12));
            EXPECT_LE(static_cast<int>(out.size()), (value - 1) * levels + 1) << n << " " << alpha;
        }
    }
}

TEST(RestrictQubits, KeepsCoverOnPrefix) {
    PauliSet out = restrict_qubits(four_qubit_pair_set(), 3);
    EXPECT_EQ(out.n(), 3u);
    EXPECT_EQ(out.size(), 9u);
    EXPECT_TRUE(verify_cover(out, complete_hypergraph(3, 2)).complete);
}

TEST(PhiBounds, TabulatedValues) {
    for (auto [n, k, v] : std::vector<std::array<int, 3>>{{6, 2, 12}, {20, 2, 15}, {5, 3, 33}, {4, 2, 9}}) {
        PhiBounds b = phi_bounds(n, k);
        EXPECT_EQ(b.lower, v) << n << "," << k;
        EXPECT_EQ(b.upper, v) << n << "," << k;
        EXPECT_TRUE(b.exact);
        EXPECT_FALSE(b.sources.empty());
    }
}

TEST(PhiBounds, HypergraphBoundsBracketKnownValues) {
    ConnectivityHypergraph g = g7();
    PhiBounds b = phi_bounds(7, 2, &g);
    EXPECT_LE(b.lower, 11);
    EXPECT_GE(b.upper, 11);
    EXPECT_GE(b.lower, 9);
    ConnectivityHypergraph grid_graph = grid16();
    PhiBounds grid = phi_bounds(16, 2, &grid_graph);
    EXPECT_EQ(grid.lower, 9);
    EXPECT_EQ(grid.upper, 9);
}

TEST(PhiBounds, ConsistentWithEachOther) {
    for (int n = 2; n <= 30; n++) {
        PhiBounds b = phi_bounds(n, 2);
        EXPECT_LE(b.lower, b.upper) << n;
        EXPECT_GE(b.lower, 9);
        if (n > 2) {
            EXPECT_GE(b.upper, phi_bounds(n - 1, 2).lower) << n;
        }
    }
}

}  // namespace
}  // namespace otomo
