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
#include <random>

#include "otomo/measurement_map.h"
#include "otomo/quantum_state.h"
#include "otomo/tomography.h"

namespace otomo {
namespace {

DirectionSet single_setting(const std::string &s) {
    return pauli_to_directions(PauliSet::from_text(s + "\n"));
}

/// |Σ_b ψ_b Π_q <o_q; v_q | b_q>|² from the eigenvectors of v·σ.
Eigen::VectorXd amplitude_oracle(const Eigen::VectorXcd &psi, const DirectionSet &ds, size_t setting) {
    const size_t n = ds.n();
    const size_t d = size_t{1} << n;
    Eigen::VectorXd p(d);
    for (size_t o = 0; o < d; o++) {
        std::complex<double> amp = 0;
        for (size_t b = 0; b < d; b++) {
            std::complex<double> term = psi[static_cast<Eigen::Index>(b)];
            for (size_t q = 0; q < n; q++) {
                const BlochDirection &v = ds.at(q, setting);
                bool minus = (o >> (n - 1 - q)) & 1;
                bool one = (b >> (n - 1 - q)) & 1;
                std::complex<double> phase = std::polar(1.0, v.phi);
                std::complex<double> up = minus ? std::sin(v.theta / 2) : std::cos(v.theta / 2);
                std::complex<double> down = minus ? -phase * std::cos(v.theta / 2) : phase * std::sin(v.theta / 2);
                term *= std::conj(one ? down : up);
            }
            amp += term;
        }
        p[static_cast<Eigen::Index>(o)] = std::norm(amp);
    }
    return p;
}

TEST(Outcomes, StringsAndIndices) {
    EXPECT_EQ(outcome_string(0, 3), "+++");
    EXPECT_EQ(outcome_string(5, 3), "-+-");
    EXPECT_EQ(outcome_index("-+-"), 5u);
    EXPECT_THROW(outcome_index("+x"), std::invalid_argument);
}

TEST(Born, DickeInZBasisHasTwentyEqualOutcomes) {
    Eigen::VectorXd p = born_probabilities(dicke_state(6, 3), single_setting("ZZZZZZ"), 0);
    int nonzero = 0;
    for (Eigen::Index o = 0; o < p.size(); o++) {
        if (p[o] > 1e-12) {
            nonzero++;
            EXPECT_NEAR(p[o], 1.0 / 20, 1e-12);
        }
    }
    EXPECT_EQ(nonzero, 20);
}

TEST(Born, DickeInXBasisMatchesAmplitudeOracle) {
    DirectionSet xs = single_setting("XXXXXX");
    Eigen::VectorXd p = born_probabilities(dicke_state(6, 3), xs, 0);
    EXPECT_NEAR(p[0], 5.0 / 16, 1e-12);
    EXPECT_NEAR(p[63], 5.0 / 16, 1e-12);
    EXPECT_LT((p - amplitude_oracle(dicke_vector(6, 3), xs, 0)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Born, RandomDirectionsMatchAmplitudeOracle) {
    DirectionSet ds = sample_uniform_directions(4, 3, 12);
    Eigen::VectorXcd psi = dicke_vector(4, 1) + std::complex<double>(0, 0.5) * dicke_vector(4, 3);
    psi.normalize();
    DensityMatrix rho = DensityMatrix::from_pure(psi);
    for (size_t a = 0; a < 3; a++) {
        Eigen::VectorXd p = born_probabilities(rho, ds, a);
        EXPECT_NEAR(p.sum(), 1.0, 1e-12);
        EXPECT_LT((p - amplitude_oracle(psi, ds, a)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Born, GroundStateInZBasis) {
    Eigen::VectorXd p = born_probabilities(dicke_state(3, 0), single_setting("ZZZ"), 0);
    EXPECT_NEAR(p[0], 1.0, 1e-14);
}

TEST(Born, SubsetProbabilitiesAreMarginals) {
    DirectionSet ds = sample_uniform_directions(4, 2, 2);
    DensityMatrix rho = noise_state(0.5);  // six qubits; use a four-qubit reduction
    Eigen::MatrixXcd r4 = partial_trace(rho.matrix(), {0, 1, 2, 3});
    Eigen::VectorXd full = born_probabilities(r4, ds, 1);
    Eigen::VectorXd sub = born_probabilities(partial_trace(r4, {1, 3}), ds, 1, {1, 3});
    Eigen::VectorXd summed = Eigen::VectorXd::Zero(4);
    for (int o = 0; o < 16; o++) {
        summed[((o >> 2) & 1) << 1 | (o & 1)] += full[o];
    }
    EXPECT_LT((sub - summed).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Simulate, MultinomialTotalsAndDeterminism) {
    DirectionSet ds = pauli_to_directions(all_pauli_pairs());
    CountsRecord a = simulate_counts(dicke_state(2, 1), ds, 10, 7, SamplingModel::kMultinomial);
    for (size_t s = 0; s < 9; s++) {
        EXPECT_EQ(a.total(s), 10u);
    }
    EXPECT_EQ(a, simulate_counts(dicke_state(2, 1), ds, 10, 7, SamplingModel::kMultinomial));
    EXPECT_EQ(CountsRecord::from_json(a.to_json()), a);
}

TEST(Simulate, FrequenciesConcentrate) {
    DirectionSet ds = sample_uniform_directions(6, 9, 4);
    DensityMatrix rho = dicke_state(6, 3);
    CountsRecord rec = simulate_counts(rho, ds, 1000000, 3, SamplingModel::kMultinomial);
    for (size_t a = 0; a < 9; a++) {
        Eigen::VectorXd p = born_probabilities(rho, ds, a);
        for (size_t o = 0; o < 64; o++) {
            EXPECT_NEAR(static_cast<double>(rec.counts[a][o]) / 1e6, p[static_cast<Eigen::Index>(o)], 5e-3);
        }
    }
}

TEST(Simulate, PoissonAndExpectedModels) {
    DirectionSet ds = pauli_to_directions(all_pauli_pairs());
    CountsRecord pois = simulate_counts(dicke_state(2, 1), ds, 100000, 1, SamplingModel::kPoisson);
    for (size_t s = 0; s < 9; s++) {
        EXPECT_NEAR(static_cast<double>(pois.total(s)), 1e5, 5 * std::sqrt(1e5));
    }
    CountsRecord exp = simulate_counts(dicke_state(2, 1), single_setting("ZZ"), 1000, 1, SamplingModel::kExpected);
    EXPECT_EQ(exp.counts[0], (std::vector<uint64_t>{0, 500, 500, 0}));
}

TEST(Marginalize, SumsAndUniformity) {
    CountsRecord rec;
    rec.n = 3;
    rec.counts = {std::vector<uint64_t>(8, 5), {1, 2, 3, 4, 5, 6, 7, 8}};
    MarginalCounts m = marginalize_counts(rec, {0, 2});
    EXPECT_NEAR(m.totals[0], 40, 0);
    EXPECT_NEAR(m.totals[1], 36, 0);
    for (int o = 0; o < 4; o++) {
        EXPECT_NEAR(m.frequencies(0, o), 0.25, 1e-15);
    }
    // Qubits 0 and 2 are bits 2 and 0: outcome "++" sums indices 0 and 2.
    EXPECT_NEAR(m.counts(1, 0), 1 + 3, 0);
    EXPECT_NEAR(m.counts(1, 3), 6 + 8, 0);
    rec.counts[1].assign(8, 0);
    EXPECT_THROW(marginalize_counts(rec, {0}), std::invalid_argument);
}

TEST(Marginalize, DickeZBasisPairFrequencies) {
    CountsRecord rec =
        simulate_counts(dicke_state(6, 3), single_setting("ZZZZZZ"), 2000000, 1, SamplingModel::kExpected);
    MarginalCounts m = marginalize_counts(rec, {0, 1});
    std::vector<double> expected = {0.2, 0.3, 0.3, 0.2};
    for (int o = 0; o < 4; o++) {
        EXPECT_NEAR(m.frequencies(0, o), expected[o], 1e-6);
    }
}

/// Exact probabilities of every setting on `subset`, as a marginal table.
MarginalCounts exact_table(const Eigen::MatrixXcd &reduced, const DirectionSet &ds, const VertexSubset &subset,
                           double shots) {
    Eigen::MatrixXd table(ds.m(), 1 << subset.size());
    for (size_t a = 0; a < ds.m(); a++) {
        table.row(a) = shots * born_probabilities(reduced, ds, a, subset).transpose();
    }
    return marginal_from_table(subset, table);
}

TEST(LinearInversion, ExactProbabilitiesRecoverState) {
    std::mt19937_64 rng(1);
    DirectionSet ds = sample_uniform_directions(3, 9, 77);
    Eigen::MatrixXcd reduced = partial_trace(noise_state(0.6).matrix(), {1, 4});
    for (const VertexSubset &s : {VertexSubset{0, 1}, VertexSubset{1, 2}}) {
        MarginalCounts data = exact_table(reduced, ds, s, 1.0);
        MeasurementMap map = build_measurement_map(ds, s);
        LinearInversionResult r = linear_inversion(data.stacked_frequencies(), map);
        EXPECT_LT((r.estimate - reduced).norm(), 1e-10);
        EXPECT_TRUE(r.psd);
    }
}

TEST(LinearInversion, UniformPauliFrequenciesGiveMaximallyMixed) {
    MarginalCounts data = marginal_from_table({0, 1}, Eigen::MatrixXd::Constant(9, 4, 25.0));
    MeasurementMap map = build_measurement_map(all_pauli_pairs(), {0, 1});
    LinearInversionResult r = linear_inversion(data.stacked_frequencies(), map);
    EXPECT_LT((r.estimate - Eigen::MatrixXcd::Identity(4, 4) / 4.0).norm(), 1e-12);
}

TEST(LinearInversion, FiniteShotsGiveUnitTrace) {
    DirectionSet ds = pauli_to_directions(four_qubit_pair_set());
    CountsRecord rec = simulate_counts(dicke_state(4, 2), ds, 1000, 9, SamplingModel::kMultinomial);
    ReconstructionResult r = linear_reconstruct(marginalize_counts(rec, {0, 3}), ds);
    EXPECT_NEAR(r.estimate.trace().real(), 1.0, 1e-12);
    EXPECT_LT((r.estimate - r.estimate.adjoint()).norm(), 1e-12);
}

TEST(Mle, CholeskyParametrization) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    Eigen::VectorXd t(16);
    for (auto &v : t) {
        v = g(rng);
    }
    Eigen::MatrixXcd rho = state_from_params(t, 4);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho).eigenvalues().minCoeff(), -1e-12);
    EXPECT_LT((state_from_params(params_from_state(rho), 4) - rho).norm(), 1e-10);
    Eigen::MatrixXcd tri = cholesky_factor_from_params(t, 4);
    EXPECT_LT(tri.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm(), 1e-15);
}

TEST(Mle, GradientMatchesFiniteDifferences) {
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    DirectionSet ds = sample_uniform_directions(6, 9, 5);
    CountsRecord rec = simulate_counts(noise_state(0.8), ds, 5000, 2, SamplingModel::kMultinomial);
    MleCost cost(marginalize_counts(rec, {1, 4}), ds);
    for (int point = 0; point < 10; point++) {
        Eigen::VectorXd t(static_cast<Eigen::Index>(cost.num_params()));
        for (auto &v : t) {
            v = g(rng);
        }
        Eigen::VectorXd analytic = cost.gradient(t);
        Eigen::VectorXd numeric(t.size());
        for (Eigen::Index i = 0; i < t.size(); i++) {
            const double h = 1e-6 * std::max(1.0, std::abs(t[i]));
            Eigen::VectorXd a = t, b = t;
            a[i] += h;
            b[i] -= h;
            numeric[i] = (cost(a) - cost(b)) / (2 * h);
        }
        EXPECT_LT((analytic - numeric).norm(), 1e-4 * numeric.norm()) << point;
    }
}

TEST(Mle, ExactProbabilitiesGiveHighFidelity) {
    DirectionSet ds = sample_uniform_directions(6, 9, 31);
    DensityMatrix rho = dicke_state(6, 3);
    for (const VertexSubset &s : {VertexSubset{0, 1}, VertexSubset{2, 5}}) {
        Eigen::MatrixXcd truth = partial_trace(rho.matrix(), s);
        ReconstructionResult r = mle_reconstruct(exact_table(truth, ds, s, 1e6), ds);
        EXPECT_GE(fidelity(r.estimate, truth), 0.9999);
        EXPECT_NEAR(r.estimate.trace().real(), 1.0, 1e-12);
        EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(r.estimate).eigenvalues().minCoeff(), -1e-12);
        for (size_t i = 1; i < r.cost_history.size(); i++) {
            EXPECT_LE(r.cost_history[i], r.cost_history[i - 1]);
        }
    }
}

TEST(Mle, IncompleteSettingsAreRejected) {
    DirectionSet ds = single_setting("ZZ");
    MarginalCounts data = marginal_from_table({0, 1}, Eigen::MatrixXd::Constant(1, 4, 10.0));
    EXPECT_THROW(mle_reconstruct(data, ds), IncompleteSettingsError);
}

TEST(MonteCarlo, SpreadIsNonNegativeAndShrinksWithShots) {
    DirectionSet ds = pauli_to_directions(four_qubit_pair_set());
    DensityMatrix rho = dicke_state(4, 2);
    CountsRecord rec = simulate_counts(rho, ds, 1000000, 5, SamplingModel::kMultinomial);
    std::vector<VertexSubset> subsets = {{0, 1}, {1, 3}};
    auto one = monte_carlo_errors(rec, ds, subsets, rho, 1, 2);
    for (const auto &s : one) {
        EXPECT_EQ(s.stddev, 0.0);
        EXPECT_EQ(s.samples.size(), 1u);
    }
    auto many = monte_carlo_errors(rec, ds, subsets, rho, 6, 2, 2);
    for (const auto &s : many) {
        EXPECT_GE(s.stddev, 0.0);
        EXPECT_LT(s.stddev, 0.01);
        EXPECT_GT(s.mean, 0.99);
    }
    auto serial = monte_carlo_errors(rec, ds, subsets, rho, 6, 2, 1);
    EXPECT_EQ(serial[0].samples, many[0].samples);
}

TEST(MatrixJson, RoundTrip) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(3, 3);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
}

}  // namespace
}  // namespace otomo
