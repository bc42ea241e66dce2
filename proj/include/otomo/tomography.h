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


#ifndef OTOMO_TOMOGRAPHY_H
#define OTOMO_TOMOGRAPHY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "otomo/directions.h"
#include "otomo/hypergraph.h"
#include "otomo/measurement_map.h"
#include "otomo/quantum_state.h"
#include "otomo/serialization.h"

namespace otomo {

/// Outcome index o over `qubits` qubits as a string: character i is '+'
/// when bit (qubits-1-i) of o is clear, '-' otherwise.
std::string outcome_string(uint64_t o, size_t qubits);
/// Inverse of outcome_string; throws std::invalid_argument on other characters.
uint64_t outcome_index(std::string_view s);

/// Probability of every outcome of setting `setting` of `ds` on the qubits
/// `subset` of `rho` (all qubits when `subset` is empty), each qubit
/// projected onto (1 ± v·σ)/2. Tiny negative values are clipped to zero.
Eigen::VectorXd born_probabilities(const Eigen::MatrixXcd &rho, const DirectionSet &ds, size_t setting,
                                   const VertexSubset &subset = {});
Eigen::VectorXd born_probabilities(const DensityMatrix &rho, const DirectionSet &ds, size_t setting);

/// counts[α][o] for every setting α and outcome o (outcome_string order).
struct CountsRecord {
    std::string settings_ref;
    size_t n = 0;
    std::vector<std::vector<uint64_t>> counts;

    uint64_t total(size_t setting) const;
    /// `{"counts": [{"outcomes": {"++-+--": 17, ...}, "setting": 0}, ...],
    ///   "n": 6, "settings": "<ref>"}`; zero counts are omitted.
    std::string to_json() const;
    static CountsRecord from_json(std::string_view text);
    bool operator==(const CountsRecord &) const = default;
};

enum class SamplingModel {
    kMultinomial,  // exactly `shots` per setting
    kPoisson,      // each count ~ Poisson(shots · p)
    kExpected,     // round(shots · p), no randomness
};

/// One independent random stream per setting, derived from `seed`.
CountsRecord simulate_counts(const DensityMatrix &rho, const DirectionSet &ds, uint64_t shots, uint64_t seed,
                             SamplingModel model, std::string settings_ref = {});

/// Counts of one qubit subset, summed over the other qubits' outcomes.
struct MarginalCounts {
    VertexSubset subset;
    Eigen::MatrixXd counts;       // settings × 2^|subset|
    Eigen::MatrixXd frequencies;  // each row sums to 1
    Eigen::VectorXd totals;       // per setting

    /// Rows of a MeasurementMap: frequency of (α, o) weighted by 1/m.
    Eigen::VectorXd stacked_frequencies() const;
};

/// Throws std::invalid_argument naming the setting if a setting has no counts.
MarginalCounts marginalize_counts(const CountsRecord &rec, const VertexSubset &subset);
/// From real-valued count tables (settings × 2^|subset|), e.g. exact probabilities.
MarginalCounts marginal_from_table(const VertexSubset &subset, const Eigen::MatrixXd &counts);

struct LinearInversionResult {
    Eigen::MatrixXcd estimate;
    /// Largest entry of |X - X†| / 2 before symmetrization.
    double hermiticity_deviation = 0;
    double min_eigenvalue = 0;
    bool psd = false;
};

/// M⁺ f reshaped to a Hermitian matrix; may have negative eigenvalues.
LinearInversionResult linear_inversion(const Eigen::VectorXd &stacked_frequencies, const MeasurementMap &map);

/// Lower-triangular T with real diagonal: entries t_0..t_{d-1} are the
/// diagonal, then (re, im) pairs of the strictly lower part in row-major order.
Eigen::MatrixXcd cholesky_factor_from_params(const Eigen::VectorXd &t, Eigen::Index d);
/// ϱ(t) = T†T / tr(T†T).
Eigen::MatrixXcd state_from_params(const Eigen::VectorXd &t, Eigen::Index d);
/// Parameters t with state_from_params(t) = rho for a positive definite rho.
Eigen::VectorXd params_from_state(const Eigen::MatrixXcd &rho);

/// Gaussian-statistics cost L(t) = ½ Σ_α Σ_o (p_α^o - q_α^o)² / (q_α^o / N_α),
/// with q the predicted probabilities of ϱ(t) and q floored at 1e-12.
class MleCost {
   public:
    MleCost(const MarginalCounts &data, const DirectionSet &ds);
    double operator()(const Eigen::VectorXd &t) const;
    Eigen::VectorXd gradient(const Eigen::VectorXd &t) const;
    Eigen::Index dim() const {
        return d_;
    }
    size_t num_params() const {
        return static_cast<size_t>(d_ * d_);
    }

   private:
    Eigen::Index d_;
    std::vector<Eigen::MatrixXcd> projectors_;  // index α·2^s + o
    std::vector<double> observed_;
    std::vector<double> totals_;
};

struct MleOptions {
    int max_iterations = 5000;
    double f_tolerance = 1e-9;
    int restarts = 3;
    uint64_t seed = 0;
};

enum class ReconstructionMethod { kLinear, kMle };

struct ReconstructionResult {
    VertexSubset subset;
    Eigen::MatrixXcd estimate;
    ReconstructionMethod method = ReconstructionMethod::kMle;
    double cost = 0;
    int iterations = 0;
    bool psd = true;
    /// Cost after every accepted step of the winning restart.
    std::vector<double> cost_history;

    /// `{"cost": .., "estimate": [[[re, im], ...], ...], "iterations": ..,
    ///   "method": "mle", "psd": true, "subset": [..]}`
    nlohmann::json to_json_value() const;
};

/// Minimizes MleCost from the PSD projection of the linear inversion
/// estimate (or `init`), plus restarts from perturbed copies. Throws
/// IncompleteSettingsError if the settings do not determine the marginal.
ReconstructionResult mle_reconstruct(const MarginalCounts &data, const DirectionSet &ds,
                                     const std::optional<Eigen::MatrixXcd> &init = std::nullopt,
                                     const MleOptions &options = {});

ReconstructionResult linear_reconstruct(const MarginalCounts &data, const DirectionSet &ds);

struct FidelityStats {
    VertexSubset subset;
    double mean = 0;
    double stddev = 0;
    std::vector<double> samples;
};

/// Resamples every count as Poisson(observed), reconstructs each subset by
/// MLE and scores it against the reduced `reference`. Repeat r uses its own
/// random stream, so results do not depend on `threads`.
std::vector<FidelityStats> monte_carlo_errors(const CountsRecord &rec, const DirectionSet &ds,
                                              const std::vector<VertexSubset> &subsets, const DensityMatrix &reference,
                                              int repeats, uint64_t seed, size_t threads = 1);

/// `[[[re, im], ...], ...]`
nlohmann::json matrix_to_json(const Eigen::MatrixXcd &m);
Eigen::MatrixXcd matrix_from_json(const nlohmann::json &j);

}  // namespace otomo

#endif
