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


#ifndef OTOMO_MEASUREMENT_MAP_H
#define OTOMO_MEASUREMENT_MAP_H

#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "otomo/directions.h"
#include "otomo/hypergraph.h"
#include "otomo/pauli.h"

namespace otomo {

/// Column α is the Kronecker product of the Bloch vectors of setting α on
/// `subset` (in subset order). Throws std::invalid_argument unless
/// |subset| = k and ds.m() = 3^k.
Eigen::MatrixXd z_matrix(const DirectionSet &ds, const VertexSubset &subset, size_t k);

struct CompletenessReport {
    bool complete = false;
    VertexSubset worst_subset;
    double worst_det = 0;  // smallest |det z_matrix| over k-subsets
};

/// Complete iff |det z_matrix| > tol for every k-subset of the qubits.
CompletenessReport completeness_check(const DirectionSet &ds, size_t k, double tol = 1e-8);

/// Orthonormal Hermitian basis of s-qubit operators: tensor products of
/// (I, X, Y, Z)/√2, first qubit most significant.
const std::vector<Eigen::MatrixXcd> &pauli_operator_basis(size_t s);
/// Real coordinates tr(P_c ρ) of a Hermitian matrix in that basis.
Eigen::VectorXd vectorize_operator(const Eigen::MatrixXcd &rho);
Eigen::MatrixXcd devectorize_operator(const Eigen::VectorXd &coords);

/// Maps operator coordinates to outcome probabilities of all settings on a
/// qubit subset, every setting weighted 1/m. Row index = α·2^s + o, with o
/// read as a binary number over the subset ('+' = 0, first qubit most
/// significant). `sigma` is the largest column norm of the pseudoinverse.
struct MeasurementMap {
    VertexSubset subset;
    size_t settings = 0;
    Eigen::MatrixXd matrix;
    Eigen::MatrixXd pseudoinverse;
    int rank = 0;
    double sigma = 0;
};

/// Raised when the settings do not determine every operator on the subset.
class IncompleteSettingsError : public std::runtime_error {
   public:
    IncompleteSettingsError(const VertexSubset &subset, int rank, int required);
    int rank() const {
        return rank_;
    }
    int required() const {
        return required_;
    }

   private:
    int rank_;
    int required_;
};

/// Pseudoinverse by SVD with cutoff 1e-10 × largest singular value.
/// Throws IncompleteSettingsError if the rank is below 4^|subset|.
MeasurementMap build_measurement_map(const DirectionSet &ds, const VertexSubset &subset);
MeasurementMap build_measurement_map(const PauliSet &ps, const VertexSubset &subset);

struct SigmaReport {
    double sigma_max = 0;
    std::map<VertexSubset, double> per_subset;
};

/// Largest σ over all k-subsets; subsets are evaluated on up to `threads` workers.
SigmaReport sigma_max(const DirectionSet &ds, size_t k, size_t threads = 1);
SigmaReport sigma_max(const PauliSet &ps, size_t k, size_t threads = 1);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<VertexSubset> all_subsets(size_t n, size_t k);

}  // namespace otomo

#endif
