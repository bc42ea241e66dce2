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


#ifndef OTOMO_QUANTUM_STATE_H
#define OTOMO_QUANTUM_STATE_H

#include <cstddef>

#include <Eigen/Dense>

#include "otomo/hypergraph.h"

namespace otomo {

/// Dense density matrices are capped at 12 qubits (4096 × 4096).
inline constexpr size_t kMaxStateQubits = 12;

/// A Hermitian, unit-trace, positive semidefinite matrix on 2^j levels.
/// Basis index bit (j-1-i) is qubit i, so qubit 0 is the leftmost symbol.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    /// Throws std::invalid_argument unless Hermitian and unit-trace within
    /// 1e-10 with eigenvalues ≥ -1e-9. Stores the Hermitian part.
    explicit DensityMatrix(const Eigen::MatrixXcd &m);
    /// |ψ⟩⟨ψ| for a normalized copy of ψ.
    static DensityMatrix from_pure(const Eigen::VectorXcd &psi);

    size_t num_qubits() const {
        return qubits_;
    }
    Eigen::Index dim() const {
        return matrix_.rows();
    }
    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }

   private:
    Eigen::MatrixXcd matrix_;
    size_t qubits_ = 0;
};

/// Equal-amplitude superposition of all weight-m basis states of n qubits.
Eigen::VectorXcd dicke_vector(size_t n, size_t m);
DensityMatrix dicke_state(size_t n, size_t m);

/// p·D(6,3) + (1-p)/2·ϱ_noise with ϱ_noise = 4/7 D(6,3) + 3/14 (D(6,2) + D(6,4)),
/// divided by its trace p + (1-p)/2 so the result is a state.
DensityMatrix noise_state(double p);

/// Reduced matrix on the sorted qubits `keep`, in that order.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd &rho, const VertexSubset &keep);
DensityMatrix partial_trace(const DensityMatrix &rho, const VertexSubset &keep);

/// Uhlmann fidelity [tr √(√ρ σ √ρ)]². Inputs must be states within 1e-8;
/// eigenvalues down to -1e-9 are clipped to zero. For rank-deficient inputs
/// the result is accurate to about 1e-8 (square roots of rounding noise).
double fidelity(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma);
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Eigenvalue-clipped projection onto states: negative eigenvalues set to
/// zero, then renormalized (maximally mixed if nothing positive remains).
Eigen::MatrixXcd project_to_states(const Eigen::MatrixXcd &hermitian);

}  // namespace otomo

#endif
