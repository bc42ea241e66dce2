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


#include "otomo/quantum_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace otomo {

namespace {

size_t qubits_of(Eigen::Index dim) {
    if (dim <= 0 || !std::has_single_bit(static_cast<uint64_t>(dim))) {
        throw std::invalid_argument("matrix dimension " + std::to_string(dim) + " is not a power of two");
    }
    size_t q = static_cast<size_t>(std::countr_zero(static_cast<uint64_t>(dim)));
    if (q > kMaxStateQubits) {
        throw std::invalid_argument("density matrices are limited to 12 qubits");
    }
    return q;
}

void check_state(const Eigen::MatrixXcd &m, double tol, const char *what) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument(std::string(what) + ": matrix is not square");
    }
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
    }
    if (std::abs(m.trace() - std::complex<double>(1, 0)) > tol) {
        throw std::invalid_argument(std::string(what) + ": trace is not 1");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(const Eigen::MatrixXcd &m) {
    qubits_ = qubits_of(m.rows());
    check_state(m, 1e-10, "density matrix");
    matrix_ = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(matrix_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-9) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
}

DensityMatrix DensityMatrix::from_pure(const Eigen::VectorXcd &psi) {
    double norm = psi.norm();
    if (!(norm > 0)) {
        throw std::invalid_argument("cannot normalize a zero state vector");
    }
    Eigen::VectorXcd v = psi / norm;
    return DensityMatrix(v * v.adjoint());
}

Eigen::VectorXcd dicke_vector(size_t n, size_t m) {
    if (m > n) {
        throw std::invalid_argument("Dicke state needs 0 <= m <= n");
    }
    qubits_of(Eigen::Index{1} << n);
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    size_t count = 0;
    for (Eigen::Index i = 0; i < dim; i++) {
        if (static_cast<size_t>(std::popcount(static_cast<uint64_t>(i))) == m) {
            psi[i] = 1;
            count++;
        }
    }
    return psi / std::sqrt(static_cast<double>(count));
}

DensityMatrix dicke_state(size_t n, size_t m) {
    return DensityMatrix::from_pure(dicke_vector(n, m));
}

DensityMatrix noise_state(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("noise mixing weight must lie in [0, 1]");
    }
    auto proj = [](size_t m) {
        Eigen::VectorXcd v = dicke_vector(6, m);
        return Eigen::MatrixXcd(v * v.adjoint());
    };
    Eigen::MatrixXcd d3 = proj(3);
    Eigen::MatrixXcd noise = (4.0 / 7.0) * d3 + (3.0 / 14.0) * (proj(2) + proj(4));
    Eigen::MatrixXcd mix = p * d3 + 0.5 * (1 - p) * noise;
    return DensityMatrix(mix / mix.trace().real());
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd &rho, const VertexSubset &keep) {
    const size_t n = qubits_of(rho.rows());
    if (keep.empty()) {
        throw std::invalid_argument("partial trace needs at least one kept qubit");
    }
    for (size_t i = 0; i < keep.size(); i++) {
        if (keep[i] < 0 || static_cast<size_t>(keep[i]) >= n || (i > 0 && keep[i] <= keep[i - 1])) {
            throw std::invalid_argument("partial trace: kept qubits must be sorted, distinct and in range");
        }
    }
    const size_t s = keep.size();
    std::vector<uint64_t> keep_masks(s);
    uint64_t keep_all = 0;
    for (size_t i = 0; i < s; i++) {
        keep_masks[i] = uint64_t{1} << (n - 1 - keep[i]);
        keep_all |= keep_masks[i];
    }
    std::vector<uint64_t> traced_masks;
    for (size_t q = 0; q < n; q++) {
        uint64_t mask = uint64_t{1} << (n - 1 - q);
        if (!(keep_all & mask)) {
            traced_masks.push_back(mask);
        }
    }
    auto expand = [](uint64_t bits, const std::vector<uint64_t> &masks) {
        uint64_t out = 0;
        for (size_t i = 0; i < masks.size(); i++) {
            if (bits & (uint64_t{1} << (masks.size() - 1 - i))) {
                out |= masks[i];
            }
        }
        return out;
    };
    const uint64_t kept_dim = uint64_t{1} << s;
    const uint64_t traced_dim = uint64_t{1} << traced_masks.size();
    std::vector<uint64_t> kept_index(kept_dim);
    std::vector<uint64_t> traced_index(traced_dim);
    for (uint64_t a = 0; a < kept_dim; a++) {
        kept_index[a] = expand(a, keep_masks);
    }
    for (uint64_t t = 0; t < traced_dim; t++) {
        traced_index[t] = expand(t, traced_masks);
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kept_dim, kept_dim);
    for (uint64_t a = 0; a < kept_dim; a++) {
        for (uint64_t b = 0; b < kept_dim; b++) {
            std::complex<double> sum = 0;
            for (uint64_t t = 0; t < traced_dim; t++) {
                sum += rho(kept_index[a] | traced_index[t], kept_index[b] | traced_index[t]);
            }
            out(a, b) = sum;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &rho, const VertexSubset &keep) {
    return DensityMatrix(partial_trace(rho.matrix(), keep));
}

namespace {

Eigen::MatrixXcd clipped_sqrt(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
    Eigen::VectorXd root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().adjoint();
}

void check_fidelity_input(const Eigen::MatrixXcd &m) {
    check_state(m, 1e-8, "fidelity");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-8) {
        throw std::invalid_argument("fidelity: matrix has a negative eigenvalue");
    }
}

}  // namespace

double fidelity(const Eigen::MatrixXcd &rho, const Eigen::MatrixXcd &sigma) {
    if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    check_fidelity_input(rho);
    check_fidelity_input(sigma);
    Eigen::MatrixXcd r = clipped_sqrt(0.5 * (rho + rho.adjoint()));
    Eigen::MatrixXcd inner = r * (0.5 * (sigma + sigma.adjoint())) * r;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (inner + inner.adjoint()), Eigen::EigenvaluesOnly);
    double root_sum = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return fidelity(rho.matrix(), sigma.matrix());
}

Eigen::MatrixXcd project_to_states(const Eigen::MatrixXcd &hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(0.5 * (hermitian + hermitian.adjoint()));
    Eigen::VectorXd lambda = eig.eigenvalues().cwiseMax(0.0);
    double total = lambda.sum();
    const Eigen::Index d = hermitian.rows();
    if (!(total > 0)) {
        return Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    }
    lambda /= total;
    return eig.eigenvectors() * lambda.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace otomo
