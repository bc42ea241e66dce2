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


#include "otomo/measurement_map.h"

#include <cmath>
#include <mutex>
#include <string>

#include "otomo/parallel.h"

namespace otomo {

namespace {

std::string subset_str(const VertexSubset &s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); i++) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

void check_subset(const DirectionSet &ds, const VertexSubset &subset) {
    for (size_t i = 0; i < subset.size(); i++) {
        if (subset[i] < 0 || static_cast<size_t>(subset[i]) >= ds.n() || (i > 0 && subset[i] <= subset[i - 1])) {
            throw std::invalid_argument("invalid qubit subset " + subset_str(subset));
        }
    }
}

}  // namespace

std::vector<VertexSubset> all_subsets(size_t n, size_t k) {
    std::vector<VertexSubset> out;
    if (k > n) {
        return out;
    }
    VertexSubset cur(k);
    for (size_t i = 0; i < k; i++) {
        cur[i] = static_cast<int>(i);
    }
    while (true) {
        out.push_back(cur);
        size_t i = k;
        while (i > 0 && cur[i - 1] == static_cast<int>(n - k + i - 1)) {
            i--;
        }
        if (i == 0) {
            return out;
        }
        cur[i - 1]++;
        for (size_t j = i; j < k; j++) {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

Eigen::MatrixXd z_matrix(const DirectionSet &ds, const VertexSubset &subset, size_t k) {
    if (subset.size() != k) {
        throw std::invalid_argument("z_matrix: subset size must equal k");
    }
    size_t dim = 1;
    for (size_t i = 0; i < k; i++) {
        dim *= 3;
    }
    if (ds.m() != dim) {
        throw std::invalid_argument("z_matrix: need exactly 3^k = " + std::to_string(dim) + " settings, got " +
                                    std::to_string(ds.m()));
    }
    check_subset(ds, subset);
    Eigen::MatrixXd z(dim, dim);
    for (size_t a = 0; a < dim; a++) {
        Eigen::VectorXd col = Eigen::VectorXd::Ones(1);
        for (int q : subset) {
            Eigen::Vector3d v = ds.vector(q, a);
            Eigen::VectorXd next(col.size() * 3);
            for (Eigen::Index i = 0; i < col.size(); i++) {
                next.segment<3>(3 * i) = col[i] * v;
            }
            col = std::move(next);
        }
        z.col(a) = col;
    }
    return z;
}

CompletenessReport completeness_check(const DirectionSet &ds, size_t k, double tol) {
    CompletenessReport report;
    report.worst_det = INFINITY;
    for (const auto &s : all_subsets(ds.n(), k)) {
        double det = std::abs(z_matrix(ds, s, k).fullPivLu().determinant());
        if (det < report.worst_det) {
            report.worst_det = det;
            report.worst_subset = s;
        }
    }
    report.complete = report.worst_det > tol;
    return report;
}

const std::vector<Eigen::MatrixXcd> &pauli_operator_basis(size_t s) {
    static std::mutex mutex;
    static std::map<size_t, std::vector<Eigen::MatrixXcd>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(s);
    if (it != cache.end()) {
        return it->second;
    }
    using C = std::complex<double>;
    const double r = 1 / std::sqrt(2.0);
    std::vector<Eigen::Matrix2cd> single(4);
    single[0] << r, 0, 0, r;
    single[1] << 0, r, r, 0;
    single[2] << 0, C(0, -r), C(0, r), 0;
    single[3] << r, 0, 0, -r;
    std::vector<Eigen::MatrixXcd> basis = {Eigen::MatrixXcd::Ones(1, 1)};
    for (size_t q = 0; q < s; q++) {
        std::vector<Eigen::MatrixXcd> next;
        for (const auto &b : basis) {
            for (const auto &p : single) {
                Eigen::MatrixXcd kron(b.rows() * 2, b.cols() * 2);
                for (Eigen::Index i = 0; i < b.rows(); i++) {
                    for (Eigen::Index j = 0; j < b.cols(); j++) {
                        kron.block<2, 2>(2 * i, 2 * j) = b(i, j) * p;
                    }
                }
                next.push_back(std::move(kron));
            }
        }
        basis = std::move(next);
    }
    return cache.emplace(s, std::move(basis)).first->second;
}

namespace {

size_t qubits_for_dim(Eigen::Index dim) {
    size_t s = 0;
    while ((Eigen::Index{1} << s) < dim) {
        s++;
    }
    if ((Eigen::Index{1} << s) != dim) {
        throw std::invalid_argument("operator dimension is not a power of two");
    }
    return s;
}

}  // namespace

Eigen::VectorXd vectorize_operator(const Eigen::MatrixXcd &rho) {
    const auto &basis = pauli_operator_basis(qubits_for_dim(rho.rows()));
    Eigen::VectorXd out(basis.size());
    for (size_t c = 0; c < basis.size(); c++) {
        // tr(P ρ) = Σ_ij P_ji ρ_ij; P is Hermitian so P_ji = conj(P_ij).
        out[c] = (basis[c].conjugate().cwiseProduct(rho)).sum().real();
    }
    return out;
}

Eigen::MatrixXcd devectorize_operator(const Eigen::VectorXd &coords) {
    size_t s = 0;
    while ((Eigen::Index{1} << (2 * s)) < coords.size()) {
        s++;
    }
    if ((Eigen::Index{1} << (2 * s)) != coords.size()) {
        throw std::invalid_argument("coordinate count is not a power of four");
    }
    const auto &basis = pauli_operator_basis(s);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(Eigen::Index{1} << s, Eigen::Index{1} << s);
    for (size_t c = 0; c < basis.size(); c++) {
        out += coords[c] * basis[c];
    }
    return out;
}

IncompleteSettingsError::IncompleteSettingsError(const VertexSubset &subset, int rank, int required)
    : std::runtime_error("settings are tomographically incomplete on " + subset_str(subset) + ": rank " +
                         std::to_string(rank) + " < " + std::to_string(required)),
      rank_(rank),
      required_(required) {
}

MeasurementMap build_measurement_map(const DirectionSet &ds, const VertexSubset &subset) {
    check_subset(ds, subset);
    if (subset.empty()) {
        throw std::invalid_argument("measurement map needs a non-empty subset");
    }
    const size_t s = subset.size();
    const size_t m = ds.m();
    const size_t outcomes = size_t{1} << s;
    const size_t dim = size_t{1} << (2 * s);
    const double scale = 1.0 / (static_cast<double>(m) * std::pow(2.0, 0.5 * static_cast<double>(s)));

    MeasurementMap map;
    map.subset = subset;
    map.settings = m;
    map.matrix.resize(static_cast<Eigen::Index>(m * outcomes), static_cast<Eigen::Index>(dim));
    for (size_t a = 0; a < m; a++) {
        for (size_t o = 0; o < outcomes; o++) {
            Eigen::VectorXd row = Eigen::VectorXd::Constant(1, scale);
            for (size_t i = 0; i < s; i++) {
                double sign = ((o >> (s - 1 - i)) & 1) ? -1.0 : 1.0;
                Eigen::Vector4d factor;
                factor << 1.0, sign * ds.vector(subset[i], a);
                Eigen::VectorXd next(row.size() * 4);
                for (Eigen::Index j = 0; j < row.size(); j++) {
                    next.segment<4>(4 * j) = row[j] * factor;
                }
                row = std::move(next);
            }
            map.matrix.row(static_cast<Eigen::Index>(a * outcomes + o)) = row.transpose();
        }
    }

    // Two-sided Jacobi: slower than divide-and-conquer but accurate on the
    // highly degenerate spectra of Pauli settings.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(map.matrix, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    const double cutoff = 1e-10 * (sv.size() ? sv[0] : 0.0);
    Eigen::VectorXd inv(sv.size());
    map.rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); i++) {
        if (sv[i] > cutoff) {
            inv[i] = 1 / sv[i];
            map.rank++;
        } else {
            inv[i] = 0;
        }
    }
    if (map.rank < static_cast<int>(dim)) {
        throw IncompleteSettingsError(subset, map.rank, static_cast<int>(dim));
    }
    map.pseudoinverse = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    map.sigma = map.pseudoinverse.colwise().norm().maxCoeff();
    return map;
}

MeasurementMap build_measurement_map(const PauliSet &ps, const VertexSubset &subset) {
    return build_measurement_map(pauli_to_directions(ps), subset);
}

SigmaReport sigma_max(const DirectionSet &ds, size_t k, size_t threads) {
    auto subsets = all_subsets(ds.n(), k);
    std::vector<double> sigmas(subsets.size());
    parallel_for(subsets.size(), threads, [&](size_t i) { sigmas[i] = build_measurement_map(ds, subsets[i]).sigma; });
    SigmaReport report;
    for (size_t i = 0; i < subsets.size(); i++) {
        report.per_subset[subsets[i]] = sigmas[i];
        report.sigma_max = std::max(report.sigma_max, sigmas[i]);
    }
    return report;
}

SigmaReport sigma_max(const PauliSet &ps, size_t k, size_t threads) {
    return sigma_max(pauli_to_directions(ps), k, threads);
}

}  // namespace otomo
