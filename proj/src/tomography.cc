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


#include "otomo/tomography.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "otomo/minimize.h"
#include "otomo/parallel.h"

namespace otomo {

namespace {

using Complex = std::complex<double>;

std::mt19937_64 stream(uint64_t seed, uint64_t index, uint64_t tag) {
    std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(index),
                      static_cast<uint32_t>(index >> 32), static_cast<uint32_t>(tag)};
    return std::mt19937_64(seq);
}

/// Rows are ⟨v+| and ⟨v-| for the Bloch direction d.
Eigen::Matrix2cd measurement_rotation(const BlochDirection &d) {
    const double c = std::cos(d.theta / 2);
    const double s = std::sin(d.theta / 2);
    const Complex phase = std::polar(1.0, d.phi);
    Eigen::Matrix2cd u;
    u << c, std::conj(phase) * s, s, -std::conj(phase) * c;
    return u;
}

/// (1 + sign v·σ)/2.
Eigen::Matrix2cd projector(const Eigen::Vector3d &v, double sign) {
    Eigen::Matrix2cd p;
    p << 1 + sign * v.z(), sign * Complex(v.x(), -v.y()), sign * Complex(v.x(), v.y()), 1 - sign * v.z();
    return 0.5 * p;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

size_t log2_dim(Eigen::Index dim) {
    size_t q = 0;
    while ((Eigen::Index{1} << q) < dim) {
        q++;
    }
    if ((Eigen::Index{1} << q) != dim) {
        throw std::invalid_argument("matrix dimension is not a power of two");
    }
    return q;
}

VertexSubset resolve_subset(const DirectionSet &ds, const VertexSubset &subset, size_t qubits) {
    VertexSubset out = subset;
    if (out.empty()) {
        for (size_t q = 0; q < ds.n(); q++) {
            out.push_back(static_cast<int>(q));
        }
    }
    if (out.size() != qubits) {
        throw std::invalid_argument("state size does not match the number of measured qubits");
    }
    for (int q : out) {
        if (q < 0 || static_cast<size_t>(q) >= ds.n()) {
            throw std::invalid_argument("qubit index outside the direction set");
        }
    }
    return out;
}

}  // namespace

std::string outcome_string(uint64_t o, size_t qubits) {
    std::string s(qubits, '+');
    for (size_t i = 0; i < qubits; i++) {
        if ((o >> (qubits - 1 - i)) & 1) {
            s[i] = '-';
        }
    }
    return s;
}

uint64_t outcome_index(std::string_view s) {
    if (s.size() > 63) {
        throw std::invalid_argument("outcome string too long");
    }
    uint64_t o = 0;
    for (char c : s) {
        if (c != '+' && c != '-') {
            throw std::invalid_argument("outcome strings use only '+' and '-'");
        }
        o = (o << 1) | (c == '-' ? 1 : 0);
    }
    return o;
}

Eigen::VectorXd born_probabilities(const Eigen::MatrixXcd &rho, const DirectionSet &ds, size_t setting,
                                   const VertexSubset &subset) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("state matrix is not square");
    }
    if (setting >= ds.m()) {
        throw std::invalid_argument("setting index out of range");
    }
    const size_t s = log2_dim(rho.rows());
    const VertexSubset qubits = resolve_subset(ds, subset, s);
    Eigen::MatrixXcd m = rho;
    const Eigen::Index dim = rho.rows();
    for (size_t i = 0; i < s; i++) {
        const Eigen::Matrix2cd u = measurement_rotation(ds.at(qubits[i], setting));
        const Eigen::Index mask = Eigen::Index{1} << (s - 1 - i);
        for (Eigen::Index r = 0; r < dim; r++) {
            if (r & mask) {
                continue;
            }
            Eigen::RowVectorXcd a = m.row(r);
            Eigen::RowVectorXcd b = m.row(r | mask);
            m.row(r) = u(0, 0) * a + u(0, 1) * b;
            m.row(r | mask) = u(1, 0) * a + u(1, 1) * b;
        }
        for (Eigen::Index c = 0; c < dim; c++) {
            if (c & mask) {
                continue;
            }
            Eigen::VectorXcd a = m.col(c);
            Eigen::VectorXcd b = m.col(c | mask);
            m.col(c) = std::conj(u(0, 0)) * a + std::conj(u(0, 1)) * b;
            m.col(c | mask) = std::conj(u(1, 0)) * a + std::conj(u(1, 1)) * b;
        }
    }
    Eigen::VectorXd p = m.diagonal().real();
    for (auto &x : p) {
        if (x < 0) {
            x = 0;
        }
    }
    return p;
}

Eigen::VectorXd born_probabilities(const DensityMatrix &rho, const DirectionSet &ds, size_t setting) {
    return born_probabilities(rho.matrix(), ds, setting);
}

uint64_t CountsRecord::total(size_t setting) const {
    uint64_t t = 0;
    for (auto c : counts.at(setting)) {
        t += c;
    }
    return t;
}

std::string CountsRecord::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (size_t a = 0; a < counts.size(); a++) {
        nlohmann::json outcomes = nlohmann::json::object();
        for (size_t o = 0; o < counts[a].size(); o++) {
            if (counts[a][o]) {
                outcomes[outcome_string(o, n)] = counts[a][o];
            }
        }
        list.push_back({{"outcomes", outcomes}, {"setting", a}});
    }
    nlohmann::json j;
    j["counts"] = list;
    j["n"] = n;
    j["settings"] = settings_ref;
    return canonical_json(j);
}

CountsRecord CountsRecord::from_json(std::string_view text) {
    CountsRecord rec;
    try {
        auto j = nlohmann::json::parse(text);
        rec.n = j.at("n").get<size_t>();
        if (rec.n == 0 || rec.n > kMaxStateQubits) {
            throw std::invalid_argument("counts record: n must be between 1 and 12");
        }
        rec.settings_ref = j.value("settings", "");
        const auto &list = j.at("counts");
        rec.counts.assign(list.size(), std::vector<uint64_t>(size_t{1} << rec.n, 0));
        for (const auto &entry : list) {
            size_t a = entry.at("setting").get<size_t>();
            if (a >= rec.counts.size()) {
                throw std::invalid_argument("counts record: setting index out of range");
            }
            for (auto it = entry.at("outcomes").begin(); it != entry.at("outcomes").end(); ++it) {
                if (it.key().size() != rec.n) {
                    throw std::invalid_argument("counts record: outcome '" + it.key() + "' has the wrong length");
                }
                if (!it.value().is_number_unsigned() && !(it.value().is_number_integer() && it.value().get<int64_t>() >= 0)) {
                    throw std::invalid_argument("counts record: counts must be non-negative integers");
                }
                rec.counts[a][outcome_index(it.key())] = it.value().get<uint64_t>();
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("counts record: ") + e.what());
    }
    return rec;
}

CountsRecord simulate_counts(const DensityMatrix &rho, const DirectionSet &ds, uint64_t shots, uint64_t seed,
                             SamplingModel model, std::string settings_ref) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    if (rho.num_qubits() != ds.n()) {
        throw std::invalid_argument("state and settings have different qubit counts");
    }
    CountsRecord rec;
    rec.settings_ref = std::move(settings_ref);
    rec.n = ds.n();
    rec.counts.resize(ds.m());
    for (size_t a = 0; a < ds.m(); a++) {
        Eigen::VectorXd p = born_probabilities(rho, ds, a);
        p /= p.sum();
        auto rng = stream(seed, a, 1);
        auto &row = rec.counts[a];
        row.assign(static_cast<size_t>(p.size()), 0);
        switch (model) {
            case SamplingModel::kMultinomial: {
                uint64_t remaining = shots;
                double mass_left = 1;
                for (Eigen::Index o = 0; o < p.size() && remaining > 0; o++) {
                    if (o + 1 == p.size()) {
                        row[o] = remaining;
                        break;
                    }
                    double q = mass_left > 0 ? std::clamp(p[o] / mass_left, 0.0, 1.0) : 1.0;
                    std::binomial_distribution<uint64_t> binom(remaining, q);
                    row[o] = binom(rng);
                    remaining -= row[o];
                    mass_left -= p[o];
                }
                break;
            }
            case SamplingModel::kPoisson:
                for (Eigen::Index o = 0; o < p.size(); o++) {
                    double mean = static_cast<double>(shots) * p[o];
                    if (mean > 0) {
                        std::poisson_distribution<uint64_t> poisson(mean);
                        row[o] = poisson(rng);
                    }
                }
                break;
            case SamplingModel::kExpected:
                for (Eigen::Index o = 0; o < p.size(); o++) {
                    row[o] = static_cast<uint64_t>(std::llround(static_cast<double>(shots) * p[o]));
                }
                break;
        }
    }
    return rec;
}

Eigen::VectorXd MarginalCounts::stacked_frequencies() const {
    const Eigen::Index m = frequencies.rows();
    const Eigen::Index k = frequencies.cols();
    Eigen::VectorXd f(m * k);
    for (Eigen::Index a = 0; a < m; a++) {
        f.segment(a * k, k) = frequencies.row(a).transpose() / static_cast<double>(m);
    }
    return f;
}

MarginalCounts marginal_from_table(const VertexSubset &subset, const Eigen::MatrixXd &counts) {
    MarginalCounts out;
    out.subset = subset;
    out.counts = counts;
    out.totals = counts.rowwise().sum();
    out.frequencies.resize(counts.rows(), counts.cols());
    for (Eigen::Index a = 0; a < counts.rows(); a++) {
        if (!(out.totals[a] > 0)) {
            throw std::invalid_argument("setting " + std::to_string(a) + " has no counts");
        }
        out.frequencies.row(a) = counts.row(a) / out.totals[a];
    }
    return out;
}

MarginalCounts marginalize_counts(const CountsRecord &rec, const VertexSubset &subset) {
    if (subset.empty()) {
        throw std::invalid_argument("marginal needs at least one qubit");
    }
    for (size_t i = 0; i < subset.size(); i++) {
        if (subset[i] < 0 || static_cast<size_t>(subset[i]) >= rec.n || (i > 0 && subset[i] <= subset[i - 1])) {
            throw std::invalid_argument("marginal qubits must be sorted, distinct and below n");
        }
    }
    const size_t s = subset.size();
    Eigen::MatrixXd table = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rec.counts.size()), Eigen::Index{1} << s);
    for (size_t a = 0; a < rec.counts.size(); a++) {
        for (size_t o = 0; o < rec.counts[a].size(); o++) {
            uint64_t local = 0;
            for (size_t i = 0; i < s; i++) {
                local = (local << 1) | ((o >> (rec.n - 1 - subset[i])) & 1);
            }
            table(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(local)) += static_cast<double>(rec.counts[a][o]);
        }
    }
    return marginal_from_table(subset, table);
}

LinearInversionResult linear_inversion(const Eigen::VectorXd &stacked_frequencies, const MeasurementMap &map) {
    if (stacked_frequencies.size() != map.matrix.rows()) {
        throw std::invalid_argument("frequency vector length does not match the measurement map");
    }
    Eigen::MatrixXcd raw = devectorize_operator(map.pseudoinverse * stacked_frequencies);
    LinearInversionResult out;
    out.hermiticity_deviation = 0.5 * (raw - raw.adjoint()).cwiseAbs().maxCoeff();
    out.estimate = 0.5 * (raw + raw.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(out.estimate, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = eig.eigenvalues().minCoeff();
    out.psd = out.min_eigenvalue >= -1e-12;
    return out;
}

Eigen::MatrixXcd cholesky_factor_from_params(const Eigen::VectorXd &t, Eigen::Index d) {
    if (t.size() != d * d) {
        throw std::invalid_argument("parameter vector must have d^2 entries");
    }
    Eigen::MatrixXcd tri = Eigen::MatrixXcd::Zero(d, d);
    Eigen::Index p = 0;
    for (Eigen::Index i = 0; i < d; i++) {
        tri(i, i) = t[p++];
    }
    for (Eigen::Index i = 1; i < d; i++) {
        for (Eigen::Index j = 0; j < i; j++) {
            tri(i, j) = Complex(t[p], t[p + 1]);
            p += 2;
        }
    }
    return tri;
}

Eigen::MatrixXcd state_from_params(const Eigen::VectorXd &t, Eigen::Index d) {
    Eigen::MatrixXcd tri = cholesky_factor_from_params(t, d);
    Eigen::MatrixXcd a = tri.adjoint() * tri;
    return a / a.trace().real();
}

Eigen::VectorXd params_from_state(const Eigen::MatrixXcd &rho) {
    const Eigen::Index d = rho.rows();
    // Reversing the basis turns the lower Cholesky factor L of JρJ into
    // ρ = T†T with T = (J L J)† lower-triangular.
    Eigen::MatrixXcd reversed = rho.reverse();
    Eigen::LLT<Eigen::MatrixXcd> llt(0.5 * (reversed + reversed.adjoint()));
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("state is not positive definite");
    }
    Eigen::MatrixXcd l = llt.matrixL();
    Eigen::MatrixXcd tri = l.reverse().adjoint();
    Eigen::VectorXd t(d * d);
    Eigen::Index p = 0;
    for (Eigen::Index i = 0; i < d; i++) {
        t[p++] = tri(i, i).real();
    }
    for (Eigen::Index i = 1; i < d; i++) {
        for (Eigen::Index j = 0; j < i; j++) {
            t[p++] = tri(i, j).real();
            t[p++] = tri(i, j).imag();
        }
    }
    return t;
}

MleCost::MleCost(const MarginalCounts &data, const DirectionSet &ds) {
    const size_t s = data.subset.size();
    d_ = Eigen::Index{1} << s;
    if (static_cast<size_t>(data.counts.rows()) != ds.m() || data.counts.cols() != d_) {
        throw std::invalid_argument("count table does not match the settings");
    }
    for (int q : data.subset) {
        if (q < 0 || static_cast<size_t>(q) >= ds.n()) {
            throw std::invalid_argument("marginal qubit outside the direction set");
        }
    }
    for (size_t a = 0; a < ds.m(); a++) {
        if (!(data.totals[static_cast<Eigen::Index>(a)] > 0)) {
            throw std::invalid_argument("setting " + std::to_string(a) + " has no counts");
        }
        for (Eigen::Index o = 0; o < d_; o++) {
            Eigen::MatrixXcd proj = Eigen::MatrixXcd::Ones(1, 1);
            for (size_t i = 0; i < s; i++) {
                double sign = ((o >> (s - 1 - i)) & 1) ? -1.0 : 1.0;
                proj = kron(proj, projector(ds.vector(data.subset[i], a), sign));
            }
            projectors_.push_back(std::move(proj));
            observed_.push_back(data.frequencies(static_cast<Eigen::Index>(a), o));
            totals_.push_back(data.totals[static_cast<Eigen::Index>(a)]);
        }
    }
}

namespace {

constexpr double kProbabilityFloor = 1e-12;

double predicted(const Eigen::MatrixXcd &proj, const Eigen::MatrixXcd &rho) {
    return proj.cwiseProduct(rho.transpose()).sum().real();
}

}  // namespace

double MleCost::operator()(const Eigen::VectorXd &t) const {
    Eigen::MatrixXcd rho = state_from_params(t, d_);
    double cost = 0;
    for (size_t i = 0; i < projectors_.size(); i++) {
        double q = predicted(projectors_[i], rho);
        double diff = observed_[i] - q;
        cost += 0.5 * diff * diff * totals_[i] / std::max(q, kProbabilityFloor);
    }
    return cost;
}

Eigen::VectorXd MleCost::gradient(const Eigen::VectorXd &t) const {
    Eigen::MatrixXcd tri = cholesky_factor_from_params(t, d_);
    Eigen::MatrixXcd a = tri.adjoint() * tri;
    const double tau = a.trace().real();
    Eigen::MatrixXcd rho = a / tau;
    // dL/dA as a Hermitian matrix: Σ_i (dL/dq_i) (Π_i - q_i 1) / τ.
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(d_, d_);
    for (size_t i = 0; i < projectors_.size(); i++) {
        double q = predicted(projectors_[i], rho);
        double diff = observed_[i] - q;
        double dl_dq;
        if (q > kProbabilityFloor) {
            dl_dq = totals_[i] * (-diff / q - 0.5 * diff * diff / (q * q));
        } else {
            dl_dq = -totals_[i] * diff / kProbabilityFloor;
        }
        g += dl_dq * projectors_[i];
        g.diagonal().array() -= dl_dq * q;
    }
    g /= tau;
    // dL = 2 Re tr(G T† dT).
    Eigen::MatrixXcd m = g * tri.adjoint();
    Eigen::VectorXd grad(d_ * d_);
    Eigen::Index p = 0;
    for (Eigen::Index i = 0; i < d_; i++) {
        grad[p++] = 2 * m(i, i).real();
    }
    for (Eigen::Index i = 1; i < d_; i++) {
        for (Eigen::Index j = 0; j < i; j++) {
            grad[p++] = 2 * m(j, i).real();
            grad[p++] = -2 * m(j, i).imag();
        }
    }
    return grad;
}

ReconstructionResult linear_reconstruct(const MarginalCounts &data, const DirectionSet &ds) {
    MeasurementMap map = build_measurement_map(ds, data.subset);
    LinearInversionResult lin = linear_inversion(data.stacked_frequencies(), map);
    ReconstructionResult out;
    out.subset = data.subset;
    out.estimate = lin.estimate;
    out.method = ReconstructionMethod::kLinear;
    out.psd = lin.psd;
    return out;
}

ReconstructionResult mle_reconstruct(const MarginalCounts &data, const DirectionSet &ds,
                                     const std::optional<Eigen::MatrixXcd> &init, const MleOptions &options) {
    MleCost cost(data, ds);
    const Eigen::Index d = cost.dim();
    Eigen::MatrixXcd start;
    if (init) {
        if (init->rows() != d || init->cols() != d) {
            throw std::invalid_argument("initial state has the wrong dimension");
        }
        start = project_to_states(*init);
    } else {
        MeasurementMap map = build_measurement_map(ds, data.subset);
        start = project_to_states(linear_inversion(data.stacked_frequencies(), map).estimate);
    }
    // Keep the start strictly inside the state space so it has a Cholesky factor.
    start = (1 - 1e-3) * start + 1e-3 * Eigen::MatrixXcd::Identity(d, d) / static_cast<double>(d);
    const Eigen::VectorXd t0 = params_from_state(start);

    uint64_t subset_tag = 0;
    for (int q : data.subset) {
        subset_tag = subset_tag * 131 + static_cast<uint64_t>(q) + 1;
    }
    MinimizeOptions opts;
    opts.max_iterations = options.max_iterations;
    opts.f_tolerance = options.f_tolerance;
    Objective f = [&](const Eigen::VectorXd &t) { return cost(t); };
    GradientFn g = [&](const Eigen::VectorXd &t) { return cost.gradient(t); };

    std::optional<MinimizeResult> best;
    for (int r = 0; r < std::max(1, options.restarts); r++) {
        Eigen::VectorXd x0 = t0;
        if (r > 0) {
            auto rng = stream(options.seed, subset_tag, static_cast<uint64_t>(r));
            std::normal_distribution<double> normal(0.0, 0.05 * t0.cwiseAbs().maxCoeff());
            for (auto &v : x0) {
                v += normal(rng);
            }
        }
        MinimizeResult res = minimize_bfgs(f, g, x0, opts);
        if (!best || res.value < best->value) {
            best = std::move(res);
        }
    }
    ReconstructionResult out;
    out.subset = data.subset;
    out.estimate = state_from_params(best->x, d);
    out.method = ReconstructionMethod::kMle;
    out.cost = best->value;
    out.iterations = best->iterations;
    out.cost_history = best->history;
    return out;
}

nlohmann::json matrix_to_json(const Eigen::MatrixXcd &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(row);
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const nlohmann::json &j) {
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::MatrixXcd m(rows, rows);
    for (Eigen::Index i = 0; i < rows; i++) {
        if (static_cast<Eigen::Index>(j[i].size()) != rows) {
            throw std::invalid_argument("matrix JSON is not square");
        }
        for (Eigen::Index k = 0; k < rows; k++) {
            m(i, k) = Complex(j[i][k].at(0).get<double>(), j[i][k].at(1).get<double>());
        }
    }
    return m;
}

nlohmann::json ReconstructionResult::to_json_value() const {
    nlohmann::json j;
    j["cost"] = cost;
    j["estimate"] = matrix_to_json(estimate);
    j["iterations"] = iterations;
    j["method"] = method == ReconstructionMethod::kMle ? "mle" : "linear";
    j["psd"] = psd;
    j["subset"] = subset;
    return j;
}

std::vector<FidelityStats> monte_carlo_errors(const CountsRecord &rec, const DirectionSet &ds,
                                              const std::vector<VertexSubset> &subsets, const DensityMatrix &reference,
                                              int repeats, uint64_t seed, size_t threads) {
    if (repeats < 1) {
        throw std::invalid_argument("need at least one Monte Carlo repeat");
    }
    if (reference.num_qubits() != rec.n || ds.n() != rec.n || ds.m() != rec.counts.size()) {
        throw std::invalid_argument("counts, settings and reference state disagree in size");
    }
    std::vector<Eigen::MatrixXcd> truth;
    for (const auto &s : subsets) {
        truth.push_back(partial_trace(reference.matrix(), s));
    }
    std::vector<std::vector<double>> fid(static_cast<size_t>(repeats), std::vector<double>(subsets.size()));
    parallel_for(static_cast<size_t>(repeats), threads, [&](size_t r) {
        auto rng = stream(seed, r, 2);
        CountsRecord resampled = rec;
        for (auto &row : resampled.counts) {
            for (auto &c : row) {
                if (c > 0) {
                    std::poisson_distribution<uint64_t> poisson(static_cast<double>(c));
                    c = poisson(rng);
                }
            }
        }
        MleOptions opts;
        opts.seed = seed + r;
        for (size_t i = 0; i < subsets.size(); i++) {
            auto est = mle_reconstruct(marginalize_counts(resampled, subsets[i]), ds, std::nullopt, opts);
            fid[r][i] = fidelity(est.estimate, truth[i]);
        }
    });
    std::vector<FidelityStats> out;
    for (size_t i = 0; i < subsets.size(); i++) {
        FidelityStats st;
        st.subset = subsets[i];
        for (int r = 0; r < repeats; r++) {
            st.samples.push_back(fid[r][i]);
            st.mean += fid[r][i];
        }
        st.mean /= repeats;
        double var = 0;
        for (double f : st.samples) {
            var += (f - st.mean) * (f - st.mean);
        }
        st.stddev = std::sqrt(var / repeats);
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace otomo
