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


// Command-line front end: design, analyze, simulate, reconstruct.
//
// Exit codes: 0 success, 2 input error, 3 budget exhausted or settings
// incomplete, 4 numerical failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otomo/confidence.h"
#include "otomo/cover_solver.h"
#include "otomo/direction_optimizer.h"
#include "otomo/directions.h"
#include "otomo/hypergraph.h"
#include "otomo/marginal_design.h"
#include "otomo/measurement_map.h"
#include "otomo/parallel.h"
#include "otomo/quantum_state.h"
#include "otomo/serialization.h"
#include "otomo/tomography.h"

namespace {

using namespace otomo;
using json = nlohmann::json;

constexpr const char *kVersion = "otomo 0.1.0";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Provenance of one invocation. Output files carry the name of a sidecar
/// `<file>.manifest.json`; stdout output embeds the manifest without timing.
class RunManifest {
   public:
    RunManifest(int argc, char **argv) : start_(std::chrono::steady_clock::now()) {
        for (int i = 0; i < argc; i++) {
            args_.push_back(argv[i]);
        }
    }
    void set_seed(uint64_t seed) {
        seed_ = seed;
    }
    void set_threads(size_t threads) {
        threads_ = threads;
    }
    void add_input(const std::string &name, std::string_view content) {
        inputs_[name] = fingerprint(content);
    }

    json value(bool with_timing) const {
        json j;
        j["command_line"] = args_;
        j["inputs"] = inputs_;
        if (seed_) {
            j["seed"] = *seed_;
        }
        j["threads"] = threads_;
        j["version"] = kVersion;
        if (with_timing) {
            j["wall_time_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }
        return j;
    }

    static std::string sidecar(const std::string &path) {
        return path + ".manifest.json";
    }
    static std::string sidecar_name(const std::string &path) {
        return std::filesystem::path(sidecar(path)).filename().string();
    }

    /// Writes `text` to `path` (stdout when empty) plus the sidecar manifest.
    void emit(const std::string &path, const std::string &text) const {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        write_file(path, text);
        json j = value(true);
        j["output"] = std::filesystem::path(path).filename().string();
        write_file(sidecar(path), canonical_json(j));
    }

    /// JSON output: adds a "manifest" key (sidecar name, or the inline
    /// manifest for stdout).
    void emit_json(const std::string &path, json j) const {
        if (path.empty() || path == "-") {
            j["manifest"] = value(false);
        } else {
            j["manifest"] = sidecar_name(path);
        }
        emit(path, canonical_json(j));
    }

   private:
    std::vector<std::string> args_;
    std::map<std::string, std::string> inputs_;
    std::optional<uint64_t> seed_;
    size_t threads_ = 1;
    std::chrono::steady_clock::time_point start_;
};

struct CommonOptions {
    uint64_t seed = 1;
    size_t threads = 0;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--seed", seed, "64-bit random seed");
        cmd->add_option("--threads", threads, "worker threads (default: $OTOMO_THREADS or all cores)");
    }
    size_t resolved_threads() const {
        return threads ? threads : default_thread_count();
    }
};

std::string read_input(RunManifest &manifest, const std::string &path) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::runtime_error &e) {
        throw InputError(e.what());
    }
    manifest.add_input(path, text);
    return text;
}

/// A measurement plan given as a preset name, a Pauli text file, or a
/// direction-set JSON file.
struct LoadedSettings {
    DirectionSet directions;
    std::optional<PauliSet> pauli;
    std::string ref;
};

LoadedSettings load_settings(RunManifest &manifest, const std::string &spec) {
    LoadedSettings out;
    if (spec == "pauli9_2q" || spec == "pauli9") {
        out.pauli = all_pauli_pairs();
    } else if (spec == "pauli9_4q") {
        out.pauli = four_qubit_pair_set();
    } else if (spec == "paper_table_a1") {
        out.directions = paper_table_a1();
        out.ref = spec;
        return out;
    } else {
        std::string text = read_input(manifest, spec);
        out.ref = fingerprint(text);
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') {
            out.directions = DirectionSet::from_json(text);
            return out;
        }
        out.pauli = PauliSet::from_text(text);
        out.directions = pauli_to_directions(*out.pauli);
        return out;
    }
    out.ref = spec;
    out.directions = pauli_to_directions(*out.pauli);
    return out;
}

DensityMatrix parse_state(const std::string &spec) {
    auto fail = [&] { return InputError("unknown state '" + spec + "' (expected dicke:N:M or noise:P)"); };
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw fail();
    }
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    try {
        size_t used = 0;
        if (kind == "dicke") {
            auto c2 = rest.find(':');
            if (c2 == std::string::npos) {
                throw fail();
            }
            std::string a = rest.substr(0, c2);
            std::string b = rest.substr(c2 + 1);
            long n = std::stol(a, &used);
            if (used != a.size()) {
                throw fail();
            }
            long m = std::stol(b, &used);
            if (used != b.size() || n < 1 || m < 0 || m > n || n > static_cast<long>(kMaxStateQubits)) {
                throw fail();
            }
            return dicke_state(static_cast<size_t>(n), static_cast<size_t>(m));
        }
        if (kind == "noise") {
            double p = std::stod(rest, &used);
            if (used != rest.size() || !(p >= 0 && p <= 1)) {
                throw fail();
            }
            return noise_state(p);
        }
    } catch (const std::logic_error &) {
        throw fail();
    }
    throw fail();
}

std::vector<VertexSubset> parse_subsets(const std::string &spec, size_t n) {
    if (spec == "all-pairs") {
        return all_subsets(n, 2);
    }
    std::vector<VertexSubset> out;
    std::stringstream groups(spec);
    std::string group;
    while (std::getline(groups, group, ';')) {
        VertexSubset s;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size() || v < 0 || static_cast<size_t>(v) >= n) {
                    throw InputError("");
                }
                s.push_back(v);
            } catch (const std::exception &) {
                throw InputError("bad subset list '" + spec + "' (expected all-pairs or e.g. 0,1;2,3)");
            }
        }
        std::sort(s.begin(), s.end());
        if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw InputError("bad subset list '" + spec + "'");
        }
        out.push_back(s);
    }
    if (out.empty()) {
        throw InputError("no subsets given");
    }
    return out;
}

json solution_json(const PauliSet &set) {
    json rows = json::array();
    for (const auto &s : set.settings()) {
        rows.push_back(s.str());
    }
    return rows;
}

// ---------------------------------------------------------------- design-pauli

struct DesignPauliOptions {
    std::string connectivity;
    std::string preset;
    std::string method = "exact";
    double budget = 600;
    uint64_t max_nodes = UINT64_MAX;
    std::string base;
    std::string out;
    std::string report;
    std::string lp;
    CommonOptions common;
};

int run_design_pauli(const DesignPauliOptions &o, RunManifest &manifest) {
    manifest.set_threads(o.common.resolved_threads());
    if (o.connectivity.empty() == o.preset.empty()) {
        throw InputError("give exactly one of --connectivity and --preset");
    }
    ConnectivityHypergraph h = o.preset.empty()
                                   ? ConnectivityHypergraph::from_json(read_input(manifest, o.connectivity))
                                   : preset_connectivity(o.preset);
    const size_t k = h.max_edge_size();
    SolveBudget budget;
    budget.max_time = std::chrono::duration<double>(o.budget);
    budget.max_nodes = o.max_nodes;

    if (!o.lp.empty()) {
        if (h.n() > kMaxEnumeratedQubits) {
            throw InputError("LP export enumerates all 3^n strings and is limited to 12 qubits");
        }
        manifest.emit(o.lp, ilp_export(CoverInstance::from_hypergraph(h)));
    }

    PauliSet result;
    json report;
    report["method"] = o.method;
    if (o.method == "exact" || o.method == "greedy") {
        if (h.n() > kMaxEnumeratedQubits) {
            throw InputError("the " + o.method + " method enumerates all 3^n strings and is limited to 12 qubits");
        }
        if (o.method == "exact") {
            SolveReport r = solve_minimal_cover(h, budget);
            result = r.solution;
            report["budget_hit"] = r.budget_hit;
            report["lower_bound"] = r.lower_bound;
            report["nodes_explored"] = r.nodes_explored;
            report["optimal"] = r.optimal;
        } else {
            result = greedy_cover(CoverInstance::from_hypergraph(h));
        }
    } else if (o.method == "colouring") {
        Colouring colouring = strong_chromatic_number(h);
        report["colours"] = colouring.colours;
        report["colouring"] = colouring.colour_of;
        report["colouring_exact"] = colouring.exact;
        PauliSet base;
        if (!o.base.empty()) {
            base = PauliSet::from_text(read_input(manifest, o.base));
        } else if (k == 2 && colouring.colours <= 4) {
            base = four_qubit_pair_set();
        } else {
            size_t base_n = std::max<size_t>(static_cast<size_t>(colouring.colours), k);
            if (base_n > kMaxEnumeratedQubits) {
                throw InputError("no base set given and the colouring needs more than 12 colours");
            }
            base = solve_minimal_cover(complete_hypergraph(base_n, k), budget).solution;
        }
        report["base_size"] = base.size();
        result = colouring_construction(h, base, colouring);
    } else if (o.method == "recursive") {
        if (k > 2) {
            throw InputError("the recursive method covers pairs only");
        }
        if (h.n() < 2) {
            throw InputError("the recursive method needs at least two qubits");
        }
        result = recursive_cover(h.n(), minimal_pair_bases(5, budget));
    } else {
        throw InputError("unknown method '" + o.method + "' (exact, greedy, colouring, recursive)");
    }

    CoverReport check = verify_cover(result, h);
    if (!check.complete) {
        if (report.value("budget_hit", false)) {
            throw IncompleteError("budget exhausted without a complete cover");
        }
        throw std::runtime_error("internal error: constructed set is not a complete cover");
    }
    PhiBounds bounds = phi_bounds(static_cast<int>(h.n()), static_cast<int>(k), &h);
    int lower = std::max(bounds.lower, report.value("lower_bound", 0));
    if (!report.contains("optimal")) {
        report["optimal"] = static_cast<int>(result.size()) <= lower;
        report["budget_hit"] = false;
    }
    report["lower_bound"] = lower;
    report["multiplicity_max"] = check.max_multiplicity;
    report["multiplicity_min"] = check.min_multiplicity;
    report["n"] = h.n();
    report["size"] = result.size();
    report["solution"] = solution_json(result);
    report["verified"] = true;

    std::string header = std::to_string(result.size()) + " settings, n=" + std::to_string(h.n()) + ", method " +
                         o.method;
    if (!o.out.empty() && o.out != "-") {
        header += "\nmanifest: " + RunManifest::sidecar_name(o.out);
    }
    manifest.emit(o.out, result.to_text(header));
    std::string report_path = o.report;
    if (report_path.empty() && !o.out.empty() && o.out != "-") {
        report_path = o.out + ".report.json";
    }
    if (report_path.empty()) {
        std::cerr << canonical_json(report);
    } else {
        manifest.emit_json(report_path, report);
    }
    return 0;
}

// ----------------------------------------------------------- design-directions

struct DesignDirectionsOptions {
    size_t n = 6;
    size_t k = 2;
    std::string method = "random";
    std::string preset;
    double w2 = std::cos(std::numbers::pi / 5);
    std::string constraint = "free";
    std::string partitions = "consecutive";
    int restarts = 20;
    int max_iterations = 300;
    double gradient_step = 1e-5;
    std::string out;
    std::string report;
    CommonOptions common;
};

json direction_report(const DirectionSet &ds, size_t k, double w1, double w2, size_t threads) {
    auto completeness = completeness_check(ds, k);
    json j;
    j["complete"] = completeness.complete;
    j["k"] = k;
    j["m"] = ds.m();
    j["n"] = ds.n();
    j["objective"] = portfolio_objective(ds, k, w1, w2);
    j["w1"] = w1;
    j["w2"] = w2;
    j["worst_abs_det"] = completeness.worst_det;
    j["worst_subset"] = completeness.worst_subset;
    if (!completeness.complete) {
        return j;
    }
    SigmaReport sig = sigma_max(ds, k, threads);
    j["sigma_max"] = sig.sigma_max;
    json per = json::array();
    for (const auto &s : all_subsets(ds.n(), k)) {
        per.push_back({{"abs_det", std::abs(z_matrix(ds, s, k).fullPivLu().determinant())},
                       {"sigma", sig.per_subset.at(s)},
                       {"subset", s}});
    }
    j["per_subset"] = per;
    return j;
}

int run_design_directions(const DesignDirectionsOptions &o, RunManifest &manifest) {
    const size_t threads = o.common.resolved_threads();
    manifest.set_threads(threads);
    manifest.set_seed(o.common.seed);
    if (o.w2 < 0 || o.w2 > 1) {
        throw InputError("--w2 must lie in [0, 1]");
    }
    const double w1 = std::sqrt(1 - o.w2 * o.w2);
    DirectionSet ds;
    json extra;
    if (!o.preset.empty()) {
        if (o.preset != "paper_table_a1") {
            throw InputError("unknown direction preset '" + o.preset + "'");
        }
        ds = paper_table_a1();
    } else {
        if (o.n < 1 || o.k < 1 || o.k > o.n || o.k > 4) {
            throw InputError("need 1 <= k <= n and k <= 4");
        }
        size_t m = 1;
        for (size_t i = 0; i < o.k; i++) {
            m *= 3;
        }
        if (o.method == "random") {
            ds = sample_uniform_directions(o.n, m, o.common.seed);
        } else if (o.method == "optimize") {
            OptimizerConfig cfg = OptimizerConfig::with_w2(o.w2);
            cfg.restarts = o.restarts;
            cfg.max_iterations = o.max_iterations;
            cfg.gradient_step = o.gradient_step;
            if (o.constraint == "orthonormal") {
                cfg.constraint = DirectionConstraint::kOrthonormal;
                if (o.partitions == "paper") {
                    if (o.n != 6 || o.k != 2) {
                        throw InputError("the paper partitions exist for n=6, k=2 only");
                    }
                    cfg.partitions = paper_table_a1_partitions();
                } else if (o.partitions != "consecutive") {
                    throw InputError("--partitions must be consecutive or paper");
                }
            } else if (o.constraint != "free") {
                throw InputError("--constraint must be free or orthonormal");
            }
            try {
                cfg.validate(o.n, m);
            } catch (const std::invalid_argument &e) {
                throw InputError(e.what());
            }
            auto res = optimize_directions(o.n, o.k, cfg, o.common.seed, threads);
            ds = res.directions;
            extra["best_restart"] = res.best_restart;
            extra["restart_objectives"] = res.restart_objectives;
        } else {
            throw InputError("unknown method '" + o.method + "' (random, optimize)");
        }
    }
    size_t k = o.preset.empty() ? o.k : 2;
    json report = direction_report(ds, k, w1, o.w2, threads);
    for (auto it = extra.begin(); it != extra.end(); ++it) {
        report[it.key()] = it.value();
    }
    report["method"] = o.preset.empty() ? o.method : "preset:" + o.preset;
    if (!report["complete"].get<bool>()) {
        throw IncompleteError("direction set failed the completeness check (worst |det| " +
                              std::to_string(report["worst_abs_det"].get<double>()) + ")");
    }
    json dsj = json::parse(ds.to_json());
    if (!o.out.empty() && o.out != "-") {
        dsj["manifest"] = RunManifest::sidecar_name(o.out);
        manifest.emit(o.out, canonical_json(dsj));
    } else {
        manifest.emit_json("", dsj);
    }
    std::string report_path = o.report;
    if (report_path.empty() && !o.out.empty() && o.out != "-") {
        report_path = o.out + ".report.json";
    }
    if (report_path.empty()) {
        std::cerr << canonical_json(report);
    } else {
        manifest.emit_json(report_path, report);
    }
    return 0;
}

// --------------------------------------------------------------------- analyze

struct AnalyzeOptions {
    std::string settings;
    size_t k = 2;
    std::vector<double> sigmas;
    double sigma_ref = 5;
    double radius = 0.1;
    double delta = 0.05;
    size_t n = 6;
    int seeds = 100;
    int restarts = 5;
    std::vector<double> w2_grid = {0.0, 0.30901699437494745, 0.58778525229247314, 0.80901699437494745,
                                   0.95105651629515353, 1.0};
    std::string out;
    CommonOptions common;
};

int run_analyze_sigma(const AnalyzeOptions &o, RunManifest &manifest) {
    const size_t threads = o.common.resolved_threads();
    manifest.set_threads(threads);
    if (o.settings.empty()) {
        throw InputError("--settings is required");
    }
    LoadedSettings s = load_settings(manifest, o.settings);
    if (o.k < 1 || o.k > s.directions.n()) {
        throw InputError("--k must lie between 1 and the qubit count");
    }
    SigmaReport r = sigma_max(s.directions, o.k, threads);
    json per = json::array();
    for (const auto &[subset, sigma] : r.per_subset) {
        per.push_back({{"sigma", sigma}, {"subset", subset}});
    }
    json j;
    j["k"] = o.k;
    j["m"] = s.directions.m();
    j["n"] = s.directions.n();
    j["per_subset"] = per;
    j["settings"] = s.ref;
    j["sigma_max"] = r.sigma_max;
    manifest.emit_json(o.out, j);
    return 0;
}

int run_analyze_samples(const AnalyzeOptions &o, RunManifest &manifest) {
    if (o.sigmas.empty()) {
        throw InputError("give at least one --sigma");
    }
    try {
        json rows = json::array();
        uint64_t ref = samples_for_radius(o.sigma_ref, o.radius, o.delta);
        for (double sigma : o.sigmas) {
            uint64_t n = samples_for_radius(sigma, o.radius, o.delta);
            double ratio = sample_ratio(sigma, o.sigma_ref, o.radius, o.delta);
            rows.push_back({{"extra_percent", 100 * (ratio - 1)},
                            {"ratio", ratio},
                            {"ratio_integer", static_cast<double>(n) / static_cast<double>(ref)},
                            {"samples", n},
                            {"sigma", sigma}});
        }
        json j;
        j["delta"] = o.delta;
        j["radius"] = o.radius;
        j["reference"] = {{"samples", ref}, {"sigma", o.sigma_ref}};
        j["rows"] = rows;
        manifest.emit_json(o.out, j);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    return 0;
}

int run_analyze_sweep(const AnalyzeOptions &o, RunManifest &manifest) {
    const size_t threads = o.common.resolved_threads();
    manifest.set_threads(threads);
    manifest.set_seed(o.common.seed);
    if (o.n < o.k || o.k < 1 || o.k > 3 || o.seeds < 0) {
        throw InputError("need 1 <= k <= min(n, 3) and --seeds >= 0");
    }
    size_t m = 1;
    for (size_t i = 0; i < o.k; i++) {
        m *= 3;
    }
    auto stats = [&](const DirectionSet &ds) {
        std::vector<double> dets;
        for (const auto &s : all_subsets(ds.n(), o.k)) {
            dets.push_back(std::abs(z_matrix(ds, s, o.k).fullPivLu().determinant()));
        }
        double mean = 0;
        for (double d : dets) {
            mean += d;
        }
        mean /= static_cast<double>(dets.size());
        double var = 0;
        for (double d : dets) {
            var += (d - mean) * (d - mean);
        }
        return std::pair{mean, std::sqrt(var / static_cast<double>(dets.size()))};
    };
    auto fmt = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string csv;
    if (!o.out.empty() && o.out != "-") {
        csv += "# manifest: " + RunManifest::sidecar_name(o.out) + "\n";
    }
    csv += "kind,index,w2,mean_abs_det,std_abs_det,sigma_max\n";
    std::vector<std::string> lines(static_cast<size_t>(o.seeds));
    parallel_for(lines.size(), threads, [&](size_t i) {
        DirectionSet ds = sample_uniform_directions(o.n, m, o.common.seed + i);
        auto [mean, sd] = stats(ds);
        double sigma = completeness_check(ds, o.k).complete ? sigma_max(ds, o.k).sigma_max : INFINITY;
        lines[i] = "random," + std::to_string(i) + ",," + fmt(mean) + "," + fmt(sd) + "," +
                   (std::isfinite(sigma) ? fmt(sigma) : "inf") + "\n";
    });
    for (const auto &l : lines) {
        csv += l;
    }
    for (size_t g = 0; g < o.w2_grid.size(); g++) {
        OptimizerConfig cfg = OptimizerConfig::with_w2(o.w2_grid[g]);
        cfg.restarts = o.restarts;
        auto res = optimize_directions(o.n, o.k, cfg, o.common.seed + g, threads);
        auto [mean, sd] = stats(res.directions);
        csv += "optimized," + std::to_string(g) + "," + fmt(o.w2_grid[g]) + "," + fmt(mean) + "," + fmt(sd) + "," +
               fmt(res.sigma_max) + "\n";
    }
    manifest.emit(o.out, csv);
    return 0;
}

// -------------------------------------------------------------------- simulate

struct SimulateOptions {
    std::string state;
    std::string settings;
    uint64_t shots = 10000;
    std::string model = "multinomial";
    std::string out;
    CommonOptions common;
};

int run_simulate(const SimulateOptions &o, RunManifest &manifest) {
    manifest.set_seed(o.common.seed);
    manifest.set_threads(1);
    DensityMatrix rho = parse_state(o.state);
    LoadedSettings s = load_settings(manifest, o.settings);
    if (s.directions.n() != rho.num_qubits()) {
        throw InputError("state has " + std::to_string(rho.num_qubits()) + " qubits but the settings have " +
                         std::to_string(s.directions.n()));
    }
    if (o.shots < 1) {
        throw InputError("--shots must be at least 1");
    }
    SamplingModel model;
    if (o.model == "multinomial") {
        model = SamplingModel::kMultinomial;
    } else if (o.model == "poisson") {
        model = SamplingModel::kPoisson;
    } else if (o.model == "expected") {
        model = SamplingModel::kExpected;
    } else {
        throw InputError("--model must be multinomial, poisson or expected");
    }
    CountsRecord rec = simulate_counts(rho, s.directions, o.shots, o.common.seed, model, s.ref);
    json j = json::parse(rec.to_json());
    manifest.emit_json(o.out, j);
    return 0;
}

// ----------------------------------------------------------------- reconstruct

struct ReconstructOptions {
    std::string counts;
    std::string settings;
    std::string subsets = "all-pairs";
    std::string method = "mle";
    std::string reference;
    int mc_repeats = 0;
    std::string out;
    CommonOptions common;
};

int run_reconstruct(const ReconstructOptions &o, RunManifest &manifest) {
    const size_t threads = o.common.resolved_threads();
    manifest.set_threads(threads);
    manifest.set_seed(o.common.seed);
    CountsRecord rec;
    try {
        rec = CountsRecord::from_json(read_input(manifest, o.counts));
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    LoadedSettings s = load_settings(manifest, o.settings);
    if (s.directions.n() != rec.n || s.directions.m() != rec.counts.size()) {
        throw InputError("counts record does not match the settings (qubits or setting count differ)");
    }
    if (o.method != "mle" && o.method != "linear") {
        throw InputError("--method must be mle or linear");
    }
    if (o.mc_repeats < 0) {
        throw InputError("--mc-repeats must be non-negative");
    }
    auto subsets = parse_subsets(o.subsets, rec.n);
    std::optional<DensityMatrix> reference;
    if (!o.reference.empty()) {
        reference = parse_state(o.reference);
        if (reference->num_qubits() != rec.n) {
            throw InputError("reference state has the wrong number of qubits");
        }
    }
    if (o.mc_repeats > 0 && !reference) {
        throw InputError("--mc-repeats needs --reference");
    }

    std::vector<json> marginals(subsets.size());
    parallel_for(subsets.size(), threads, [&](size_t i) {
        MarginalCounts data = marginalize_counts(rec, subsets[i]);
        ReconstructionResult r;
        if (o.method == "mle") {
            MleOptions opts;
            opts.seed = o.common.seed;
            r = mle_reconstruct(data, s.directions, std::nullopt, opts);
        } else {
            r = linear_reconstruct(data, s.directions);
        }
        json j = r.to_json_value();
        if (reference) {
            Eigen::MatrixXcd truth = partial_trace(reference->matrix(), subsets[i]);
            j["frobenius_error"] = (r.estimate - truth).norm();
            if (r.psd) {
                j["fidelity"] = fidelity(project_to_states(r.estimate), truth);
            }
        }
        marginals[i] = j;
    });
    if (o.mc_repeats > 0) {
        auto stats = monte_carlo_errors(rec, s.directions, subsets, *reference, o.mc_repeats, o.common.seed, threads);
        for (size_t i = 0; i < subsets.size(); i++) {
            marginals[i]["fidelity_mean"] = stats[i].mean;
            marginals[i]["fidelity_std"] = stats[i].stddev;
        }
    }
    json j;
    j["counts"] = fingerprint(canonical_json(json::parse(rec.to_json())));
    j["marginals"] = marginals;
    j["mc_repeats"] = o.mc_repeats;
    j["method"] = o.method;
    if (reference) {
        j["reference"] = o.reference;
    }
    j["settings"] = s.ref;
    manifest.emit_json(o.out, j);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Measurement design and simulation for overlapping qubit tomography"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunManifest manifest(argc, argv);

    DesignPauliOptions dp;
    auto *design_pauli = app.add_subcommand("design-pauli", "minimal Pauli settings covering all requested marginals");
    design_pauli->add_option("--connectivity", dp.connectivity, "hypergraph JSON {\"n\":..,\"edges\":[[..],..]}");
    design_pauli->add_option("--preset", dp.preset, "complete:n:k, ring:n:k, line:n:k, grid16 or g7");
    design_pauli->add_option("--method", dp.method, "exact, greedy, colouring or recursive");
    design_pauli->add_option("--budget", dp.budget, "search time budget in seconds");
    design_pauli->add_option("--max-nodes", dp.max_nodes, "search node budget");
    design_pauli->add_option("--base", dp.base, "base Pauli set for the colouring method");
    design_pauli->add_option("--out", dp.out, "Pauli set output (text, one string per line)");
    design_pauli->add_option("--report", dp.report, "report JSON (default <out>.report.json)");
    design_pauli->add_option("--lp", dp.lp, "also write the covering program as a CPLEX LP file");
    dp.common.add_to(design_pauli);

    DesignDirectionsOptions dd;
    auto *design_dirs = app.add_subcommand("design-directions", "general product measurement directions");
    design_dirs->add_option("--n", dd.n, "qubits");
    design_dirs->add_option("--k", dd.k, "marginal size");
    design_dirs->add_option("--method", dd.method, "random or optimize");
    design_dirs->add_option("--preset", dd.preset, "paper_table_a1");
    design_dirs->add_option("--w2", dd.w2, "spread penalty weight (w1 = sqrt(1 - w2^2))");
    design_dirs->add_option("--constraint", dd.constraint, "free or orthonormal");
    design_dirs->add_option("--partitions", dd.partitions, "orthonormal triples: consecutive or paper");
    design_dirs->add_option("--restarts", dd.restarts, "optimizer restarts");
    design_dirs->add_option("--max-iters", dd.max_iterations, "iterations per restart");
    design_dirs->add_option("--gradient-step", dd.gradient_step, "central-difference step");
    design_dirs->add_option("--out", dd.out, "direction set JSON output");
    design_dirs->add_option("--report", dd.report, "report JSON (default <out>.report.json)");
    dd.common.add_to(design_dirs);

    AnalyzeOptions an;
    auto *analyze = app.add_subcommand("analyze", "confidence-region analysis");
    analyze->require_subcommand(1);
    auto *an_sigma = analyze->add_subcommand("sigma", "sigma_max of a measurement plan");
    an_sigma->add_option("--settings", an.settings, "Pauli text, direction JSON, pauli9_2q or paper_table_a1");
    an_sigma->add_option("--k", an.k, "marginal size");
    an_sigma->add_option("--out", an.out, "output JSON (default stdout)");
    an.common.add_to(an_sigma);
    auto *an_samples = analyze->add_subcommand("samples", "samples needed for a confidence radius");
    an_samples->add_option("--sigma", an.sigmas, "sigma values (repeatable)");
    an_samples->add_option("--sigma-ref", an.sigma_ref, "reference sigma");
    an_samples->add_option("--radius", an.radius, "Hilbert-Schmidt radius eps*sigma");
    an_samples->add_option("--delta", an.delta, "failure probability");
    an_samples->add_option("--out", an.out, "output JSON (default stdout)");
    auto *an_sweep = analyze->add_subcommand("portfolio-sweep", "mean vs spread of |det Z_S|, random and optimized");
    an_sweep->add_option("--n", an.n, "qubits");
    an_sweep->add_option("--k", an.k, "marginal size");
    an_sweep->add_option("--seeds", an.seeds, "random direction sets");
    an_sweep->add_option("--restarts", an.restarts, "optimizer restarts per weight");
    an_sweep->add_option("--sweep-grid,--w2-grid", an.w2_grid, "weights for optimized rows")->delimiter(',');
    an_sweep->add_option("--out", an.out, "output CSV (default stdout)");
    an.common.add_to(an_sweep);

    SimulateOptions sim;
    auto *simulate = app.add_subcommand("simulate", "sample measurement counts from a state");
    simulate->add_option("--state", sim.state, "dicke:N:M or noise:P")->required();
    simulate->add_option("--settings", sim.settings, "Pauli text, direction JSON or preset")->required();
    simulate->add_option("--shots", sim.shots, "shots per setting");
    simulate->add_option("--model", sim.model, "multinomial, poisson or expected");
    simulate->add_option("--out", sim.out, "counts JSON (default stdout)");
    sim.common.add_to(simulate);

    ReconstructOptions rc;
    auto *reconstruct = app.add_subcommand("reconstruct", "reconstruct marginals from counts");
    reconstruct->add_option("--counts", rc.counts, "counts JSON")->required();
    reconstruct->add_option("--settings", rc.settings, "Pauli text, direction JSON or preset")->required();
    reconstruct->add_option("--subsets", rc.subsets, "all-pairs or e.g. 0,1;2,3");
    reconstruct->add_option("--method", rc.method, "mle or linear");
    reconstruct->add_option("--reference", rc.reference, "true state for fidelities, e.g. dicke:6:3");
    reconstruct->add_option("--mc-repeats", rc.mc_repeats, "Poisson resamples for error bars");
    reconstruct->add_option("--out", rc.out, "output JSON (default stdout)");
    rc.common.add_to(reconstruct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (design_pauli->parsed()) {
            return run_design_pauli(dp, manifest);
        }
        if (design_dirs->parsed()) {
            return run_design_directions(dd, manifest);
        }
        if (an_sigma->parsed()) {
            return run_analyze_sigma(an, manifest);
        }
        if (an_samples->parsed()) {
            return run_analyze_samples(an, manifest);
        }
        if (an_sweep->parsed()) {
            return run_analyze_sweep(an, manifest);
        }
        if (simulate->parsed()) {
            return run_simulate(sim, manifest);
        }
        if (reconstruct->parsed()) {
            return run_reconstruct(rc, manifest);
        }
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IncompleteError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IncompleteSettingsError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception &e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
