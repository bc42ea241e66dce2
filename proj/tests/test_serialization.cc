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

#include "otomo/minimize.h"
#include "otomo/parallel.h"
#include "otomo/serialization.h"

namespace otomo {
namespace {

TEST(CanonicalJson, SortedKeysAndInlineScalarArrays) {
    nlohmann::json j = {{"b", 1}, {"a", {1.5, 2}}, {"c", {{"z", true}, {"y", "s"}}}};
    std::string text = canonical_json(j);
    EXPECT_EQ(text,
              "{\n"
              "  \"a\": [1.5, 2],\n"
              "  \"b\": 1,\n"
              "  \"c\": {\n"
              "    \"y\": \"s\",\n"
              "    \"z\": true\n"
              "  }\n"
              "}\n");
    EXPECT_EQ(nlohmann::json::parse(text), j);
}

TEST(CanonicalJson, DoublesRoundTripExactly) {
    const double x = 0.1 + 0.2;
    nlohmann::json j = {{"x", x}};
    EXPECT_EQ(nlohmann::json::parse(canonical_json(j))["x"].get<double>(), x);
    EXPECT_THROW(canonical_json(nlohmann::json{{"x", NAN}}), std::invalid_argument);
}

TEST(Fingerprint, Fnv1a) {
    EXPECT_EQ(fingerprint(""), "cbf29ce484222325");
    EXPECT_EQ(fingerprint("a"), "af63dc4c8601ec8c");
}

TEST(Files, ReadMissingFileNamesPath) {
    try {
        read_file("/nonexistent/otomo-file");
        FAIL();
    } catch (const std::runtime_error &e) {
        EXPECT_NE(std::string(e.what()).find("/nonexistent/otomo-file"), std::string::npos);
    }
}

TEST(Minimize, Rosenbrock) {
    auto f = [](const Eigen::VectorXd &x) { return std::pow(1 - x[0], 2) + 100 * std::pow(x[1] - x[0] * x[0], 2); };
    auto g = [](const Eigen::VectorXd &x) {
        Eigen::VectorXd d(2);
        d[0] = -2 * (1 - x[0]) - 400 * x[0] * (x[1] - x[0] * x[0]);
        d[1] = 200 * (x[1] - x[0] * x[0]);
        return d;
    };
    MinimizeOptions opts;
    opts.max_iterations = 2000;
    opts.f_tolerance = 1e-15;
    MinimizeResult r = minimize_bfgs(f, g, Eigen::Vector2d(-1.2, 1), opts);
    EXPECT_NEAR(r.x[0], 1.0, 1e-4);
    EXPECT_NEAR(r.x[1], 1.0, 1e-4);
    for (size_t i = 1; i < r.history.size(); i++) {
        EXPECT_LE(r.history[i], r.history[i - 1]);
    }
}

TEST(Minimize, CentralDifferenceGradient) {
    auto f = [](const Eigen::VectorXd &x) { return std::sin(x[0]) * x[1] * x[1]; };
    Eigen::VectorXd g = central_difference_gradient(f, Eigen::Vector2d(0.4, 2.0), 1e-5);
    EXPECT_NEAR(g[0], std::cos(0.4) * 4, 1e-8);
    EXPECT_NEAR(g[1], std::sin(0.4) * 4, 1e-8);
}

TEST(ParallelFor, EveryIndexOnceAndErrorsPropagate) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](size_t i) { hits[i]++; });
    EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
    EXPECT_THROW(parallel_for(10, 3,
                              [](size_t i) {
                                  if (i == 5) {
                                      throw std::runtime_error("x");
                                  }
                              }),
                 std::runtime_error);
}

}  // namespace
}  // namespace otomo
