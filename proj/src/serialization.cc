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


#include "otomo/serialization.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace otomo {

namespace {

void emit(const nlohmann::json &j, int depth, std::string &out) {
    auto indent = [&](int d) { out.append(static_cast<size_t>(2 * d), ' '); };
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out += ",\n";
                }
                first = false;
                indent(depth + 1);
                out += nlohmann::json(it.key()).dump();
                out += ": ";
                emit(it.value(), depth + 1, out);
            }
            out += "\n";
            indent(depth);
            out += "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line; nested containers break lines.
            bool scalars = std::all_of(j.begin(), j.end(), [](const auto &x) { return x.is_primitive(); });
            if (scalars) {
                out += "[";
                for (size_t i = 0; i < j.size(); i++) {
                    if (i) {
                        out += ", ";
                    }
                    emit(j[i], depth + 1, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (size_t i = 0; i < j.size(); i++) {
                if (i) {
                    out += ",\n";
                }
                indent(depth + 1);
                emit(j[i], depth + 1, out);
            }
            out += "\n";
            indent(depth);
            out += "]";
            return;
        }
        case nlohmann::json::value_t::number_float: {
            double v = j.get<double>();
            if (!std::isfinite(v)) {
                throw std::invalid_argument("cannot serialize a non-finite number");
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            std::string s = buf;
            if (s.find_first_of(".eE") == std::string::npos) {
                s += ".0";
            }
            out += s;
            return;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string canonical_json(const nlohmann::json &j) {
    std::string out;
    emit(j, 0, out);
    out += "\n";
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

std::string fingerprint(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace otomo
