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

#include "otomo/pauli.h"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace otomo {

char axis_char(PauliAxis a) {
    return "XYZ"[static_cast<int>(a)];
}

PauliAxis axis_from_char(char c) {
    switch (c) {
        case 'X':
        case 'x':
            return PauliAxis::X;
        case 'Y':
        case 'y':
            return PauliAxis::Y;
        case 'Z':
        case 'z':
            return PauliAxis::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli axis: '") + c + "'");
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<PauliAxis> axes;
    axes.reserve(text.size());
    for (char c : text) {
        axes.push_back(axis_from_char(c));
    }
    return PauliString(std::move(axes));
}

PauliString PauliString::from_code(uint64_t code, size_t n) {
    std::vector<PauliAxis> axes(n);
    for (size_t i = n; i-- > 0;) {
        axes[i] = static_cast<PauliAxis>(code % 3);
        code /= 3;
    }
    return PauliString(std::move(axes));
}

PauliString PauliString::constant(PauliAxis a, size_t n) {
    return PauliString(std::vector<PauliAxis>(n, a));
}

uint64_t PauliString::code() const {
    uint64_t c = 0;
    for (auto a : axes_) {
        c = c * 3 + static_cast<uint64_t>(a);
    }
    return c;
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(axes_.size());
    for (auto a : axes_) {
        s.push_back(axis_char(a));
    }
    return s;
}

std::ostream &operator<<(std::ostream &out, const PauliString &s) {
    return out << s.str();
}

PauliSet::PauliSet(size_t n, std::vector<PauliString> settings) : n_(n), settings_(std::move(settings)) {
    std::set<PauliString> seen;
    for (const auto &s : settings_) {
        if (s.size() != n_) {
            throw std::invalid_argument(
                "Pauli string " + s.str() + " has length " + std::to_string(s.size()) + ", expected " +
                std::to_string(n_));
        }
        if (!seen.insert(s).second) {
            throw std::invalid_argument("duplicate Pauli string " + s.str());
        }
    }
}

PauliSet PauliSet::parse_lines(const std::vector<std::string> &lines) {
    std::vector<PauliString> settings;
    for (const auto &line : lines) {
        settings.push_back(PauliString::parse(line));
    }
    size_t n = settings.empty() ? 0 : settings.front().size();
    return PauliSet(n, std::move(settings));
}

std::string PauliSet::to_text(std::string_view header_comment) const {
    std::ostringstream out;
    if (!header_comment.empty()) {
        std::istringstream in{std::string(header_comment)};
        std::string line;
        while (std::getline(in, line)) {
            out << "# " << line << "\n";
        }
    }
    for (const auto &s : settings_) {
        out << s.str() << "\n";
    }
    return out.str();
}

PauliSet PauliSet::from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    if (lines.empty()) {
        throw std::invalid_argument("Pauli set text contains no settings");
    }
    return parse_lines(lines);
}

PauliString relabel(const PauliString &s, const AxisRelabelling &perm) {
    if (perm.size() != s.size()) {
        throw std::invalid_argument("relabelling size does not match string length");
    }
    std::vector<PauliAxis> axes(s.size());
    for (size_t q = 0; q < s.size(); q++) {
        axes[q] = perm[q][static_cast<int>(s[q])];
    }
    return PauliString(std::move(axes));
}

PauliSet relabel(const PauliSet &set, const AxisRelabelling &perm) {
    std::vector<PauliString> out;
    out.reserve(set.size());
    for (const auto &s : set.settings()) {
        out.push_back(relabel(s, perm));
    }
    return PauliSet(set.n(), std::move(out));
}

PauliSet all_pauli_pairs() {
    return all_pauli_strings(2);
}

PauliSet all_pauli_strings(size_t n) {
    if (n > 12) {
        throw std::invalid_argument("refusing to enumerate 3^n strings for n > 12");
    }
    uint64_t total = 1;
    for (size_t i = 0; i < n; i++) {
        total *= 3;
    }
    std::vector<PauliString> out;
    out.reserve(total);
    for (uint64_t c = 0; c < total; c++) {
        out.push_back(PauliString::from_code(c, n));
    }
    return PauliSet(n, std::move(out));
}

PauliSet four_qubit_pair_set() {
    return PauliSet::parse_lines({"XXXX", "ZYYX", "YZZX", "YYXY", "XZYY", "ZXZY", "ZZXZ", "YXYZ", "XYZZ"});
}

}  // namespace otomo
