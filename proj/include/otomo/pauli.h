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

#ifndef OTOMO_PAULI_H
#define OTOMO_PAULI_H

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace otomo {

/// Single-qubit Pauli observable. The numeric value is the internal index.
enum class PauliAxis : uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<PauliAxis, 3> kAllAxes = {PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

char axis_char(PauliAxis a);
PauliAxis axis_from_char(char c);

/// An n-qubit Pauli setting. Position i acts on qubit i (leftmost = qubit 0).
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {
    }
    /// Parses "XYZZ"-style text; throws std::invalid_argument on other characters.
    static PauliString parse(std::string_view text);
    /// The string of length n whose base-3 value (qubit 0 most significant) is `code`.
    static PauliString from_code(uint64_t code, size_t n);
    static PauliString constant(PauliAxis a, size_t n);

    size_t size() const {
        return axes_.size();
    }
    PauliAxis operator[](size_t i) const {
        return axes_[i];
    }
    std::span<const PauliAxis> axes() const {
        return axes_;
    }
    uint64_t code() const;
    std::string str() const;

    auto operator<=>(const PauliString &) const = default;
    bool operator==(const PauliString &) const = default;

   private:
    std::vector<PauliAxis> axes_;
};

std::ostream &operator<<(std::ostream &out, const PauliString &s);

/// Ordered list of distinct n-qubit Pauli settings.
class PauliSet {
   public:
    PauliSet() = default;
    /// Throws std::invalid_argument if a string has the wrong length or is repeated.
    PauliSet(size_t n, std::vector<PauliString> settings);
    static PauliSet parse_lines(const std::vector<std::string> &lines);

    size_t n() const {
        return n_;
    }
    size_t size() const {
        return settings_.size();
    }
    const std::vector<PauliString> &settings() const {
        return settings_;
    }
    const PauliString &operator[](size_t i) const {
        return settings_[i];
    }

    /// Text format: one string per line, '#' comment lines allowed.
    std::string to_text(std::string_view header_comment = {}) const;
    static PauliSet from_text(std::string_view text);

    bool operator==(const PauliSet &) const = default;

   private:
    size_t n_ = 0;
    std::vector<PauliString> settings_;
};

/// Per-qubit relabelling of axes; `perm[q][a]` is the image of axis a on qubit q.
using AxisRelabelling = std::vector<std::array<PauliAxis, 3>>;

PauliString relabel(const PauliString &s, const AxisRelabelling &perm);
PauliSet relabel(const PauliSet &set, const AxisRelabelling &perm);

/// The nine two-qubit strings XX, XY, ..., ZZ.
PauliSet all_pauli_pairs();
/// Every string on n qubits, lexicographic order.
PauliSet all_pauli_strings(size_t n);
/// The nine-setting four-qubit set covering every pair.
PauliSet four_qubit_pair_set();

}  // namespace otomo

#endif
