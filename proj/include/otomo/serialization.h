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


#ifndef OTOMO_SERIALIZATION_H
#define OTOMO_SERIALIZATION_H

#include <string>
#include <string_view>

#include "json.hpp"

namespace otomo {

/// Deterministic JSON text: keys sorted, two-space indent, floats printed
/// with 17 significant digits, trailing newline. Throws on NaN/Inf.
std::string canonical_json(const nlohmann::json &j);

/// Whole-file helpers; throw std::runtime_error naming the path on failure.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view text);

/// 64-bit FNV-1a digest as 16 hex digits, used to fingerprint inputs.
std::string fingerprint(std::string_view data);

}  // namespace otomo

#endif
