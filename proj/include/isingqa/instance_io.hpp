// Copyright 2026 The isingqa Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "isingqa/ising.hpp"

namespace isingqa {

// Line-oriented instance format:
//
//   # comment
//   id <label>
//   b <vertex count>
//   h <h_0> <h_1> ... <h_{b-1}>     (optional; all zeros when absent)
//   labels <l_0> ... <l_{b-1}>      (optional; edge endpoints are then labels)
//   e <i> <j> <J>                   (one per coupler)
//
// Numbers are written in shortest round-trip form, so serialize/parse is
// bit-exact. The JSON form carries the same fields:
//   {"id": ..., "b": ..., "h": [...], "edges": [[i, j, J], ...]}

std::string to_text(const IsingInstance& inst);
IsingInstance parse_text(std::string_view text);

std::string to_json_text(const IsingInstance& inst);
IsingInstance parse_json_text(std::string_view text);

/// Reads `.json` files as JSON and anything else as the line format.
IsingInstance load_instance(const std::filesystem::path& path);
/// Writes JSON for `.json` paths, the line format otherwise.
void save_instance(const IsingInstance& inst, const std::filesystem::path& path);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace isingqa
