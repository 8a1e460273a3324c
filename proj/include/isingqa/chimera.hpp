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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "isingqa/ising.hpp"

namespace isingqa {

/// An m x n grid of K_{k,k} unit cells with an optional set of disabled
/// vertices. Full-graph vertex ids follow the usual linear Chimera layout
///
///   id = ((row * n + col) * 2 + shore) * k + offset,
///
/// where shore 0 couples vertically between cells and shore 1 horizontally.
struct ChimeraSpec {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t k = 4;
  std::vector<std::size_t> mask;

  std::size_t full_size() const noexcept { return m * n * 2 * k; }
  /// Validates and returns the active vertex count m n 2k - |mask|.
  std::size_t active_size() const;
};

/// A Chimera edge list over compacted indices [0, b).
struct ChimeraGraph {
  std::size_t b = 0;
  std::vector<Edge> edges;  // J = 0 placeholders
  std::vector<std::size_t> full_index;  // compacted index -> full-graph id
};

ChimeraGraph chimera_graph(const ChimeraSpec& spec);

/// Couplings independently ±1 with probability 1/2, h = 0. The generator is
/// seeded with `seed` directly; one draw per edge, in edge order.
IsingInstance random_instance(const std::vector<Edge>& edges, std::size_t b,
                              std::uint64_t seed, std::string id = {});

/// Instance `index` of a reproducible batch: seeded with
/// derive_seed(master, index, kInstanceStream).
IsingInstance batch_instance(const ChimeraGraph& graph, std::uint64_t master,
                             std::size_t index, const std::string& prefix = "inst");

/// Newline-separated full-graph vertex ids ('#' comments allowed).
std::vector<std::size_t> read_mask(const std::filesystem::path& path);
void write_mask(const std::vector<std::size_t>& mask, const std::filesystem::path& path);

/// `count` distinct vertices of an m x n x k Chimera chosen by a seeded
/// partial shuffle, returned sorted.
std::vector<std::size_t> random_mask(const ChimeraSpec& shape, std::size_t count,
                                     std::uint64_t seed);

}  // namespace isingqa
