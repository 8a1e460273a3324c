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

#include "isingqa/chimera.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "isingqa/errors.hpp"
#include "isingqa/rng.hpp"

namespace isingqa {

std::size_t ChimeraSpec::active_size() const {
  if (m < 1 || n < 1 || k < 1) throw InvalidArgument("Chimera dimensions must be >= 1");
  std::vector<std::size_t> sorted = mask;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("mask lists a vertex twice");
  }
  if (!sorted.empty() && sorted.back() >= full_size()) {
    throw InvalidArgument("mask vertex " + std::to_string(sorted.back()) +
                          " outside Chimera of " + std::to_string(full_size()) + " vertices");
  }
  return full_size() - sorted.size();
}

ChimeraGraph chimera_graph(const ChimeraSpec& spec) {
  const std::size_t active = spec.active_size();
  const std::size_t full = spec.full_size();
  const auto [m, n, k] = std::tuple{spec.m, spec.n, spec.k};

  std::vector<bool> disabled(full, false);
  for (auto v : spec.mask) disabled[v] = true;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> compact(full, kNone);
  ChimeraGraph g;
  g.b = active;
  g.full_index.reserve(active);
  for (std::size_t v = 0; v < full; ++v) {
    if (!disabled[v]) {
      compact[v] = g.full_index.size();
      g.full_index.push_back(v);
    }
  }

  auto id = [&](std::size_t r, std::size_t c, std::size_t shore, std::size_t off) {
    return ((r * n + c) * 2 + shore) * k + off;
  };
  auto add = [&](std::size_t u, std::size_t v) {
    if (compact[u] != kNone && compact[v] != kNone) g.edges.push_back({compact[u], compact[v], 0.0});
  };
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t bb = 0; bb < k; ++bb) add(id(r, c, 0, a), id(r, c, 1, bb));
        if (r + 1 < m) add(id(r, c, 0, a), id(r + 1, c, 0, a));
        if (c + 1 < n) add(id(r, c, 1, a), id(r, c + 1, 1, a));
      }
    }
  }
  for (auto& e : g.edges) {
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  return g;
}

IsingInstance random_instance(const std::vector<Edge>& edges, std::size_t b, std::uint64_t seed,
                              std::string id) {
  if (edges.empty()) throw InvalidArgument("random_instance needs a nonempty edge list");
  Rng rng(seed);
  std::vector<Edge> out = edges;
  for (auto& e : out) e.J = static_cast<double>(random_spin(rng));
  return IsingInstance(b, std::move(out), {}, std::move(id));
}

IsingInstance batch_instance(const ChimeraGraph& graph, std::uint64_t master, std::size_t index,
                             const std::string& prefix) {
  char label[32];
  std::snprintf(label, sizeof(label), "%03zu", index);
  return random_instance(graph.edges, graph.b, derive_seed(master, index, kInstanceStream),
                         prefix + "_" + label);
}

std::vector<std::size_t> read_mask(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open mask file " + path.string());
  std::vector<std::size_t> mask;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    long long v = 0;
    if (!(ss >> v)) continue;
    if (v < 0) throw InvalidArgument("negative vertex in mask file");
    mask.push_back(static_cast<std::size_t>(v));
  }
  return mask;
}

void write_mask(const std::vector<std::size_t>& mask, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  for (auto v : mask) out << v << '\n';
}

std::vector<std::size_t> random_mask(const ChimeraSpec& shape, std::size_t count,
                                     std::uint64_t seed) {
  const std::size_t full = shape.full_size();
  if (count > full) throw InvalidArgument("mask larger than the graph");
  std::vector<std::size_t> ids(full);
  std::iota(ids.begin(), ids.end(), 0);
  Rng rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    std::swap(ids[t], ids[t + uniform_index(rng, full - t)]);
  }
  ids.resize(count);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace isingqa
