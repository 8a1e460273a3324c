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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "isingqa/chimera.hpp"
#include "isingqa/errors.hpp"

using namespace isingqa;

namespace {

ChimeraSpec shape(std::size_t m, std::size_t n, std::size_t k = 4) {
  ChimeraSpec s;
  s.m = m;
  s.n = n;
  s.k = k;
  return s;
}

}  // namespace

TEST_CASE("unit cell and small grids") {
  const auto cell = chimera_graph(shape(1, 1));
  CHECK(cell.b == 8);
  CHECK(cell.edges.size() == 16);

  // 4 cells x 16 intra edges, plus 8 vertical and 8 horizontal couplers.
  const auto g2 = chimera_graph(shape(2, 2));
  CHECK(g2.b == 32);
  CHECK(g2.edges.size() == 80);

  const auto c3 = chimera_graph(shape(3, 3));
  CHECK(c3.b == 72);
}

TEST_CASE("graph is simple with bounded degree") {
  const auto g = chimera_graph(shape(4, 3));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::size_t> degree(g.b, 0);
  for (const auto& e : g.edges) {
    CHECK(e.i < e.j);
    CHECK(e.j < g.b);
    CHECK(seen.insert({e.i, e.j}).second);
    ++degree[e.i];
    ++degree[e.j];
  }
  for (auto d : degree) CHECK(d <= 4 + 2);
}

TEST_CASE("shipped masks give 485, 945 and 1094 active qubits") {
  const std::string dir = ISINGQA_DATA_DIR;
  auto c8 = shape(8, 8);
  c8.mask = read_mask(dir + "/masks/c8_485.txt");
  CHECK(chimera_graph(c8).b == 485);
  auto c12 = shape(12, 12);
  c12.mask = read_mask(dir + "/masks/c12_945.txt");
  CHECK(chimera_graph(c12).b == 945);
  c12.mask = read_mask(dir + "/masks/c12_1094.txt");
  CHECK(chimera_graph(c12).b == 1094);
}

TEST_CASE("masking removes incident edges and compacts indices") {
  auto s = shape(1, 1);
  s.mask = {0};
  const auto g = chimera_graph(s);
  CHECK(g.b == 7);
  CHECK(g.edges.size() == 12);
  CHECK(g.full_index.front() == 1);
  s.mask = {99};
  CHECK_THROWS_AS(chimera_graph(s), InvalidArgument);
}

TEST_CASE("random instances") {
  const auto cell = chimera_graph(shape(1, 1));
  const auto a = random_instance(cell.edges, cell.b, 17);
  const auto b = random_instance(cell.edges, cell.b, 17);
  CHECK(a == b);
  REQUIRE(a.edges().size() == 16);
  for (const auto& e : a.edges()) CHECK((e.J == 1.0 || e.J == -1.0));
  CHECK_FALSE(a.has_fields());

  // Fraction of +1 over 10^4 couplers lies within 3 sigma = 0.015 of 1/2.
  const auto big = chimera_graph(shape(16, 16));
  std::size_t plus = 0;
  std::size_t total = 0;
  for (std::uint64_t seed = 0; total < 10000; ++seed) {
    const auto inst = random_instance(big.edges, big.b, seed);
    for (const auto& e : inst.edges()) {
      plus += e.J > 0 ? 1 : 0;
      if (++total == 10000) break;
    }
  }
  CHECK(std::abs(static_cast<double>(plus) / 10000.0 - 0.5) <= 0.015);
}

TEST_CASE("batch seeds and ids") {
  const auto g = chimera_graph(shape(2, 2));
  const auto i0 = batch_instance(g, 9, 0, "x");
  const auto i1 = batch_instance(g, 9, 1, "x");
  CHECK(i0.id() == "x_000");
  CHECK(i1.id() == "x_001");
  CHECK_FALSE(i0.edges() == i1.edges());
  CHECK(batch_instance(g, 9, 1, "x") == i1);
}

TEST_CASE("random masks are reproducible") {
  const auto m = random_mask(shape(8, 8), 27, 3);
  CHECK(m.size() == 27);
  CHECK(m == random_mask(shape(8, 8), 27, 3));
  CHECK(std::set<std::size_t>(m.begin(), m.end()).size() == 27);
}
