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

#include "isingqa/errors.hpp"
#include "isingqa/ising.hpp"
#include "isingqa/rng.hpp"

using namespace isingqa;
using Catch::Approx;

namespace {

IsingInstance triangle(double J) { return IsingInstance(3, {{0, 1, J}, {1, 2, J}, {0, 2, J}}); }

IsingInstance chain4() { return IsingInstance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

IsingInstance random_real(std::size_t b, Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      if (uniform01(rng) < 0.6) e.push_back({i, j, 2 * uniform01(rng) - 1});
    }
  }
  std::vector<double> h(b);
  for (auto& x : h) x = 2 * uniform01(rng) - 1;
  return IsingInstance(b, e, h);
}

SpinConfiguration random_config(std::size_t b, Rng& rng) {
  std::vector<std::int8_t> s(b);
  for (auto& v : s) v = random_spin(rng);
  return SpinConfiguration(s);
}

}  // namespace

TEST_CASE("instance validation and canonical order") {
  CHECK_THROWS_AS(IsingInstance(2, {{0, 0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(IsingInstance(2, {{0, 2, 1}}), InvalidArgument);
  CHECK_THROWS_AS(IsingInstance(2, {{0, 1, 1}, {1, 0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(IsingInstance(2, {}, {1.0}), InvalidArgument);

  const IsingInstance inst(3, {{2, 1, 1}, {1, 0, -1}});
  REQUIRE(inst.edges().size() == 2);
  CHECK(inst.edges()[0] == Edge{0, 1, -1});
  CHECK(inst.edges()[1] == Edge{1, 2, 1});
  CHECK(inst.degree(1) == 2);
  CHECK(inst.is_integral());
  CHECK_FALSE(IsingInstance(2, {{0, 1, 0.5}}).is_integral());
}

TEST_CASE("energy examples") {
  const IsingInstance pair(2, {{0, 1, 1}});
  CHECK(energy(pair, SpinConfiguration({1, 1})) == -1.0);
  const IsingInstance fields(2, {}, {1, 1});
  CHECK(energy(fields, SpinConfiguration({1, -1})) == 0.0);
  CHECK(energy(triangle(1), SpinConfiguration({1, 1, -1})) == 1.0);
}

TEST_CASE("flip deltas") {
  const IsingInstance pair(2, {{0, 1, 1}});
  CHECK(delta_energy_flip(pair, SpinConfiguration({1, 1}), 0) == 2.0);
  const IsingInstance one(1, {}, {1});
  CHECK(delta_energy_flip(one, SpinConfiguration({1}), 0) == 2.0);

  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_real(8, rng);
    const auto s = random_config(8, rng);
    for (std::size_t i = 0; i < 8; ++i) {
      auto t = s;
      t.flip(i);
      CHECK(std::abs(delta_energy_flip(inst, s, i) - (energy(inst, t) - energy(inst, s))) <=
            1e-12);
    }
  }
}

TEST_CASE("spin reversal symmetry without fields") {
  Rng rng(3);
  const IsingInstance inst(5, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}, {3, 4, -1}, {0, 4, 1}});
  for (int k = 0; k < 20; ++k) {
    auto s = random_config(5, rng);
    auto r = s;
    for (std::size_t i = 0; i < 5; ++i) r.flip(i);
    CHECK(energy(inst, s) == energy(inst, r));
  }
}

TEST_CASE("basis index convention") {
  CHECK(SpinConfiguration::from_index(3, 0) == SpinConfiguration({1, 1, 1}));
  CHECK(SpinConfiguration::from_index(3, 1) == SpinConfiguration({1, 1, -1}));
  CHECK(SpinConfiguration::from_index(3, 4) == SpinConfiguration({-1, 1, 1}));
  for (std::uint64_t k = 0; k < 16; ++k) CHECK(SpinConfiguration::from_index(4, k).index() == k);
  CHECK_THROWS_AS(SpinConfiguration({1, 0}), InvalidArgument);
}

TEST_CASE("all energies agree with direct evaluation") {
  Rng rng(8);
  const auto inst = random_real(7, rng);
  const auto e = all_energies(inst);
  REQUIRE(e.size() == 128);
  for (std::uint64_t k = 0; k < 128; ++k) {
    CHECK(e[k] == Approx(energy(inst, SpinConfiguration::from_index(7, k))).margin(1e-12));
  }
  CHECK_THROWS_AS(all_energies(IsingInstance(5, {}), 4), CapabilityError);
}

TEST_CASE("Boltzmann probabilities") {
  const IsingInstance free_spin(1, {});
  CHECK(boltzmann_probability(free_spin, SpinConfiguration({1}), 1.0) == Approx(0.5));
  CHECK(boltzmann_probability(free_spin, SpinConfiguration({-1}), 1.0) == Approx(0.5));

  // e / (2e + 2/e), evaluated to 18 digits outside this code base.
  const IsingInstance pair(2, {{0, 1, 1}});
  CHECK(boltzmann_probability(pair, SpinConfiguration({1, 1}), 1.0) ==
        Approx(0.440398538988941222).epsilon(1e-14));

  const auto inst = triangle(-1);
  for (std::uint64_t k = 0; k < 8; ++k) {
    CHECK(boltzmann_probability(inst, SpinConfiguration::from_index(3, k), 1e-9) ==
          Approx(0.125).margin(1e-6));
  }

  Rng rng(4);
  const auto big = random_real(12, rng);
  const auto p = boltzmann_distribution(big, 0.7);
  double total = 0.0;
  for (double x : p) total += x;
  CHECK(std::abs(total - 1.0) <= 1e-10);
}

TEST_CASE("brute force ground states") {
  const auto g = brute_force_ground(chain4());
  CHECK(g.energy == -3.0);
  REQUIRE(g.degeneracy() == 2);
  CHECK(g.configuration(0) == SpinConfiguration({1, 1, 1, 1}));
  CHECK(g.configuration(1) == SpinConfiguration({-1, -1, -1, -1}));

  // Frustrated antiferromagnet: every state except the two aligned ones.
  const auto f = brute_force_ground(triangle(-1));
  CHECK(f.energy == -1.0);
  CHECK(f.degeneracy() == 6);

  const auto one = brute_force_ground(IsingInstance(1, {}, {2}));
  CHECK(one.energy == -2.0);
  REQUIRE(one.degeneracy() == 1);
  CHECK(one.configuration(0) == SpinConfiguration({1}));

  Rng rng(5);
  const auto inst = random_real(10, rng);
  const auto gs = brute_force_ground(inst);
  for (double e : all_energies(inst)) CHECK(e >= gs.energy);
}

TEST_CASE("energy comparison policy") {
  CHECK(same_energy(-3.0, -3.0, true));
  CHECK_FALSE(same_energy(-3.0, -2.0, true));
  CHECK(same_energy(1.0, 1.0 + 1e-12, false));
  CHECK_FALSE(same_energy(1.0, 1.0 + 1e-6, false));
}
