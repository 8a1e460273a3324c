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

#include "isingqa/errors.hpp"
#include "isingqa/sqa.hpp"

using namespace isingqa;

namespace {

IsingInstance chain4() { return IsingInstance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

IsingInstance random_pm(std::size_t b, Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      if (uniform01(rng) < 0.5) e.push_back({i, j, random_spin(rng) * 1.0});
    }
  }
  return IsingInstance(b, e);
}

// Plain Metropolis sweeps written from the move definitions, used as the
// reference for the tabulated fast path.
void reference_sweeps(const IsingInstance& inst, PathIntegralState& st, const SliceCouplings& c,
                      Rng& rng) {
  for (std::size_t l = 0; l < st.tau(); ++l) {
    for (std::size_t i = 0; i < st.size(); ++i) {
      const double de = local_move_delta(inst, st, l, i, c);
      if (de <= 0.0 || uniform01(rng) < std::exp(-de * c.inv_temperature)) st.flip(l, i);
    }
  }
  for (std::size_t i = 0; i < st.size(); ++i) {
    const double de = global_move_delta(inst, st, i, c);
    if (de <= 0.0 || uniform01(rng) < std::exp(-de * c.inv_temperature)) {
      for (std::size_t l = 0; l < st.tau(); ++l) st.flip(l, i);
    }
  }
}

}  // namespace

TEST_CASE("path state basics") {
  PathIntegralState st(3, 2);
  CHECK(st.next_slice(2) == 0);
  CHECK(st.prev_slice(0) == 2);
  CHECK(st.index() == 0);
  st.flip(0, 0);
  CHECK(st.index() == (1ULL << 5));
  for (std::uint64_t k = 0; k < 64; ++k) CHECK(PathIntegralState::from_index(3, 2, k).index() == k);
  CHECK_THROWS_AS(PathIntegralState(1, 2), InvalidArgument);
  CHECK_THROWS_AS(PathIntegralState(2, 2, {1, 1, 1}), InvalidArgument);
}

TEST_CASE("move deltas equal path energy differences") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t b = 2 + uniform_index(rng, 5);
    const std::size_t tau = 2 + uniform_index(rng, 6);
    const auto inst = random_pm(b, rng);
    const SliceCouplings c{uniform01(rng) * 3, uniform01(rng) * 2, 1.0};
    auto st = PathIntegralState::random(tau, b, rng);
    const double e0 = path_energy(inst, st, c.B, c.J);
    const std::size_t l = uniform_index(rng, tau);
    const std::size_t i = uniform_index(rng, b);
    auto a = st;
    a.flip(l, i);
    CHECK(std::abs(local_move_delta(inst, st, l, i, c) - (path_energy(inst, a, c.B, c.J) - e0)) <=
          1e-10);
    auto g = st;
    for (std::size_t k = 0; k < tau; ++k) g.flip(k, i);
    CHECK(std::abs(global_move_delta(inst, st, i, c) - (path_energy(inst, g, c.B, c.J) - e0)) <=
          1e-10);
  }
}

TEST_CASE("move delta examples") {
  // Pure time coupling, aligned column: one flip breaks two time bonds.
  const IsingInstance pair(2, {{0, 1, 1}});
  const PathIntegralState st(4, 2);
  const SliceCouplings c{0.0, 0.7, 1.0};
  CHECK(local_move_delta(pair, st, 1, 0, c) == Catch::Approx(4 * 0.7));

  // Aligned ferromagnetic pair: a global move breaks one bond in every slice.
  const SliceCouplings cb{1.5, 0.7, 1.0};
  CHECK(global_move_delta(pair, st, 0, cb) == Catch::Approx(2 * 4 * 1.5));

  const IsingInstance isolated(3, {{0, 1, 1}});
  CHECK(global_move_delta(isolated, PathIntegralState(4, 3), 2, cb) == 0.0);
}

TEST_CASE("couplings follow the schedule") {
  const auto sched = default_dw_schedule();
  const auto c = sqa_couplings(sched, 30, 0.0);
  CHECK(c.B == 0.0);
  CHECK(c.J == Catch::Approx(0.443013269734057633).epsilon(1e-13));
  CHECK(c.inv_temperature == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("tabulated sweeps are bit identical to plain Metropolis") {
  Rng gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_pm(6, gen);
    const SliceCouplings c{uniform01(gen) * 4, uniform01(gen) * 2, 1.0 / (0.1 * 8)};
    auto a = PathIntegralState::random(8, 6, gen);
    auto b = a;
    Rng ra(trial);
    Rng rb(trial);
    for (int k = 0; k < 30; ++k) {
      local_sweep(inst, a, c, ra);
      global_sweep(inst, a, c, ra);
      reference_sweeps(inst, b, c, rb);
    }
    CHECK(a == b);
    CHECK(ra() == rb());
  }
}

TEST_CASE("fields are rejected") {
  const IsingInstance h(2, {{0, 1, 1}}, {0.5, 0});
  CHECK_THROWS_AS(sqa_run(h, default_dw_schedule(), 4, 10, 1), InvalidArgument);
  CHECK_THROWS_AS(sqa_run(chain4(), default_dw_schedule(), 4, 0, 1), InvalidArgument);
}

TEST_CASE("smallest slice count runs") {
  const auto r = sqa_run(chain4(), default_dw_schedule(), 2, 200, 3);
  CHECK(r.final_config.size() == 4);
  CHECK(r.final_energy == energy(chain4(), r.final_config));
}

TEST_CASE("sqa is reproducible") {
  const auto a = sqa_run(chain4(), default_dw_schedule(), 8, 300, 42);
  const auto b = sqa_run(chain4(), default_dw_schedule(), 8, 300, 42);
  CHECK(a.final_config == b.final_config);
  CHECK(a.best_energy == b.best_energy);
}

TEST_CASE("ferromagnetic chain majority") {
  std::size_t hits = 0;
  for (std::uint64_t r = 0; r < 1000; ++r) {
    hits += sqa_run(chain4(), default_dw_schedule(), 8, 10000, derive_seed(1, 0, r)).final_energy ==
                    -3.0
                ? 1
                : 0;
  }
  CHECK(hits > 500);
}
