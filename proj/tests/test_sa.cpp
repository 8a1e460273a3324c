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
#include "isingqa/ising.hpp"
#include "isingqa/sa.hpp"

using namespace isingqa;

namespace {

IsingInstance chain4() { return IsingInstance(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}); }

}  // namespace

TEST_CASE("zero-delta and downhill flips are always accepted") {
  Rng rng(1);
  const IsingInstance flat(3, {});
  SpinConfiguration s({1, -1, 1});
  CHECK(sa_sweep(flat, s, 1e-3, rng) == 3);

  const IsingInstance one(1, {}, {1});
  for (int k = 0; k < 100; ++k) {
    SpinConfiguration d({-1});
    CHECK(sa_sweep(one, d, 1e-3, rng) == 1);
    CHECK(d[0] == 1);
  }
}

TEST_CASE("uphill acceptance rate matches the Metropolis rule") {
  const IsingInstance pair(2, {{0, 1, 1}});
  Rng rng(2026);
  const std::size_t n = 100000;
  std::size_t flipped = 0;
  for (std::size_t k = 0; k < n; ++k) {
    SpinConfiguration s({1, 1});
    sa_sweep(pair, s, 1.0, rng);
    flipped += s[0] == -1 ? 1 : 0;
  }
  const double p = std::exp(-2.0);
  const double sigma = std::sqrt(p * (1 - p) / n);
  CHECK(std::abs(static_cast<double>(flipped) / n - p) <= 3 * sigma);
}

TEST_CASE("tracked energy stays consistent") {
  const IsingInstance inst(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 0.5}, {0, 3, 1}}, {0.1, 0, -0.2, 0});
  Rng rng(4);
  SpinConfiguration s({1, 1, 1, 1});
  double e = energy(inst, s);
  for (int k = 0; k < 200; ++k) {
    sa_sweep(inst, s, 0.7, rng, &e);
    CHECK(std::abs(e - energy(inst, s)) <= 1e-12);
  }
}

TEST_CASE("ferromagnetic chain reaches its ground state") {
  const auto sched = CoolingSchedule::inverse_log();
  std::size_t hits = 0;
  for (std::uint64_t r = 0; r < 1000; ++r) {
    hits += sa_run(chain4(), sched, 10000, derive_seed(7, 0, r)).final_energy == -3.0 ? 1 : 0;
  }
  CHECK(hits >= 990);
}

TEST_CASE("zero-coupling instance is always solved") {
  const IsingInstance flat(5, {});
  for (std::uint64_t r = 0; r < 20; ++r) {
    CHECK(sa_run(flat, CoolingSchedule::inverse_log(), 10, r).final_energy == 0.0);
  }
}

TEST_CASE("runs are reproducible") {
  const auto a = sa_run(chain4(), CoolingSchedule::inverse_log(), 500, 99);
  const auto b = sa_run(chain4(), CoolingSchedule::inverse_log(), 500, 99);
  CHECK(a.final_config == b.final_config);
  CHECK(a.final_energy == b.final_energy);
  CHECK(a.best_energy == b.best_energy);
  CHECK_THROWS_AS(sa_run(chain4(), CoolingSchedule::inverse_log(), 0, 1), InvalidArgument);
}

TEST_CASE("ground-truth protocol") {
  CHECK(sa_ground_truth(IsingInstance(1, {}, {1}), {100}, 1, 3) == -1.0);
  Rng rng(12);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 14; ++i) {
    for (std::size_t j = i + 1; j < 14; ++j) {
      if (uniform01(rng) < 0.3) e.push_back({i, j, random_spin(rng) * 1.0});
    }
  }
  const IsingInstance inst(14, e);
  CHECK(sa_ground_truth(inst, {1000, 5000}, 5, 1) == brute_force_ground(inst).energy);
}
