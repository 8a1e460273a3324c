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

#include "isingqa/sa.hpp"

#include <cmath>
#include <limits>

#include "isingqa/errors.hpp"
#include "isingqa/parallel.hpp"

namespace isingqa {

std::size_t sa_sweep(const IsingInstance& inst, SpinConfiguration& s, double temperature,
                     Rng& rng, double* energy) {
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  if (s.size() != inst.size()) throw InvalidArgument("configuration size mismatch");
  const double inv_t = 1.0 / temperature;
  const auto& h = inst.fields();
  auto spins = s.mutable_spins();
  std::size_t accepted = 0;
  double e = 0.0;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    double local = h[i];
    for (const auto& nb : inst.neighbors(i)) local += nb.J * spins[nb.index];
    const double de = 2.0 * spins[i] * local;
    if (de > 0.0 && !(uniform01(rng) < std::exp(-de * inv_t))) continue;
    spins[i] = static_cast<std::int8_t>(-spins[i]);
    e += de;
    ++accepted;
  }
  if (energy) *energy += e;
  return accepted;
}

SaRunResult sa_run(const IsingInstance& inst, const CoolingSchedule& schedule,
                   std::size_t sweeps, std::uint64_t seed) {
  if (sweeps < 1) throw InvalidArgument("need at least one sweep");
  schedule.validate();
  Rng rng(seed);
  std::vector<std::int8_t> init(inst.size());
  for (auto& v : init) v = random_spin(rng);
  SpinConfiguration s(std::move(init));

  double e = energy(inst, s);
  double best = e;
  for (std::size_t k = 1; k <= sweeps; ++k) {
    sa_sweep(inst, s, schedule.temperature(k, sweeps), rng, &e);
    best = std::min(best, e);
  }
  SaRunResult out;
  out.final_energy = energy(inst, s);
  out.best_energy = std::min(best, out.final_energy);
  out.final_config = std::move(s);
  out.sweeps = sweeps;
  out.seed = seed;
  return out;
}

double sa_ground_truth(const IsingInstance& inst, const std::vector<std::size_t>& sweep_grid,
                       std::size_t repeats, std::uint64_t seed, const CoolingSchedule& schedule,
                       std::size_t threads) {
  if (sweep_grid.empty()) throw InvalidArgument("sweep grid is empty");
  if (repeats < 1) throw InvalidArgument("need at least one repeat");
  const std::size_t total = sweep_grid.size() * repeats;
  std::vector<double> best(total, std::numeric_limits<double>::infinity());
  parallel_for(total, threads, [&](std::size_t w) {
    const std::size_t g = w / repeats;
    const std::size_t r = w % repeats;
    best[w] = sa_run(inst, schedule, sweep_grid[g], derive_seed(seed, g, r)).best_energy;
  });
  return *std::min_element(best.begin(), best.end());
}

}  // namespace isingqa
