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
#include <vector>

#include "isingqa/ising.hpp"
#include "isingqa/rng.hpp"
#include "isingqa/schedule.hpp"

namespace isingqa {

/// Outcome of one annealing run (SA or SQA).
struct SaRunResult {
  SpinConfiguration final_config;
  double final_energy = 0.0;
  /// Running minimum of the energy after each sweep; diagnostics only,
  /// success is judged on final_energy.
  double best_energy = 0.0;
  std::size_t sweeps = 0;
  std::uint64_t seed = 0;
};

/// One sequential Metropolis sweep over spins 0..b-1 at temperature T.
///
/// Downhill and flat proposals (dE <= 0) are accepted without touching the
/// generator; each uphill proposal consumes exactly one uniform01 draw and
/// is accepted when u < exp(-dE / T). Returns the number of accepted flips.
/// `energy` (if non-null) is updated by the accepted deltas.
std::size_t sa_sweep(const IsingInstance& inst, SpinConfiguration& s, double temperature,
                     Rng& rng, double* energy = nullptr);

/// Random ±1 start (one draw per spin, in order), then sweeps k = 1..R at
/// T_k from the schedule.
SaRunResult sa_run(const IsingInstance& inst, const CoolingSchedule& schedule,
                   std::size_t sweeps, std::uint64_t seed);

/// Ground-truth protocol: `repeats` SA runs for each sweep count in the
/// grid, run (g, r) seeded with derive_seed(seed, g, r); returns the lowest
/// best_energy seen.
double sa_ground_truth(const IsingInstance& inst, const std::vector<std::size_t>& sweep_grid,
                       std::size_t repeats, std::uint64_t seed,
                       const CoolingSchedule& schedule = CoolingSchedule::inverse_log(),
                       std::size_t threads = 1);

}  // namespace isingqa
