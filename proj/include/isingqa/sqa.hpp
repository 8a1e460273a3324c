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
#include <span>
#include <vector>

#include "isingqa/ising.hpp"
#include "isingqa/rng.hpp"
#include "isingqa/sa.hpp"
#include "isingqa/schedule.hpp"

namespace isingqa {

/// tau Trotter slices of b spins, stored slice-major. Slice indices are
/// periodic: the imaginary-time neighbor after slice tau-1 is slice 0.
class PathIntegralState {
 public:
  PathIntegralState() = default;
  /// All spins +1.
  PathIntegralState(std::size_t tau, std::size_t b);
  PathIntegralState(std::size_t tau, std::size_t b, std::vector<std::int8_t> spins);

  /// Independent fair ±1 for every entry, slice by slice.
  static PathIntegralState random(std::size_t tau, std::size_t b, Rng& rng);
  /// Basis enumeration over 2^(tau b) states; entry (l, i) is bit
  /// (tau b - 1 - (l b + i)), bit value 1 meaning -1.
  static PathIntegralState from_index(std::size_t tau, std::size_t b, std::uint64_t index);
  std::uint64_t index() const;

  std::size_t tau() const noexcept { return tau_; }
  std::size_t size() const noexcept { return b_; }
  std::int8_t at(std::size_t l, std::size_t i) const noexcept { return spins_[l * b_ + i]; }
  void flip(std::size_t l, std::size_t i) noexcept {
    spins_[l * b_ + i] = static_cast<std::int8_t>(-spins_[l * b_ + i]);
  }
  std::size_t next_slice(std::size_t l) const noexcept { return l + 1 == tau_ ? 0 : l + 1; }
  std::size_t prev_slice(std::size_t l) const noexcept { return l == 0 ? tau_ - 1 : l - 1; }

  std::span<const std::int8_t> slice(std::size_t l) const noexcept {
    return {spins_.data() + l * b_, b_};
  }
  SpinConfiguration slice_config(std::size_t l) const;
  std::span<const std::int8_t> data() const noexcept { return spins_; }
  std::span<std::int8_t> mutable_data() noexcept { return spins_; }

  friend bool operator==(const PathIntegralState&, const PathIntegralState&) = default;

 private:
  std::size_t tau_ = 0;
  std::size_t b_ = 0;
  std::vector<std::int8_t> spins_;
};

/// The per-sweep constants of the (2+1)-dimensional model: Ising weight
/// B(t), imaginary-time coupling J(t) and the inverse sampling temperature
/// 1 / (tau T).
struct SliceCouplings {
  double B = 0.0;
  double J = 0.0;
  double inv_temperature = 1.0;
};

SliceCouplings sqa_couplings(const SqaSchedule& sched, std::size_t tau, double t);

/// H_aI(s) = -sum_l [ B sum_(ij) J_ij s_il s_jl + J sum_j s_jl s_j,l+1 ].
/// Fields are not part of this Hamiltonian.
double path_energy(const IsingInstance& inst, const PathIntegralState& state, double B, double J);

/// Energy change of flipping entry (l, i).
double local_move_delta(const IsingInstance& inst, const PathIntegralState& state, std::size_t l,
                        std::size_t i, const SliceCouplings& c);
/// Energy change of flipping site i in every slice; time bonds are unchanged.
double global_move_delta(const IsingInstance& inst, const PathIntegralState& state, std::size_t i,
                         const SliceCouplings& c);

/// Visits slices l = 0..tau-1 and, within each, sites i = 0..b-1; flips are
/// accepted with min{1, exp(-dE / (tau T))}. RNG use matches sa_sweep: one
/// uniform01 draw per uphill proposal only. Returns accepted flips.
std::size_t local_sweep(const IsingInstance& inst, PathIntegralState& state,
                        const SliceCouplings& c, Rng& rng);
std::size_t local_sweep(const IsingInstance& inst, PathIntegralState& state,
                        const SqaSchedule& sched, double t, Rng& rng);

/// Visits sites i = 0..b-1, proposing to flip the whole replica column.
std::size_t global_sweep(const IsingInstance& inst, PathIntegralState& state,
                         const SliceCouplings& c, Rng& rng);
std::size_t global_sweep(const IsingInstance& inst, PathIntegralState& state,
                         const SqaSchedule& sched, double t, Rng& rng);

enum class SweepOrder { LocalThenGlobal, GlobalThenLocal };

struct SqaOptions {
  SweepOrder order = SweepOrder::LocalThenGlobal;
};

/// Random start over all tau b entries, then for k = 1..R with t_k = k / R a
/// local and a global sweep. The reported energies are classical energies
/// of the first Trotter slice. Instances with nonzero fields are rejected.
SaRunResult sqa_run(const IsingInstance& inst, const SqaSchedule& sched, std::size_t tau,
                    std::size_t sweeps, std::uint64_t seed, const SqaOptions& options = {});

}  // namespace isingqa
