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

#include "isingqa/sqa.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "isingqa/errors.hpp"

namespace isingqa {

namespace {

void require_no_fields(const IsingInstance& inst) {
  if (inst.has_fields()) {
    throw InvalidArgument("path-integral moves do not model local fields; instance '" +
                          inst.id() + "' has h != 0");
  }
}

void require_shape(const IsingInstance& inst, const PathIntegralState& state) {
  if (state.size() != inst.size()) {
    throw InvalidArgument("path state has " + std::to_string(state.size()) +
                          " sites, instance has " + std::to_string(inst.size()));
  }
}

// Metropolis test shared by both move types.
inline bool accept(double de, double inv_temperature, Rng& rng) {
  return de <= 0.0 || uniform01(rng) < std::exp(-de * inv_temperature);
}

// Acceptance probability, or 2 for a downhill move that consumes no
// random number. Must agree bit for bit with accept().
inline double acceptance_entry(double de, double inv_temperature) {
  return de <= 0.0 ? 2.0 : std::exp(-de * inv_temperature);
}

// Largest sum_j |J_ij| over sites when every coupling is a small integer,
// else -1. Integer fields make the move energies exact small integers.
int integral_field_span(const IsingInstance& inst) {
  if (!inst.is_integral()) return -1;
  double worst = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    double row = 0.0;
    for (const auto& nb : inst.neighbors(i)) row += std::abs(nb.J);
    worst = std::max(worst, row);
  }
  return worst <= 64.0 ? static_cast<int>(worst) : -1;
}

}  // namespace

PathIntegralState::PathIntegralState(std::size_t tau, std::size_t b)
    : PathIntegralState(tau, b, std::vector<std::int8_t>(tau * b, 1)) {}

PathIntegralState::PathIntegralState(std::size_t tau, std::size_t b, std::vector<std::int8_t> spins)
    : tau_(tau), b_(b), spins_(std::move(spins)) {
  if (tau_ < 2) throw InvalidArgument("need at least two Trotter slices");
  if (spins_.size() != tau_ * b_) throw InvalidArgument("path state size mismatch");
  for (auto v : spins_) {
    if (v != 1 && v != -1) throw InvalidArgument("spin values must be +1 or -1");
  }
}

PathIntegralState PathIntegralState::random(std::size_t tau, std::size_t b, Rng& rng) {
  std::vector<std::int8_t> s(tau * b);
  for (auto& v : s) v = random_spin(rng);
  return PathIntegralState(tau, b, std::move(s));
}

PathIntegralState PathIntegralState::from_index(std::size_t tau, std::size_t b,
                                                std::uint64_t index) {
  const std::size_t n = tau * b;
  if (n > 63) throw InvalidArgument("path basis index supports at most 63 entries");
  std::vector<std::int8_t> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = ((index >> (n - 1 - k)) & 1U) ? -1 : 1;
  return PathIntegralState(tau, b, std::move(s));
}

std::uint64_t PathIntegralState::index() const {
  if (spins_.size() > 63) throw InvalidArgument("path basis index supports at most 63 entries");
  std::uint64_t idx = 0;
  for (auto v : spins_) idx = (idx << 1) | (v < 0 ? 1U : 0U);
  return idx;
}

SpinConfiguration PathIntegralState::slice_config(std::size_t l) const {
  auto s = slice(l);
  return SpinConfiguration(std::vector<std::int8_t>(s.begin(), s.end()));
}

SliceCouplings sqa_couplings(const SqaSchedule& sched, std::size_t tau, double t) {
  SliceCouplings c;
  c.B = sched.B(t);
  c.J = imaginary_time_coupling(sched.clamped_A(t), tau, sched.temperature, sched.eps_A);
  c.inv_temperature = 1.0 / (static_cast<double>(tau) * sched.temperature);
  return c;
}

double path_energy(const IsingInstance& inst, const PathIntegralState& state, double B, double J) {
  require_shape(inst, state);
  double e = 0.0;
  for (std::size_t l = 0; l < state.tau(); ++l) {
    double ising = 0.0;
    for (const auto& edge : inst.edges()) ising += edge.J * state.at(l, edge.i) * state.at(l, edge.j);
    double time = 0.0;
    const std::size_t nl = state.next_slice(l);
    for (std::size_t j = 0; j < state.size(); ++j) time += state.at(l, j) * state.at(nl, j);
    e -= B * ising + J * time;
  }
  return e;
}

double local_move_delta(const IsingInstance& inst, const PathIntegralState& state, std::size_t l,
                        std::size_t i, const SliceCouplings& c) {
  require_shape(inst, state);
  const auto s = state.at(l, i);
  double field = 0.0;
  for (const auto& nb : inst.neighbors(i)) field += nb.J * state.at(l, nb.index);
  const double time = state.at(state.prev_slice(l), i) + state.at(state.next_slice(l), i);
  return 2.0 * s * (c.B * field + c.J * time);
}

double global_move_delta(const IsingInstance& inst, const PathIntegralState& state, std::size_t i,
                         const SliceCouplings& c) {
  require_shape(inst, state);
  double acc = 0.0;
  for (std::size_t l = 0; l < state.tau(); ++l) {
    double field = 0.0;
    for (const auto& nb : inst.neighbors(i)) field += nb.J * state.at(l, nb.index);
    acc += state.at(l, i) * field;
  }
  return 2.0 * c.B * acc;
}

std::size_t local_sweep(const IsingInstance& inst, PathIntegralState& state,
                        const SliceCouplings& c, Rng& rng) {
  require_shape(inst, state);
  const std::size_t b = state.size();
  const std::size_t tau = state.tau();
  auto s = state.mutable_data();
  std::size_t accepted = 0;
  const int span = integral_field_span(inst);
  if (span >= 0) {
    // Integer local fields: the acceptance depends on (s h, s (prev + next))
    // only, so it is tabulated once per sweep.
    const std::size_t width = 2 * static_cast<std::size_t>(span) + 1;
    std::vector<double> table(width * 3);
    for (int x = -span; x <= span; ++x) {
      for (int y = -1; y <= 1; ++y) {
        const double de = 2.0 * (c.B * x + c.J * (2 * y));
        table[static_cast<std::size_t>(x + span) * 3 + static_cast<std::size_t>(y + 1)] =
            acceptance_entry(de, c.inv_temperature);
      }
    }
    for (std::size_t l = 0; l < tau; ++l) {
      std::int8_t* cur = s.data() + l * b;
      const std::int8_t* prev = s.data() + state.prev_slice(l) * b;
      const std::int8_t* next = s.data() + state.next_slice(l) * b;
      for (std::size_t i = 0; i < b; ++i) {
        int field = 0;
        for (const auto& nb : inst.neighbors(i)) field += static_cast<int>(nb.J) * cur[nb.index];
        const int si = cur[i];
        const int x = si * field;
        const int y = si * (prev[i] + next[i]) / 2;
        const double p =
            table[static_cast<std::size_t>(x + span) * 3 + static_cast<std::size_t>(y + 1)];
        if (p > 1.5 || uniform01(rng) < p) {
          cur[i] = static_cast<std::int8_t>(-si);
          ++accepted;
        }
      }
    }
    return accepted;
  }
  for (std::size_t l = 0; l < tau; ++l) {
    std::int8_t* cur = s.data() + l * b;
    const std::int8_t* prev = s.data() + state.prev_slice(l) * b;
    const std::int8_t* next = s.data() + state.next_slice(l) * b;
    for (std::size_t i = 0; i < b; ++i) {
      double field = 0.0;
      for (const auto& nb : inst.neighbors(i)) field += nb.J * cur[nb.index];
      const double de = 2.0 * cur[i] * (c.B * field + c.J * (prev[i] + next[i]));
      if (accept(de, c.inv_temperature, rng)) {
        cur[i] = static_cast<std::int8_t>(-cur[i]);
        ++accepted;
      }
    }
  }
  return accepted;
}

std::size_t local_sweep(const IsingInstance& inst, PathIntegralState& state,
                        const SqaSchedule& sched, double t, Rng& rng) {
  require_no_fields(inst);
  return local_sweep(inst, state, sqa_couplings(sched, state.tau(), t), rng);
}

std::size_t global_sweep(const IsingInstance& inst, PathIntegralState& state,
                         const SliceCouplings& c, Rng& rng) {
  require_shape(inst, state);
  const std::size_t b = state.size();
  const std::size_t tau = state.tau();
  auto s = state.mutable_data();
  std::size_t accepted = 0;
  const int span = integral_field_span(inst);
  if (span >= 0) {
    const int range = span * static_cast<int>(tau);
    std::vector<double> table(2 * static_cast<std::size_t>(range) + 1);
    for (int x = -range; x <= range; ++x) {
      table[static_cast<std::size_t>(x + range)] =
          acceptance_entry(2.0 * c.B * x, c.inv_temperature);
    }
    for (std::size_t i = 0; i < b; ++i) {
      const auto nbrs = inst.neighbors(i);
      int acc = 0;
      for (std::size_t l = 0; l < tau; ++l) {
        const std::int8_t* cur = s.data() + l * b;
        int field = 0;
        for (const auto& nb : nbrs) field += static_cast<int>(nb.J) * cur[nb.index];
        acc += cur[i] * field;
      }
      const double p = table[static_cast<std::size_t>(acc + range)];
      if (p > 1.5 || uniform01(rng) < p) {
        for (std::size_t l = 0; l < tau; ++l) {
          s[l * b + i] = static_cast<std::int8_t>(-s[l * b + i]);
        }
        ++accepted;
      }
    }
    return accepted;
  }
  for (std::size_t i = 0; i < b; ++i) {
    const auto nbrs = inst.neighbors(i);
    double acc = 0.0;
    for (std::size_t l = 0; l < tau; ++l) {
      const std::int8_t* cur = s.data() + l * b;
      double field = 0.0;
      for (const auto& nb : nbrs) field += nb.J * cur[nb.index];
      acc += cur[i] * field;
    }
    if (accept(2.0 * c.B * acc, c.inv_temperature, rng)) {
      for (std::size_t l = 0; l < tau; ++l) s[l * b + i] = static_cast<std::int8_t>(-s[l * b + i]);
      ++accepted;
    }
  }
  return accepted;
}

std::size_t global_sweep(const IsingInstance& inst, PathIntegralState& state,
                         const SqaSchedule& sched, double t, Rng& rng) {
  require_no_fields(inst);
  return global_sweep(inst, state, sqa_couplings(sched, state.tau(), t), rng);
}

SaRunResult sqa_run(const IsingInstance& inst, const SqaSchedule& sched, std::size_t tau,
                    std::size_t sweeps, std::uint64_t seed, const SqaOptions& options) {
  require_no_fields(inst);
  if (sweeps < 1) throw InvalidArgument("need at least one sweep");
  if (!(sched.temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  Rng rng(seed);
  auto state = PathIntegralState::random(tau, inst.size(), rng);

  double best = energy(inst, state.slice(0));
  for (std::size_t k = 1; k <= sweeps; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(sweeps);
    const auto c = sqa_couplings(sched, tau, t);
    if (options.order == SweepOrder::LocalThenGlobal) {
      local_sweep(inst, state, c, rng);
      global_sweep(inst, state, c, rng);
    } else {
      global_sweep(inst, state, c, rng);
      local_sweep(inst, state, c, rng);
    }
    best = std::min(best, energy(inst, state.slice(0)));
  }
  SaRunResult out;
  out.final_config = state.slice_config(0);
  out.final_energy = energy(inst, out.final_config);
  out.best_energy = std::min(best, out.final_energy);
  out.sweeps = sweeps;
  out.seed = seed;
  return out;
}

}  // namespace isingqa
