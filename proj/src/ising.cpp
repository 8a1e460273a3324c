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

#include "isingqa/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "isingqa/errors.hpp"

namespace isingqa {

namespace {

void require_enumerable(std::size_t b, std::size_t cap, const char* what) {
  if (b > cap) {
    throw CapabilityError(std::string(what) + ": b = " + std::to_string(b) +
                          " exceeds the exhaustive-enumeration limit of " +
                          std::to_string(cap) + " spins");
  }
}

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

}  // namespace

IsingInstance::IsingInstance(std::size_t b, std::vector<Edge> edges, std::vector<double> h,
                             std::string id)
    : b_(b), edges_(std::move(edges)), h_(std::move(h)), id_(std::move(id)) {
  if (h_.empty()) h_.assign(b_, 0.0);
  if (h_.size() != b_) {
    throw InvalidArgument("field vector has length " + std::to_string(h_.size()) +
                          ", expected b = " + std::to_string(b_));
  }
  if (b_ > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("instance too large");
  }
  for (auto& e : edges_) {
    if (e.i == e.j) throw InvalidArgument("self-loop at vertex " + std::to_string(e.i));
    if (e.i >= b_ || e.j >= b_) {
      throw InvalidArgument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                            ") out of range for b = " + std::to_string(b_));
    }
    if (!std::isfinite(e.J)) throw InvalidArgument("non-finite coupling");
    if (e.i > e.j) std::swap(e.i, e.j);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& c) { return std::tie(a.i, a.j) < std::tie(c.i, c.j); });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw InvalidArgument("duplicate edge (" + std::to_string(edges_[k].i) + ", " +
                            std::to_string(edges_[k].j) + ")");
    }
  }
  for (double x : h_) {
    if (!std::isfinite(x)) throw InvalidArgument("non-finite field");
    has_fields_ = has_fields_ || x != 0.0;
    integral_ = integral_ && is_integer(x);
  }

  std::vector<std::size_t> deg(b_, 0);
  for (const auto& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
    integral_ = integral_ && is_integer(e.J);
  }
  offsets_.assign(b_ + 1, 0);
  for (std::size_t v = 0; v < b_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[b_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& e : edges_) {
    adjacency_[fill[e.i]++] = {static_cast<std::uint32_t>(e.j), e.J};
    adjacency_[fill[e.j]++] = {static_cast<std::uint32_t>(e.i), e.J};
  }
}

double IsingInstance::coupling_square_sum() const noexcept {
  double acc = 0.0;
  for (const auto& e : edges_) acc += e.J * e.J;
  return acc;
}

IsingInstance IsingInstance::with_id(std::string id) const {
  IsingInstance copy = *this;
  copy.id_ = std::move(id);
  return copy;
}

SpinConfiguration::SpinConfiguration(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (auto v : spins_) {
    if (v != 1 && v != -1) throw InvalidArgument("spin values must be +1 or -1");
  }
}

SpinConfiguration SpinConfiguration::all_up(std::size_t b) {
  return SpinConfiguration(std::vector<std::int8_t>(b, 1));
}

SpinConfiguration SpinConfiguration::from_index(std::size_t b, std::uint64_t index) {
  if (b > 64) throw InvalidArgument("basis index supports at most 64 spins");
  std::vector<std::int8_t> s(b);
  for (std::size_t k = 0; k < b; ++k) s[k] = ((index >> (b - 1 - k)) & 1U) ? -1 : 1;
  return SpinConfiguration(std::move(s));
}

std::uint64_t SpinConfiguration::index() const {
  if (spins_.size() > 64) throw InvalidArgument("basis index supports at most 64 spins");
  std::uint64_t idx = 0;
  for (auto v : spins_) idx = (idx << 1) | (v < 0 ? 1U : 0U);
  return idx;
}

double energy(const IsingInstance& inst, std::span<const std::int8_t> s) {
  if (s.size() != inst.size()) {
    throw InvalidArgument("configuration has " + std::to_string(s.size()) +
                          " spins, instance has " + std::to_string(inst.size()));
  }
  double e = 0.0;
  for (const auto& edge : inst.edges()) e -= edge.J * s[edge.i] * s[edge.j];
  const auto& h = inst.fields();
  for (std::size_t j = 0; j < s.size(); ++j) e -= h[j] * s[j];
  return e;
}

double energy(const IsingInstance& inst, const SpinConfiguration& s) {
  return energy(inst, s.spins());
}

double delta_energy_flip(const IsingInstance& inst, const SpinConfiguration& s, std::size_t i) {
  if (s.size() != inst.size()) throw InvalidArgument("configuration size mismatch");
  if (i >= inst.size()) {
    throw InvalidArgument("flip index " + std::to_string(i) + " out of range");
  }
  double local = inst.fields()[i];
  for (const auto& nb : inst.neighbors(i)) local += nb.J * s[nb.index];
  return 2.0 * s[i] * local;
}

std::vector<double> all_energies(const IsingInstance& inst, std::size_t cap) {
  const std::size_t b = inst.size();
  require_enumerable(b, cap, "all_energies");
  const std::uint64_t count = std::uint64_t{1} << b;
  std::vector<double> out(count);

  // Gray-code walk: one spin flips per step. Non-integral instances are
  // re-anchored periodically so accumulated rounding stays ~1e-13.
  std::vector<std::int8_t> s(b, 1);
  double e = energy(inst, s);
  out[0] = e;
  const bool exact = inst.is_integral();
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const std::size_t spin = b - 1 - bit;
    double local = inst.fields()[spin];
    for (const auto& nb : inst.neighbors(spin)) local += nb.J * s[nb.index];
    e += 2.0 * s[spin] * local;
    s[spin] = static_cast<std::int8_t>(-s[spin]);
    if (!exact && (step & 1023U) == 0) e = energy(inst, s);
    const std::uint64_t gray = step ^ (step >> 1);
    out[gray] = e;
  }
  return out;
}

std::vector<double> boltzmann_distribution(const IsingInstance& inst, double beta,
                                           std::size_t cap) {
  if (!(beta > 0.0)) throw InvalidArgument("beta must be positive");
  require_enumerable(inst.size(), cap, "boltzmann_distribution");
  auto weights = all_energies(inst, cap);
  const double e_min = *std::min_element(weights.begin(), weights.end());
  double z = 0.0;
  for (auto& w : weights) {
    w = std::exp(-beta * (w - e_min));
    z += w;
  }
  for (auto& w : weights) w /= z;
  return weights;
}

double boltzmann_probability(const IsingInstance& inst, const SpinConfiguration& s, double beta,
                             std::size_t cap) {
  if (s.size() != inst.size()) throw InvalidArgument("configuration size mismatch");
  const auto dist = boltzmann_distribution(inst, beta, cap);
  return dist[s.index()];
}

bool same_energy(double a, double b, bool exact) noexcept {
  if (exact) return a == b;
  return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
}

GroundStates brute_force_ground(const IsingInstance& inst, std::size_t cap) {
  require_enumerable(inst.size(), cap, "brute_force_ground");
  const auto energies = all_energies(inst, cap);
  GroundStates g;
  g.b = inst.size();
  g.energy = *std::min_element(energies.begin(), energies.end());
  const bool exact = inst.is_integral();
  for (std::uint64_t idx = 0; idx < energies.size(); ++idx) {
    if (same_energy(energies[idx], g.energy, exact)) g.indices.push_back(idx);
  }
  if (!exact) {
    // Report the directly evaluated minimum, not the walk's running value.
    double best = std::numeric_limits<double>::infinity();
    for (auto idx : g.indices) {
      best = std::min(best, energy(inst, SpinConfiguration::from_index(g.b, idx)));
    }
    g.energy = best;
  }
  return g;
}

}  // namespace isingqa
