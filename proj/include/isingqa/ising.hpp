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
#include <string>
#include <vector>

namespace isingqa {

/// One coupler (i, j, J_ij) with i < j after canonicalization.
struct Edge {
  std::size_t i = 0;
  std::size_t j = 0;
  double J = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Adjacency entry in the compressed neighbor table.
struct Neighbor {
  std::uint32_t index;
  double J;
};

/// An Ising problem: b spins, couplers J_ij on a simple graph, fields h_j.
///
/// Edges are canonicalized on construction (i < j, sorted by (i, j)) and the
/// instance is immutable afterwards, so it can be shared across threads.
class IsingInstance {
 public:
  IsingInstance() = default;
  IsingInstance(std::size_t b, std::vector<Edge> edges, std::vector<double> h = {},
                std::string id = {});

  std::size_t size() const noexcept { return b_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& fields() const noexcept { return h_; }
  const std::string& id() const noexcept { return id_; }

  std::span<const Neighbor> neighbors(std::size_t i) const noexcept {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  std::size_t degree(std::size_t i) const noexcept { return offsets_[i + 1] - offsets_[i]; }

  /// True when some h_j is nonzero.
  bool has_fields() const noexcept { return has_fields_; }
  /// True when every J_ij and h_j is an integer, so all energies are exact.
  bool is_integral() const noexcept { return integral_; }
  /// Sum of J_ij^2 over edges.
  double coupling_square_sum() const noexcept;

  IsingInstance with_id(std::string id) const;

  friend bool operator==(const IsingInstance& a, const IsingInstance& b) {
    return a.b_ == b.b_ && a.edges_ == b.edges_ && a.h_ == b.h_ && a.id_ == b.id_;
  }

 private:
  std::size_t b_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> h_;
  std::string id_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  bool has_fields_ = false;
  bool integral_ = true;
};

/// A vector of ±1 spins.
///
/// Configurations map to basis indices with spin k stored in bit (b-1-k)
/// and bit value 0 meaning +1, so index 0 is all-up and the ordering
/// matches the tensor-product basis |s_1 s_2 ... s_b> with |+1> = (1, 0).
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  explicit SpinConfiguration(std::vector<std::int8_t> spins);

  static SpinConfiguration all_up(std::size_t b);
  static SpinConfiguration from_index(std::size_t b, std::uint64_t index);

  std::uint64_t index() const;
  std::size_t size() const noexcept { return spins_.size(); }
  std::int8_t operator[](std::size_t i) const noexcept { return spins_[i]; }
  void flip(std::size_t i) noexcept { spins_[i] = static_cast<std::int8_t>(-spins_[i]); }
  std::span<const std::int8_t> spins() const noexcept { return spins_; }
  std::span<std::int8_t> mutable_spins() noexcept { return spins_; }

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

/// Largest b for exhaustive enumeration over 2^b configurations.
inline constexpr std::size_t kEnumerationCap = 24;

/// H(s) = -sum_{(i,j)} J_ij s_i s_j - sum_j h_j s_j.
double energy(const IsingInstance& inst, const SpinConfiguration& s);
/// Same, on a raw spin span (entries assumed ±1).
double energy(const IsingInstance& inst, std::span<const std::int8_t> s);

/// H(flip_i(s)) - H(s) in O(degree(i)): 2 s_i (h_i + sum_j J_ij s_j).
double delta_energy_flip(const IsingInstance& inst, const SpinConfiguration& s,
                         std::size_t i);

/// Energies of all 2^b configurations, indexed by configuration index.
std::vector<double> all_energies(const IsingInstance& inst,
                                 std::size_t cap = kEnumerationCap);

/// exp(-beta H(s)) / Z_beta for every configuration (log-sum-exp stabilized).
std::vector<double> boltzmann_distribution(const IsingInstance& inst, double beta,
                                           std::size_t cap = kEnumerationCap);

/// exp(-beta H(s)) / Z_beta with Z_beta summed exactly over 2^b states.
double boltzmann_probability(const IsingInstance& inst, const SpinConfiguration& s,
                             double beta, std::size_t cap = kEnumerationCap);

/// Minimum energy and every configuration attaining it.
struct GroundStates {
  double energy = 0.0;
  std::size_t b = 0;
  std::vector<std::uint64_t> indices;

  std::size_t degeneracy() const noexcept { return indices.size(); }
  SpinConfiguration configuration(std::size_t k) const {
    return SpinConfiguration::from_index(b, indices[k]);
  }
};

/// Exhaustive ground-state search. Degenerate minimizers are all collected;
/// for non-integral instances "equal" means within 1e-9 max(1, |E_min|).
GroundStates brute_force_ground(const IsingInstance& inst,
                                std::size_t cap = kEnumerationCap);

/// Energy equality used by success tests: exact for integral instances,
/// relative tolerance 1e-9 otherwise.
bool same_energy(double a, double b, bool exact) noexcept;

}  // namespace isingqa
