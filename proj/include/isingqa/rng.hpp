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
#include <random>

namespace isingqa {

// Every stochastic routine draws from a std::mt19937_64, whose output
// sequence is fixed by the C++ standard, and converts raw 64-bit words
// with the helpers below instead of <random> distributions (those are
// implementation-defined). Runs therefore replay bit-exactly across
// platforms and standard libraries.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for run `run` of instance `instance` under `master`:
///
///   mix64(mix64(mix64(master) ^ instance) ^ run)
///
/// This function is part of the external reproducibility contract; do not
/// change it without bumping the report format version.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t instance,
                                    std::uint64_t run) noexcept {
  return mix64(mix64(mix64(master) ^ instance) ^ run);
}

/// Run slot reserved for instance generation, so generated couplings never
/// share a stream with any annealing run of the same batch.
inline constexpr std::uint64_t kInstanceStream = ~std::uint64_t{0};

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n) by multiply-shift (Lemire); n > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Fair ±1 from the top bit of one draw.
inline std::int8_t random_spin(Rng& rng) { return (rng() >> 63) ? -1 : 1; }

}  // namespace isingqa
