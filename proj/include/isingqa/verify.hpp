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
#include <functional>
#include <string>
#include <vector>

#include "isingqa/ising.hpp"
#include "isingqa/sqa.hpp"

namespace isingqa {

struct Check {
  std::string name;
  bool passed = false;
  double statistic = 0.0;
  double threshold = 0.0;
  std::string detail;
  /// Informational lines never fail a report.
  bool informational = false;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
  void append(std::vector<Check> more);
};

/// Move-energy implementations under test; replaceable for mutation checks.
struct DeltaFunctions {
  std::function<double(const IsingInstance&, const SpinConfiguration&, std::size_t)> flip =
      delta_energy_flip;
  std::function<double(const IsingInstance&, const PathIntegralState&, std::size_t, std::size_t,
                       const SliceCouplings&)>
      local = local_move_delta;
  std::function<double(const IsingInstance&, const PathIntegralState&, std::size_t,
                       const SliceCouplings&)>
      global = global_move_delta;
};

/// Complete graph on b spins, J in {-1, 1}, h uniform in [-1, 1].
IsingInstance random_dense_instance(std::size_t b, std::uint64_t seed, bool fields = true);

/// Sorted spectrum and Gibbs diagonal against classical enumeration for
/// `per_b` random instances at each b in [b_lo, b_hi].
Check spectrum_identity_suite(std::size_t b_lo, std::size_t b_hi, std::size_t per_b,
                              std::uint64_t seed, double tol);

struct BoundSuiteOptions {
  std::vector<std::size_t> sizes = {1, 2, 3};
  std::vector<double> durations = {1.0, 10.0, 100.0};
  std::size_t per_size = 3;
  std::size_t u_grid = 256;
  double inversion_allowance = 0.01;
  std::uint64_t seed = 0;
};

/// Unique-ground instances per size: the bound inequality, then the
/// monotone trend of the exact success probability in t_f.
std::vector<Check> adiabatic_bound_suite(const BoundSuiteOptions& options);

/// Random (state, move) pairs; every move energy against a difference of
/// directly evaluated energies.
Check delta_oracle_suite(std::size_t pairs, std::size_t b_max, std::size_t tau_max,
                         std::uint64_t seed, double tol, const DeltaFunctions& fns = {});

struct StationaritySuiteOptions {
  std::size_t samples = 1000000;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Independent chains at frozen parameters against their exact targets:
/// SA (b = 2), the SQA sweeps (b = 2, tau = 3) and the theory chain
/// (b = 2, M = 3), plus the detailed balance identity of the latter.
std::vector<Check> stationarity_suite(const StationaritySuiteOptions& options);

/// Log-log slope of the Trotter error over Ms, for the single free spin
/// (b = 1) and the unit pair (b = 2), at beta = Gamma = 1.
std::vector<Check> trotter_rate_suite(const std::vector<std::size_t>& Ms, double max_slope);

struct CltSuiteOptions {
  double beta = 0.01;
  std::vector<std::size_t> Ms = {8, 16, 32, 64, 128, 256};
  std::size_t samples = 100000;
  double alpha = 0.01;
  double var_lo = 0.97;
  double var_hi = 1.03;
  std::uint64_t seed = 0;
  /// Also report beta = 1, where the slice law is visibly biased at M = 256.
  bool report_biased = true;
};

std::vector<Check> clt_suite(const CltSuiteOptions& options);

struct SaQualityOptions {
  std::size_t instances = 20;
  std::size_t runs = 1000;
  std::size_t sweeps = 10000;
  double threshold = 0.95;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

/// Mean SA success on single-cell Chimera instances (b = 16).
Check sa_quality_suite(const SaQualityOptions& options);

struct TrendOptions {
  std::size_t cells = 3;
  std::size_t instances = 50;
  std::size_t runs = 500;
  std::size_t sweeps_lo = 10000;
  std::size_t sweeps_hi = 20000;
  std::size_t tau_lo = 30;
  std::size_t tau_hi = 60;
  double temperature = 0.1;
  double alpha = 0.05;
  double budget_s = 1800.0;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  /// Run even when the projected runtime exceeds the budget.
  bool force = false;
};

/// Sweep-count and slice-count trends of SQA success on C_cells batches.
/// The full workload is first projected from a timed calibration run; when
/// the projection exceeds the budget and `force` is off the checks fail
/// without running.
std::vector<Check> sqa_trend_suite(const TrendOptions& options);

/// CSV output of SA, SQA and exact-QA experiments at each worker count.
Check determinism_suite(const std::vector<std::size_t>& worker_counts, std::uint64_t seed);

enum class VerifyLevel { Fast, Full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::Fast;
  std::uint64_t seed = 2026;
  std::size_t threads = 1;
  DeltaFunctions deltas;
};

VerifyReport verify_all(const VerifyOptions& options);

}  // namespace isingqa
