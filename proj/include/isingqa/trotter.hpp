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
#include <vector>

#include <Eigen/Dense>

#include "isingqa/ising.hpp"
#include "isingqa/rng.hpp"
#include "isingqa/sqa.hpp"

namespace isingqa {

/// Exact enumeration over path states is capped at 2^16 states.
inline constexpr std::size_t kPathEnumerationCap = 16;
inline constexpr std::size_t kTheorySliceCap = 4;

enum class AcceptanceRule { Metropolis, Barker };

/// Parameters of the inhomogeneous chain on {-1, 1}^(b M). Gamma is
/// evaluated at the step counter t = 0, 1, 2, ...; R = 0 selects the
/// default b M.
struct TheoryParams {
  double beta = 1.0;
  std::size_t M = 2;
  std::function<double(double)> Gamma;
  std::size_t R = 0;
  double L1M = 4.0;
  AcceptanceRule rule = AcceptanceRule::Metropolis;

  void validate() const;
  std::size_t resolved_R(std::size_t b) const { return R == 0 ? b * M : R; }
};

/// gamma = (1/2) ln coth(beta Gamma / M).
double gamma_coupling(double beta, double Gamma_t, std::size_t M);

/// (M / beta) atanh((t + 2)^(-2 / (R L1M))), the smallest admissible Gamma(t).
double gamma_schedule_floor(double t, const TheoryParams& params, std::size_t b);

/// Largest |F1 change| of one single-spin flip.
double default_L1M_singleflip();

/// Slice sum sum_(ij) J_ij s_i s_j of one slice.
double slice_coupling_sum(const IsingInstance& inst, std::span<const std::int8_t> slice);
/// F0 = (1/M) sum over slices of the slice coupling sums.
double f0(const IsingInstance& inst, const PathIntegralState& state);
/// F1 = sum_k sum_i s_ik s_i,k+1 with periodic k.
double f1(const PathIntegralState& state);

/// Draws slices i.i.d. from exp((beta/M) sum J s s) / Z. Fields are not
/// part of this distribution and are rejected.
class SliceSampler {
 public:
  SliceSampler(const IsingInstance& inst, double beta_over_M);

  std::uint64_t draw_index(Rng& rng) const;
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  /// Slice coupling sum of basis state idx.
  double slice_sum(std::uint64_t idx) const noexcept { return sums_[idx]; }
  std::size_t size() const noexcept { return b_; }

 private:
  std::size_t b_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  std::vector<double> sums_;
};

PathIntegralState sample_q_fixed(const TheoryParams& params, const IsingInstance& inst, Rng& rng);

/// X_M = M^(-1/2) sum_k sum_(ij) J_ij s_ik s_jk.
double clt_statistic(const PathIntegralState& state, const IsingInstance& inst);

/// Unnormalized log weight beta F0 + gamma F1.
double log_q_weight(const IsingInstance& inst, const PathIntegralState& state, double beta,
                    double gamma);

/// q(s, t) over all 2^(b M) path states, indexed by PathIntegralState::index.
std::vector<double> q_target(const IsingInstance& inst, double beta, std::size_t M, double gamma);

/// Acceptance g(u) for the selected rule.
double acceptance(AcceptanceRule rule, double ratio);

/// G(y, x; t) as a dense column-stochastic matrix: column x holds the law
/// of the next state.
Eigen::MatrixXd transition_matrix(const IsingInstance& inst, const TheoryParams& params, double t);

/// Advances the exact distribution by one step of the chain at time t.
std::vector<double> propagate_distribution(const IsingInstance& inst, const TheoryParams& params,
                                           double t, const std::vector<double>& dist);

/// Marginal of slice 0 from a path distribution.
std::vector<double> slice_marginal(const std::vector<double>& dist, std::size_t b, std::size_t M);

/// Runs `steps` proposals, step t using Gamma(t + t0). Each proposal picks
/// one of the b M entries uniformly. Throws ConfigError when Gamma drops
/// below the admissibility floor.
PathIntegralState mcmc_q_t(const TheoryParams& params, const IsingInstance& inst,
                           std::size_t steps, Rng& rng, const PathIntegralState* start = nullptr,
                           double t0 = 0.0);

struct PartitionCheck {
  double exact = 0.0;
  double prefactored = 0.0;
  double abs_error = 0.0;
};

/// tr exp(beta sum J Z Z + beta Gamma sum X), written with the positive
/// sign convention.
double quantum_partition_function(const IsingInstance& inst, double beta, double Gamma);
/// The same trace expressed with the annealing Hamiltonians:
/// tr exp(-beta (H_I + Gamma H_X)).
double annealing_partition_function(const IsingInstance& inst, double beta, double Gamma);
/// sum over path states of exp(beta F0 + gamma F1), by transfer matrix.
double path_partition_function(const IsingInstance& inst, double beta, std::size_t M,
                               double gamma);
/// sum over path states by direct enumeration (b M <= 16).
double path_partition_function_brute(const IsingInstance& inst, double beta, std::size_t M,
                                     double gamma);

/// Compares the trace with (sqrt(sinh(2 beta Gamma / M) / 2))^(b M) Z_M.
PartitionCheck trotter_partition_check(const IsingInstance& inst, const TheoryParams& params,
                                       double Gamma_t);

struct CltRow {
  std::size_t M = 0;
  double ks = 0.0;
  double p_value = 1.0;
  double mean = 0.0;
  double variance = 0.0;
};

struct CltReport {
  double target_variance = 0.0;
  /// Whether each draw was spread over its lattice cell.
  bool continuity_correction = true;
  std::vector<CltRow> rows;
  bool decreasing = false;
  bool passes_at_largest = false;
};

/// For each M, n_samples i.i.d.-slice draws of X_M compared with
/// N(0, sum J^2). X_M lives on a lattice; with continuity_correction each
/// draw is spread uniformly over its lattice cell before the KS test.
CltReport clt_convergence_test(const IsingInstance& inst, double beta,
                               const std::vector<std::size_t>& Ms, std::size_t n_samples,
                               std::uint64_t seed, bool continuity_correction = true,
                               double alpha = 0.01);

/// Lattice spacing of slice coupling sums (0 for non-integral couplings).
double slice_sum_spacing(const IsingInstance& inst);

}  // namespace isingqa
