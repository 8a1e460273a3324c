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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "isingqa/ising.hpp"
#include "isingqa/schedule.hpp"

namespace isingqa {

inline constexpr std::size_t kDenseBuildCap = 12;
inline constexpr std::size_t kEvolveCap = 10;
inline constexpr std::size_t kBoundCap = 8;

/// Hamiltonian on 2^b computational basis states, same basis order as
/// SpinConfiguration::from_index. Every operator used here (sigma^z
/// products, sigma^x sums) is real symmetric, so the storage is real.
struct DenseHamiltonian {
  std::size_t b = 0;
  Eigen::MatrixXd matrix;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
};

struct StateVector {
  Eigen::VectorXcd amplitudes;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return amplitudes.norm(); }
};

/// -sum J_ij Z_i Z_j - sum h_j Z_j; diagonal.
DenseHamiltonian build_quantum_ising(const IsingInstance& inst);
/// -sum_j X_j.
DenseHamiltonian build_transverse(std::size_t b);
/// A(t) H_X + B(t) H_I with the unclamped A.
DenseHamiltonian annealing_hamiltonian(const IsingInstance& inst, const ControlSchedule& sched,
                                       double t);

/// Equal-amplitude state, the ground state of H_X.
StateVector uniform_superposition(std::size_t b);

/// Integrates i d psi/du = t_f H(u) psi over u in [0, 1], i.e. physical time
/// t = u t_f with the controls read at u. Each of `steps` steps applies the
/// exact exponential of the midpoint Hamiltonian.
StateVector evolve(const IsingInstance& inst, const ControlSchedule& sched, double t_f,
                   std::size_t steps);

/// Probability that a computational-basis measurement of psi returns a
/// configuration at the classical ground energy.
double success_probability(const IsingInstance& inst, const StateVector& psi);

struct BoundReport {
  std::size_t zeta = 1;
  double p0 = 1.0;
  double Pi = 0.0;
  double xi = 0.0;
  double lower_bound = 1.0;
  double true_success = 0.0;
  std::size_t u_grid = 0;
  double min_gap = 0.0;
};

/// e^{-xi} - 2^b zeta Pi e^{2 xi} (1 - p0); -inf when xi is infinite.
double assemble_lower_bound(std::size_t b, std::size_t zeta, double Pi, double xi, double p0);

struct BoundOptions {
  /// Integration steps per grid cell; 0 picks max(4, ceil(20 t_f / u_grid)).
  std::size_t substeps = 0;
};

/// Evaluates the adiabatic success lower bound on the grid u = k / u_grid.
/// dH/du = A'(u) H_X + B'(u) H_I. The ground subspace is the lowest zeta
/// eigenvectors, zeta being the classical ground degeneracy; its basis is
/// carried along the grid by discrete parallel transport.
BoundReport adiabatic_bound(const IsingInstance& inst, const ControlSchedule& sched, double t_f,
                            std::size_t u_grid, const BoundOptions& options = {});

/// Sorted eigenvalues of H_I against sorted classical energies, and the
/// Gibbs diagonal at beta = 1 against the Boltzmann distribution, both to
/// 1e-10.
bool spectrum_equivalence_check(const IsingInstance& inst, double tol = 1e-10);

}  // namespace isingqa
