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
#include <functional>
#include <string>
#include <vector>

namespace isingqa {

// ---------------------------------------------------------------------------
// Classical cooling

enum class CoolingKind { InverseK, InverseLogK, Linear, Table };

/// Temperature schedule T_k for sweeps k = 1..total.
///
///   InverseK:    T_k = c / k
///   InverseLogK: T_k = c / ln(k + 1)
///   Linear:      T_k falls linearly from c at k = 1 to floor at k = total
///   Table:       T_k = table[min(k, size) - 1]
///
/// The analytic forms are clipped below at `floor`.
struct CoolingSchedule {
  CoolingKind kind = CoolingKind::InverseLogK;
  double c = 2.0;
  double floor = 1e-3;
  std::vector<double> table;

  double temperature(std::size_t k, std::size_t total) const;
  /// Throws InvalidArgument unless T_k > 0 and non-increasing.
  void validate() const;

  static CoolingSchedule inverse_log(double c = 2.0, double floor = 1e-3);
  static CoolingSchedule inverse_k(double c = 2.0, double floor = 1e-3);
};

CoolingKind parse_cooling_kind(const std::string& name);
std::string to_string(CoolingKind kind);

// ---------------------------------------------------------------------------
// Quantum annealing controls on normalized time u in [0, 1]

/// A(u), B(u) and their closed-form derivatives.
struct ControlSchedule {
  std::function<double(double)> A;
  std::function<double(double)> B;
  std::function<double(double)> dA;
  std::function<double(double)> dB;
  std::string name;
};

/// Transverse / Ising controls plus the path-integral temperature.
struct SqaSchedule {
  ControlSchedule controls;
  double temperature = 0.1;
  /// Floor applied to A(t) before computing the imaginary-time coupling.
  double eps_A = 1e-12;

  double A(double t) const { return controls.A(t); }
  double B(double t) const { return controls.B(t); }
  double clamped_A(double t) const;
};

/// A(t) = 8t^2 - 9.6t + 2.88 on [0, 0.6] and 0 after; B(t) = 5.2t^2 + 0.2t;
/// T = 0.1.
SqaSchedule default_dw_schedule();

/// A(t) = a, B(t) = b for all t.
ControlSchedule constant_controls(double a, double b);
/// A(t) = a (1 - t), B(t) = b t.
ControlSchedule linear_controls(double a, double b);

/// J(t) = -(tau T / 2) ln tanh(max(A_t, eps_A) / (tau T)); strictly positive
/// and increasing as A_t decreases.
double imaginary_time_coupling(double A_t, std::size_t tau, double temperature,
                               double eps_A = 1e-12);

}  // namespace isingqa
