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

#include "isingqa/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "isingqa/errors.hpp"

namespace isingqa {

double CoolingSchedule::temperature(std::size_t k, std::size_t total) const {
  if (k == 0) throw InvalidArgument("sweep index starts at 1");
  double t = 0.0;
  switch (kind) {
    case CoolingKind::InverseK:
      t = c / static_cast<double>(k);
      break;
    case CoolingKind::InverseLogK:
      t = c / std::log(static_cast<double>(k) + 1.0);
      break;
    case CoolingKind::Linear:
      t = total <= 1 ? c
                     : c - (c - floor) * static_cast<double>(k - 1) /
                               static_cast<double>(total - 1);
      break;
    case CoolingKind::Table:
      if (table.empty()) throw InvalidArgument("empty temperature table");
      return table[std::min(k, table.size()) - 1];
  }
  return std::max(t, floor);
}

void CoolingSchedule::validate() const {
  if (kind == CoolingKind::Table) {
    if (table.empty()) throw InvalidArgument("empty temperature table");
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (!(table[k] > 0.0)) throw InvalidArgument("temperature table entries must be > 0");
      if (k > 0 && table[k] > table[k - 1]) {
        throw InvalidArgument("temperature table must be non-increasing");
      }
    }
    return;
  }
  if (!(floor > 0.0)) throw InvalidArgument("temperature floor must be > 0");
  if (!(c > 0.0)) throw InvalidArgument("temperature scale c must be > 0");
}

CoolingSchedule CoolingSchedule::inverse_log(double c, double floor) {
  return {CoolingKind::InverseLogK, c, floor, {}};
}

CoolingSchedule CoolingSchedule::inverse_k(double c, double floor) {
  return {CoolingKind::InverseK, c, floor, {}};
}

CoolingKind parse_cooling_kind(const std::string& name) {
  if (name == "inverse-k") return CoolingKind::InverseK;
  if (name == "inverse-log-k") return CoolingKind::InverseLogK;
  if (name == "linear") return CoolingKind::Linear;
  if (name == "table") return CoolingKind::Table;
  throw InvalidArgument("unknown cooling schedule '" + name + "'");
}

std::string to_string(CoolingKind kind) {
  switch (kind) {
    case CoolingKind::InverseK: return "inverse-k";
    case CoolingKind::InverseLogK: return "inverse-log-k";
    case CoolingKind::Linear: return "linear";
    case CoolingKind::Table: return "table";
  }
  return "?";
}

double SqaSchedule::clamped_A(double t) const { return std::max(controls.A(t), eps_A); }

SqaSchedule default_dw_schedule() {
  ControlSchedule c;
  c.name = "dw";
  c.A = [](double t) { return t <= 0.6 ? 8.0 * t * t - 9.6 * t + 2.88 : 0.0; };
  c.dA = [](double t) { return t <= 0.6 ? 16.0 * t - 9.6 : 0.0; };
  c.B = [](double t) { return 5.2 * t * t + 0.2 * t; };
  c.dB = [](double t) { return 10.4 * t + 0.2; };
  return {std::move(c), 0.1, 1e-12};
}

ControlSchedule constant_controls(double a, double b) {
  return {[a](double) { return a; }, [b](double) { return b; }, [](double) { return 0.0; },
          [](double) { return 0.0; }, "constant"};
}

ControlSchedule linear_controls(double a, double b) {
  return {[a](double t) { return a * (1.0 - t); }, [b](double t) { return b * t; },
          [a](double) { return -a; }, [b](double) { return b; }, "linear"};
}

double imaginary_time_coupling(double A_t, std::size_t tau, double temperature, double eps_A) {
  if (tau < 2) throw InvalidArgument("need at least two Trotter slices");
  if (!(temperature > 0.0)) throw InvalidArgument("temperature must be positive");
  if (A_t < 0.0) throw InvalidArgument("transverse strength must be non-negative");
  const double tt = static_cast<double>(tau) * temperature;
  const double x = std::max(A_t, eps_A) / tt;
  // -ln tanh x = ln coth x = log1p(2 / expm1(2x)), accurate at both ends.
  return 0.5 * tt * std::log1p(2.0 / std::expm1(2.0 * x));
}

}  // namespace isingqa
