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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "isingqa/errors.hpp"
#include "isingqa/schedule.hpp"

using namespace isingqa;
using Catch::Approx;

TEST_CASE("default annealing controls") {
  const auto s = default_dw_schedule();
  CHECK(s.A(0.0) == Approx(2.88).epsilon(1e-15));
  CHECK(std::abs(s.A(0.6)) <= 1e-12);
  CHECK(s.A(0.8) == 0.0);
  CHECK(s.B(0.0) == 0.0);
  CHECK(s.B(1.0) == Approx(5.4).epsilon(1e-15));
  CHECK(s.temperature == 0.1);
  for (double t = 0.0; t < 0.6; t += 0.05) CHECK(s.A(t) >= -1e-12);
  // Derivatives against central differences.
  for (double t : {0.1, 0.3, 0.5, 0.9}) {
    const double h = 1e-6;
    CHECK(s.controls.dA(t) == Approx((s.A(t + h) - s.A(t - h)) / (2 * h)).margin(1e-6));
    CHECK(s.controls.dB(t) == Approx((s.B(t + h) - s.B(t - h)) / (2 * h)).margin(1e-6));
  }
}

TEST_CASE("imaginary-time coupling") {
  // -1.5 ln tanh(0.96), evaluated to 18 digits outside this code base.
  CHECK(imaginary_time_coupling(2.88, 30, 0.1) == Approx(0.443013269734057633).epsilon(1e-13));
  // tanh(A / tau T) = e^-1 gives tau T / 2, and e^-2 gives tau T.
  CHECK(imaginary_time_coupling(3.0 * std::atanh(std::exp(-1.0)), 30, 0.1) ==
        Approx(1.5).epsilon(1e-13));
  CHECK(imaginary_time_coupling(3.0 * std::atanh(std::exp(-2.0)), 30, 0.1) ==
        Approx(3.0).epsilon(1e-13));
  // Clamp at 1e-12 with tau T = 3.
  const double j0 = imaginary_time_coupling(0.0, 30, 0.1);
  CHECK(std::isfinite(j0));
  CHECK(j0 == Approx(43.0944501068949868).epsilon(1e-12));
  CHECK(j0 >= 10.0);
  double prev = 0.0;
  for (double at = 3.0; at > 0.01; at *= 0.8) {
    const double j = imaginary_time_coupling(at, 30, 0.1);
    CHECK(j > prev);
    prev = j;
  }
  CHECK_THROWS_AS(imaginary_time_coupling(1.0, 1, 0.1), InvalidArgument);
  CHECK_THROWS_AS(imaginary_time_coupling(1.0, 4, 0.0), InvalidArgument);
  CHECK_THROWS_AS(imaginary_time_coupling(-1.0, 4, 0.1), InvalidArgument);
}

TEST_CASE("cooling schedules") {
  const auto log = CoolingSchedule::inverse_log(2.0);
  CHECK(log.temperature(1, 100) == Approx(2.0 / std::log(2.0)));
  CHECK(log.temperature(100, 100) == Approx(2.0 / std::log(101.0)));
  const auto ik = CoolingSchedule::inverse_k(2.0);
  CHECK(ik.temperature(1, 100) == Approx(2.0));
  CHECK_THROWS_AS(log.temperature(0, 100), InvalidArgument);
  for (std::size_t k = 2; k <= 1000; ++k) {
    CHECK(log.temperature(k, 1000) <= log.temperature(k - 1, 1000));
    CHECK(log.temperature(k, 1000) >= 1e-3);
  }
  CHECK(parse_cooling_kind("inverse-log-k") == CoolingKind::InverseLogK);
  CHECK(parse_cooling_kind(to_string(CoolingKind::Linear)) == CoolingKind::Linear);
  CHECK_THROWS_AS(parse_cooling_kind("geometric"), InvalidArgument);

  CoolingSchedule bad;
  bad.kind = CoolingKind::Table;
  bad.table = {1.0, 2.0};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}
