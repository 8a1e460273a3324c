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
#include "isingqa/rng.hpp"
#include "isingqa/stats.hpp"

using namespace isingqa;
using Catch::Approx;

TEST_CASE("moments") {
  const std::vector<double> xs{1, 2, 3, 4};
  CHECK(mean(xs) == 2.5);
  CHECK(variance(xs) == Approx(5.0 / 3.0));
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.959963984540054) == Approx(0.975).epsilon(1e-12));
  CHECK(normal_cdf(3.0, 1.0, 2.0) == Approx(normal_cdf(1.0)));
}

TEST_CASE("chi-square goodness of fit") {
  // Loaded die: statistic 13.4 on 5 degrees of freedom.
  const std::vector<std::uint64_t> obs{5, 8, 9, 8, 10, 20};
  const std::vector<double> p(6, 1.0 / 6.0);
  const auto r = chi_square_gof(obs, p);
  CHECK(r.statistic == Approx(13.4));
  CHECK(r.dof == 5);
  CHECK(r.p_value == Approx(0.019905220334774).epsilon(1e-9));

  // Cells with small expectation are pooled.
  const std::vector<std::uint64_t> few{50, 48, 1, 1};
  const std::vector<double> q{0.5, 0.48, 0.01, 0.01};
  const auto pooled = chi_square_gof(few, q);
  CHECK(pooled.pooled_cells > 0);
  CHECK(pooled.dof == 2);
  CHECK_THROWS_AS(chi_square_gof(few, p), InvalidArgument);
}

TEST_CASE("Kolmogorov-Smirnov") {
  CHECK(kolmogorov_sf(0.0) == 1.0);
  CHECK(kolmogorov_sf(1.3580986393225505) == Approx(0.05).epsilon(1e-6));
  Rng rng(4);
  std::vector<double> u(5000);
  for (auto& x : u) x = uniform01(rng);
  const auto good = ks_test(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(good.p_value > 0.01);
  for (auto& x : u) x = x * x;
  const auto bad = ks_test(u, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(bad.p_value < 1e-6);
}

TEST_CASE("sign test") {
  const std::vector<double> d{1, 1, 1, 1, 1, 0, -1};
  const auto r = sign_test_greater(d);
  CHECK(r.positive == 5);
  CHECK(r.negative == 1);
  CHECK(r.ties == 1);
  CHECK(r.p_value == Approx(7.0 / 64.0));
  const std::vector<double> ties{0, 0};
  CHECK(sign_test_greater(ties).p_value == 1.0);
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{1, 2, 4, 8};
  const std::vector<double> y{1, 0.25, 0.0625, 0.015625};
  CHECK(loglog_slope(x, y) == Approx(-2.0));
  const std::vector<double> z{1, 0, 1, 1};
  CHECK_THROWS_AS(loglog_slope(x, z), InvalidArgument);
}
