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

// Acceptance run: one PASS/FAIL line per criterion, followed by the
// individual checks behind each line. Tolerances and runtime limits are
// fixed here. The process exits 0 once every criterion has been evaluated,
// so a FAIL line is a reported result, not a crash; it exits 1 only when a
// criterion could not be evaluated at all.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isingqa/verify.hpp"

using namespace isingqa;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct Criterion {
  int number;
  std::string title;
  double limit_s;
  std::function<std::vector<Check>()> run;
};

struct Outcome {
  bool passed = false;
  double elapsed = 0.0;
  std::vector<Check> checks;
  std::string error;
};

Outcome evaluate(const Criterion& c) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.checks = c.run();
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  out.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.passed = out.error.empty() && out.elapsed <= c.limit_s;
  for (const auto& k : out.checks) {
    if (!k.informational && !k.passed) out.passed = false;
  }
  return out;
}

std::string summary_line(const Criterion& c, const Outcome& o) {
  char buf[160];
  std::snprintf(buf, sizeof buf, " (%.1f s, limit %.0f s)", o.elapsed, c.limit_s);
  return std::string(o.passed ? "PASS" : "FAIL") + "  criterion " + std::to_string(c.number) +
         ": " + c.title + buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string report_path;
  std::size_t threads = 1;
  bool full_trends = false;
  bool skip_reduced = false;
  app.add_option("--report", report_path, "also write the report to this file");
  app.add_option("--threads", threads, "worker threads for the batch criteria (0 = all cores)");
  app.add_flag("--full-trends", full_trends,
               "run the b = 72 trend experiment even when it exceeds its runtime limit");
  app.add_flag("--skip-reduced", skip_reduced, "skip the reduced-scale trend run");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria;
  criteria.push_back({1, "quantum Ising spectrum equals classical energies, b = 2..8", 60.0, [] {
                        return std::vector<Check>{spectrum_identity_suite(2, 8, 100, kSeed, 1e-10)};
                      }});
  criteria.push_back({2, "adiabatic lower bound and duration trend, b = 1..3", 300.0, [] {
                        BoundSuiteOptions o;
                        o.sizes = {1, 2, 3};
                        o.durations = {1.0, 10.0, 100.0};
                        o.u_grid = 256;
                        o.inversion_allowance = 0.01;
                        o.seed = kSeed;
                        return adiabatic_bound_suite(o);
                      }});
  criteria.push_back({3, "move deltas match energy differences", 10.0, [] {
                        return std::vector<Check>{delta_oracle_suite(1000, 6, 8, kSeed, 1e-10)};
                      }});
  criteria.push_back({4, "stationary distributions pass chi-square at 0.01", 120.0, [threads] {
                        StationaritySuiteOptions o;
                        o.samples = 1000000;
                        o.alpha = 0.01;
                        o.seed = kSeed;
                        o.threads = threads;
                        return stationarity_suite(o);
                      }});
  criteria.push_back({5, "Trotter error log-log slope <= -1.8, b = 1, 2", 30.0,
                      [] { return trotter_rate_suite({4, 8, 16, 32}, -1.8); }});
  criteria.push_back({6, "slice statistic approaches its normal limit", 120.0, [] {
                        CltSuiteOptions o;
                        o.Ms = {8, 16, 32, 64, 128, 256};
                        o.samples = 100000;
                        o.alpha = 0.01;
                        o.var_lo = 0.97;
                        o.var_hi = 1.03;
                        o.seed = kSeed;
                        return clt_suite(o);
                      }});
  criteria.push_back({7, "SA solves b = 16 cells in >= 95% of runs", 300.0, [threads] {
                        SaQualityOptions o;
                        o.instances = 20;
                        o.runs = 1000;
                        o.sweeps = 10000;
                        o.threshold = 0.95;
                        o.seed = kSeed;
                        o.threads = threads;
                        return std::vector<Check>{sa_quality_suite(o)};
                      }});
  criteria.push_back({8, "SQA trends in sweeps and tau at b = 72", 1800.0, [threads, full_trends] {
                        TrendOptions o;
                        o.seed = kSeed;
                        o.threads = threads;
                        o.budget_s = 1800.0;
                        o.force = full_trends;
                        return sqa_trend_suite(o);
                      }});
  criteria.push_back({9, "identical CSV at 1, 4 and 16 workers", 600.0, [] {
                        return std::vector<Check>{determinism_suite({1, 4, 16}, kSeed)};
                      }});

  std::vector<Outcome> outcomes;
  std::ostringstream report;
  for (const auto& c : criteria) {
    outcomes.push_back(evaluate(c));
    const auto line = summary_line(c, outcomes.back());
    std::cout << line << std::endl;
    report << line << '\n';
  }

  std::ostringstream details;
  details << "\ndetails\n";
  bool evaluated = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& o = outcomes[k];
    details << "criterion " << criteria[k].number << '\n';
    if (!o.error.empty()) {
      details << "  ERROR " << o.error << '\n';
      evaluated = false;
    }
    VerifyReport sub;
    sub.checks = o.checks;
    std::istringstream lines(sub.to_text());
    for (std::string line; std::getline(lines, line);) details << "  " << line << '\n';
  }

  if (!skip_reduced && !full_trends) {
    // The b = 72 experiment does not fit its limit on small machines. The
    // same protocol at reduced scale shows the direction of both effects;
    // it is informational and does not change criterion 8.
    TrendOptions o;
    o.cells = 2;
    o.instances = 20;
    o.runs = 100;
    o.sweeps_lo = 1000;
    o.sweeps_hi = 2000;
    o.seed = kSeed;
    o.threads = threads;
    o.force = true;
    o.budget_s = 1e9;
    details << "reduced-scale trend run (informational)\n";
    try {
      auto checks = sqa_trend_suite(o);
      for (auto& c : checks) c.informational = true;
      VerifyReport sub;
      sub.checks = checks;
      std::istringstream lines(sub.to_text());
      for (std::string line; std::getline(lines, line);) details << "  " << line << '\n';
    } catch (const std::exception& e) {
      details << "  ERROR " << e.what() << '\n';
    }
  }

  std::cout << details.str();
  report << details.str();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << report.str();
  }
  return evaluated ? 0 : 1;
}
