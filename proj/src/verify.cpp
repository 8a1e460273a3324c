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

#include "isingqa/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "isingqa/chimera.hpp"
#include "isingqa/errors.hpp"
#include "isingqa/experiment.hpp"
#include "isingqa/parallel.hpp"
#include "isingqa/quantum.hpp"
#include "isingqa/rng.hpp"
#include "isingqa/sa.hpp"
#include "isingqa/stats.hpp"
#include "isingqa/trotter.hpp"

namespace isingqa {

namespace {

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

IsingInstance unit_pair(double h0 = 0.0, double h1 = 0.0) {
  std::vector<double> h;
  if (h0 != 0.0 || h1 != 0.0) h = {h0, h1};
  return IsingInstance(2, {{0, 1, 1.0}}, h, "pair");
}

IsingInstance real_dense_instance(std::size_t b, Rng& rng, bool fields) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) edges.push_back({i, j, 2.0 * uniform01(rng) - 1.0});
  }
  std::vector<double> h;
  if (fields) {
    for (std::size_t i = 0; i < b; ++i) h.push_back(2.0 * uniform01(rng) - 1.0);
  }
  return IsingInstance(b, std::move(edges), std::move(h));
}

PathIntegralState random_path(std::size_t tau, std::size_t b, Rng& rng) {
  return PathIntegralState::random(tau, b, rng);
}

// Draws `samples` final states of independent chains and tests their
// histogram against `target`.
Check chi_square_check(const std::string& name, std::size_t samples, std::size_t threads,
                       const std::vector<double>& target, double alpha,
                       const std::function<std::uint64_t(std::size_t)>& draw) {
  std::vector<std::uint32_t> idx(samples);
  parallel_for(samples, threads, [&](std::size_t k) { idx[k] = static_cast<std::uint32_t>(draw(k)); });
  std::vector<std::uint64_t> counts(target.size(), 0);
  for (auto v : idx) ++counts.at(v);
  const auto r = chi_square_gof(counts, target);
  Check c;
  c.name = name;
  c.statistic = r.p_value;
  c.threshold = alpha;
  c.passed = r.p_value >= alpha;
  c.detail = fmt("chi2 = %.3f, dof = %zu, p = %.4f, %zu samples", r.statistic, r.dof, r.p_value,
                 samples);
  return c;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed || c.informational; });
}

void VerifyReport::append(std::vector<Check> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    const char* tag = c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL");
    out << tag << "  " << c.name << "  (" << c.detail << ")\n";
  }
  return out.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json o;
    o["name"] = c.name;
    o["passed"] = c.passed;
    o["informational"] = c.informational;
    o["statistic"] = std::isfinite(c.statistic) ? nlohmann::ordered_json(c.statistic) : nullptr;
    o["threshold"] = std::isfinite(c.threshold) ? nlohmann::ordered_json(c.threshold) : nullptr;
    o["detail"] = c.detail;
    j.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

IsingInstance random_dense_instance(std::size_t b, std::uint64_t seed, bool fields) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = i + 1; j < b; ++j) {
      edges.push_back({i, j, static_cast<double>(random_spin(rng))});
    }
  }
  std::vector<double> h;
  if (fields) {
    for (std::size_t i = 0; i < b; ++i) h.push_back(2.0 * uniform01(rng) - 1.0);
  }
  return IsingInstance(b, std::move(edges), std::move(h), fmt("dense_b%zu", b));
}

Check spectrum_identity_suite(std::size_t b_lo, std::size_t b_hi, std::size_t per_b,
                              std::uint64_t seed, double tol) {
  std::size_t failures = 0;
  std::size_t total = 0;
  for (std::size_t b = b_lo; b <= b_hi; ++b) {
    for (std::size_t k = 0; k < per_b; ++k) {
      const auto inst = random_dense_instance(b, derive_seed(seed, b, k));
      if (!spectrum_equivalence_check(inst, tol)) ++failures;
      ++total;
    }
  }
  Check c;
  c.name = "spectrum identity";
  c.statistic = static_cast<double>(failures);
  c.threshold = 0.0;
  c.passed = failures == 0;
  c.detail = fmt("%zu of %zu instances at b = %zu..%zu differ beyond %.0e", failures, total, b_lo,
                 b_hi, tol);
  return c;
}

std::vector<Check> adiabatic_bound_suite(const BoundSuiteOptions& options) {
  auto durations = options.durations;
  std::sort(durations.begin(), durations.end());
  const auto controls = default_dw_schedule().controls;

  std::size_t cases = 0;
  std::size_t positive = 0;
  std::size_t violations = 0;
  std::size_t trend_failures = 0;
  std::size_t instances = 0;
  std::size_t errors = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string error_text;

  for (std::size_t b : options.sizes) {
    for (std::size_t k = 0; k < options.per_size; ++k) {
      IsingInstance inst;
      for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng(derive_seed(options.seed, b, k * 1000 + attempt));
        if (b == 1) {
          const double mag = 0.2 + 0.8 * uniform01(rng);
          inst = IsingInstance(1, {}, {random_spin(rng) * mag});
        } else {
          inst = real_dense_instance(b, rng, true);
        }
        if (brute_force_ground(inst).degeneracy() == 1) break;
      }
      ++instances;
      std::vector<double> success;
      try {
        for (double t_f : durations) {
          const auto rep = adiabatic_bound(inst, controls, t_f, options.u_grid);
          ++cases;
          success.push_back(rep.true_success);
          if (rep.lower_bound > 0.0) {
            ++positive;
            worst_margin = std::min(worst_margin, rep.true_success - rep.lower_bound);
            if (rep.true_success < rep.lower_bound) ++violations;
          }
        }
      } catch (const std::exception& e) {
        ++errors;
        error_text = e.what();
        continue;
      }
      std::size_t inversions = 0;
      double depth = 0.0;
      for (std::size_t q = 1; q < success.size(); ++q) {
        if (success[q] < success[q - 1]) {
          ++inversions;
          depth = std::max(depth, success[q - 1] - success[q]);
        }
      }
      if (inversions > 1 || (inversions == 1 && depth > options.inversion_allowance)) {
        ++trend_failures;
      }
    }
  }

  Check bound;
  bound.name = "success >= adiabatic lower bound";
  bound.statistic = static_cast<double>(violations + errors);
  bound.threshold = 0.0;
  bound.passed = violations == 0 && errors == 0;
  bound.detail = fmt("%zu cases, %zu with a positive bound, %zu violations", cases, positive,
                     violations);
  if (positive > 0) bound.detail += fmt(", smallest margin %.3e", worst_margin);
  if (errors > 0) bound.detail += ", error: " + error_text;

  Check trend;
  trend.name = "success non-decreasing in t_f";
  trend.statistic = static_cast<double>(trend_failures + errors);
  trend.threshold = 0.0;
  trend.passed = trend_failures == 0 && errors == 0;
  trend.detail = fmt("%zu of %zu instances break the trend (one inversion <= %.2f allowed)",
                     trend_failures, instances, options.inversion_allowance);
  return {bound, trend};
}

Check delta_oracle_suite(std::size_t pairs, std::size_t b_max, std::size_t tau_max,
                         std::uint64_t seed, double tol, const DeltaFunctions& fns) {
  const auto sched = default_dw_schedule();
  double worst[3] = {0.0, 0.0, 0.0};
  std::size_t count[3] = {0, 0, 0};
  for (std::size_t k = 0; k < pairs; ++k) {
    Rng rng(derive_seed(seed, k, 3));
    const std::size_t kind = k % 3;
    const std::size_t b = 1 + uniform_index(rng, b_max);
    if (kind == 0) {
      const auto inst = real_dense_instance(b, rng, true);
      std::vector<std::int8_t> spins(b);
      for (auto& v : spins) v = random_spin(rng);
      SpinConfiguration s(spins);
      const std::size_t i = uniform_index(rng, b);
      auto t = s;
      t.flip(i);
      const double direct = energy(inst, t) - energy(inst, s);
      worst[0] = std::max(worst[0], std::abs(fns.flip(inst, s, i) - direct));
    } else {
      const auto inst = real_dense_instance(b, rng, false);
      const std::size_t tau = 2 + uniform_index(rng, tau_max - 1);
      const auto state = random_path(tau, b, rng);
      const auto c = sqa_couplings(sched, tau, uniform01(rng));
      const std::size_t i = uniform_index(rng, b);
      auto moved = state;
      double claimed = 0.0;
      if (kind == 1) {
        const std::size_t l = uniform_index(rng, tau);
        moved.flip(l, i);
        claimed = fns.local(inst, state, l, i, c);
      } else {
        for (std::size_t l = 0; l < tau; ++l) moved.flip(l, i);
        claimed = fns.global(inst, state, i, c);
      }
      const double direct = path_energy(inst, moved, c.B, c.J) - path_energy(inst, state, c.B, c.J);
      worst[kind] = std::max(worst[kind], std::abs(claimed - direct));
    }
    ++count[kind];
  }
  Check c;
  c.name = "move energies match direct differences";
  c.statistic = std::max({worst[0], worst[1], worst[2]});
  c.threshold = tol;
  c.passed = c.statistic <= tol;
  c.detail = fmt("max error: flip %.2e (%zu), local %.2e (%zu), global %.2e (%zu); tol %.0e",
                 worst[0], count[0], worst[1], count[1], worst[2], count[2], tol);
  return c;
}

std::vector<Check> stationarity_suite(const StationaritySuiteOptions& options) {
  std::vector<Check> out;
  const std::size_t n = options.samples;
  constexpr std::size_t kBurnSweeps = 50;
  constexpr std::size_t kBurnSteps = 300;

  {
    const auto inst = unit_pair(0.3, -0.2);
    const double temperature = 1.0;
    out.push_back(chi_square_check(
        "SA chain at fixed T matches Boltzmann (b = 2)", n, options.threads,
        boltzmann_distribution(inst, 1.0 / temperature), options.alpha, [&](std::size_t k) {
          Rng rng(derive_seed(options.seed, 1, k));
          std::vector<std::int8_t> spins(2);
          for (auto& v : spins) v = random_spin(rng);
          SpinConfiguration s(spins);
          for (std::size_t w = 0; w < kBurnSweeps; ++w) sa_sweep(inst, s, temperature, rng);
          return s.index();
        }));
  }

  {
    const auto inst = unit_pair();
    auto sched = default_dw_schedule();
    sched.temperature = 1.0 / 3.0;
    constexpr std::size_t tau = 3;
    const auto c = sqa_couplings(sched, tau, 0.3);
    std::vector<double> target(64);
    double z = 0.0;
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
      const auto s = PathIntegralState::from_index(tau, 2, idx);
      target[idx] = std::exp(-path_energy(inst, s, c.B, c.J) * c.inv_temperature);
      z += target[idx];
    }
    for (auto& p : target) p /= z;
    out.push_back(chi_square_check(
        "SQA sweeps at frozen t match path Boltzmann (b = 2, tau = 3)", n, options.threads, target,
        options.alpha, [&](std::size_t k) {
          Rng rng(derive_seed(options.seed, 2, k));
          auto s = PathIntegralState::random(tau, 2, rng);
          for (std::size_t w = 0; w < kBurnSweeps; ++w) {
            local_sweep(inst, s, c, rng);
            global_sweep(inst, s, c, rng);
          }
          return s.index();
        }));
  }

  {
    const auto inst = unit_pair();
    TheoryParams params;
    params.beta = 1.0;
    params.M = 3;
    params.Gamma = [](double) { return 1.0; };
    // Late enough that Gamma = 1 clears the admissibility floor.
    constexpr double t_fixed = 1e6;
    const double gamma = gamma_coupling(params.beta, 1.0, params.M);
    const auto target = q_target(inst, params.beta, params.M, gamma);
    out.push_back(chi_square_check(
        "theory chain at fixed t matches q(s, t) (b = 2, M = 3)", n, options.threads, target,
        options.alpha, [&](std::size_t k) {
          Rng rng(derive_seed(options.seed, 3, k));
          return mcmc_q_t(params, inst, kBurnSteps, rng, nullptr, t_fixed).index();
        }));

    const auto g = transition_matrix(inst, params, t_fixed);
    double worst = 0.0;
    double column = 0.0;
    for (Eigen::Index x = 0; x < g.cols(); ++x) {
      column = std::max(column, std::abs(g.col(x).sum() - 1.0));
      for (Eigen::Index y = 0; y < g.rows(); ++y) {
        const double lhs = g(y, x) * target[static_cast<std::size_t>(x)];
        const double rhs = g(x, y) * target[static_cast<std::size_t>(y)];
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    Check c;
    c.name = "detailed balance G(y,x)q(x) = G(x,y)q(y) on all 64 x 64 pairs";
    c.statistic = std::max(worst, column);
    c.threshold = 1e-14;
    c.passed = c.statistic <= c.threshold;
    c.detail = fmt("max balance defect %.2e, max column-sum defect %.2e", worst, column);
    out.push_back(c);
  }
  return out;
}

std::vector<Check> trotter_rate_suite(const std::vector<std::size_t>& Ms, double max_slope) {
  std::vector<Check> out;
  const IsingInstance free_spin(1, {});
  const auto pair = unit_pair();
  for (const IsingInstance* inst : {&free_spin, &pair}) {
    std::vector<double> ms;
    std::vector<double> errs;
    double exact = 0.0;
    for (std::size_t M : Ms) {
      TheoryParams params;
      params.beta = 1.0;
      params.M = M;
      const auto r = trotter_partition_check(*inst, params, 1.0);
      ms.push_back(static_cast<double>(M));
      errs.push_back(r.abs_error);
      exact = r.exact;
    }
    Check c;
    c.name = fmt("Trotter error rate, b = %zu, beta Gamma = 1", inst->size());
    c.threshold = max_slope;
    std::string errors_text;
    for (std::size_t q = 0; q < ms.size(); ++q) {
      errors_text += fmt("%s%.0f:%.3e", q ? ", " : "", ms[q], errs[q]);
    }
    const double worst = *std::max_element(errs.begin(), errs.end());
    if (worst <= 1e-12 * exact) {
      // Without couplings the sliced sum reproduces the trace exactly; the
      // remaining differences are rounding and carry no slope.
      c.statistic = -std::numeric_limits<double>::infinity();
      c.passed = true;
      c.detail = "exact to rounding at every M (" + errors_text + ")";
    } else {
      c.statistic = loglog_slope(ms, errs);
      c.passed = c.statistic <= max_slope;
      c.detail = fmt("slope %.3f vs <= %.2f; errors ", c.statistic, max_slope) + errors_text;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Check> clt_suite(const CltSuiteOptions& options) {
  std::vector<Check> out;
  const auto inst = unit_pair();
  const auto rep = clt_convergence_test(inst, options.beta, options.Ms, options.samples,
                                        options.seed, true, options.alpha);
  const auto& first = rep.rows.front();
  const auto& last = rep.rows.back();

  Check dec;
  dec.name = fmt("CLT: KS distance shrinks from M = %zu to M = %zu", first.M, last.M);
  dec.statistic = last.ks;
  dec.threshold = first.ks;
  dec.passed = rep.decreasing;
  dec.detail = fmt("beta = %.3g;", options.beta);
  for (const auto& r : rep.rows) dec.detail += fmt(" M=%zu:%.4f", r.M, r.ks);
  out.push_back(dec);

  Check pass;
  pass.name = fmt("CLT: KS test vs N(0, sum J^2) at M = %zu", last.M);
  pass.statistic = last.p_value;
  pass.threshold = options.alpha;
  pass.passed = rep.passes_at_largest;
  pass.detail = fmt("D = %.5f, p = %.4f, n = %zu, lattice continuity correction", last.ks,
                    last.p_value, options.samples);
  out.push_back(pass);

  Check var;
  var.name = fmt("CLT: sample variance at M = %zu", last.M);
  var.statistic = last.variance;
  var.threshold = options.var_hi;
  var.passed = last.variance >= options.var_lo && last.variance <= options.var_hi;
  var.detail = fmt("var = %.4f in [%.2f, %.2f]; mean = %.5f (3 sigma = %.5f)", last.variance,
                   options.var_lo, options.var_hi, last.mean,
                   3.0 * std::sqrt(last.variance / static_cast<double>(options.samples)));
  out.push_back(var);

  if (options.report_biased) {
    // At beta = 1 each slice has mean tanh(beta / M), so X_M has mean
    // sqrt(M) tanh(beta / M), visible at this sample size.
    const std::vector<std::size_t> ms = {options.Ms.front(), options.Ms.back()};
    const auto biased = clt_convergence_test(inst, 1.0, ms, options.samples, options.seed + 1,
                                             true, options.alpha);
    const auto raw = clt_convergence_test(inst, 1.0, ms, options.samples, options.seed + 1,
                                          false, options.alpha);
    Check info;
    info.informational = true;
    info.name = "CLT at beta = 1 (finite-M bias)";
    const auto& b = biased.rows.back();
    const double m = static_cast<double>(b.M);
    info.statistic = b.ks;
    info.threshold = options.alpha;
    info.detail = fmt(
        "M=%zu: corrected D = %.4f (p = %.2g), raw D = %.4f (p = %.2g); mean %.4f vs predicted "
        "%.4f",
        b.M, b.ks, b.p_value, raw.rows.back().ks, raw.rows.back().p_value, b.mean,
        std::sqrt(m) * std::tanh(1.0 / m));
    out.push_back(info);
  }
  return out;
}

Check sa_quality_suite(const SaQualityOptions& options) {
  // One unit cell with shores of 8 gives b = 16.
  ChimeraSpec spec;
  spec.m = 1;
  spec.n = 1;
  spec.k = 8;
  const auto graph = chimera_graph(spec);
  ExperimentConfig cfg;
  cfg.method = Method::SA;
  for (std::size_t k = 0; k < options.instances; ++k) {
    cfg.instances.push_back(batch_instance(graph, options.seed, k, "cell"));
  }
  cfg.runs_per_instance = options.runs;
  cfg.sweeps = options.sweeps;
  cfg.cooling = CoolingSchedule::inverse_log();
  cfg.master_seed = options.seed;
  cfg.ground_truth = GroundTruth::BruteForce;
  cfg.threads = options.threads;
  const auto rep = run_experiment(cfg);
  double sum = 0.0;
  double lo = 1.0;
  for (const auto& r : rep.records) {
    sum += r.success_prob;
    lo = std::min(lo, r.success_prob);
  }
  Check c;
  c.name = "SA solve quality on single-cell Chimera (b = 16)";
  c.statistic = sum / static_cast<double>(rep.records.size());
  c.threshold = options.threshold;
  c.passed = c.statistic >= options.threshold;
  c.detail = fmt("mean success %.4f over %zu instances x %zu runs (worst %.3f), %zu sweeps",
                 c.statistic, options.instances, options.runs, lo, options.sweeps);
  return c;
}

std::vector<Check> sqa_trend_suite(const TrendOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  ChimeraSpec spec;
  spec.m = options.cells;
  spec.n = options.cells;
  const auto graph = chimera_graph(spec);

  ExperimentConfig base;
  base.method = Method::SQA;
  for (std::size_t k = 0; k < options.instances; ++k) {
    base.instances.push_back(batch_instance(graph, options.seed, k, "chimera"));
  }
  base.runs_per_instance = options.runs;
  base.sqa = default_dw_schedule();
  base.sqa.temperature = options.temperature;
  base.master_seed = options.seed;
  base.ground_truth = GroundTruth::Provided;
  base.threads = options.threads;
  base.protocol_grid = {10000, 50000};
  base.protocol_repeats = 10;

  // Calibration: cost of one slice-site update and one SA sweep-site.
  const auto& probe = base.instances.front();
  constexpr std::size_t kProbeSweeps = 500;
  auto tc = std::chrono::steady_clock::now();
  sqa_run(probe, base.sqa, options.tau_lo, kProbeSweeps, 1);
  const double per_update = seconds_since(tc) / static_cast<double>(kProbeSweeps * options.tau_lo *
                                                                     probe.size());
  tc = std::chrono::steady_clock::now();
  sa_run(probe, base.cooling, 20 * kProbeSweeps, 1);
  const double per_sa = seconds_since(tc) / static_cast<double>(20 * kProbeSweeps * probe.size());

  const double b = static_cast<double>(probe.size());
  const double runs_total = static_cast<double>(options.instances * options.runs);
  const double slice_sweeps = static_cast<double>(options.tau_lo * options.sweeps_lo +
                                                  options.tau_lo * options.sweeps_hi +
                                                  options.tau_hi * options.sweeps_lo);
  double protocol = 0.0;
  for (auto s : base.protocol_grid) protocol += static_cast<double>(s);
  const double projected =
      per_update * b * runs_total * slice_sweeps +
      per_sa * b * (runs_total * static_cast<double>(options.sweeps_lo) +
                    static_cast<double>(options.instances * base.protocol_repeats) * protocol);
  const std::string scale =
      fmt("b = %zu, %zu instances x %zu runs", probe.size(), options.instances, options.runs);

  Check sweeps_check;
  sweeps_check.name = fmt("SQA success non-decreasing in sweeps %zu -> %zu", options.sweeps_lo,
                          options.sweeps_hi);
  sweeps_check.threshold = options.alpha;
  Check tau_check;
  tau_check.name = fmt("SQA success non-increasing in tau %zu -> %zu", options.tau_lo,
                       options.tau_hi);
  tau_check.threshold = options.alpha;

  if (projected > options.budget_s && !options.force) {
    const auto text = fmt("not run: projected %.0f s on %zu worker(s) exceeds the %.0f s budget "
                          "(%.2f ns per slice-site sweep; %s)",
                          projected, resolve_threads(options.threads), options.budget_s,
                          per_update * 1e9, scale.c_str());
    sweeps_check.statistic = tau_check.statistic = projected;
    sweeps_check.detail = tau_check.detail = text;
    return {sweeps_check, tau_check};
  }

  for (std::size_t k = 0; k < base.instances.size(); ++k) {
    ExperimentConfig gt = base;
    gt.ground_truth = GroundTruth::SaProtocol;
    base.provided[base.instances[k].id()] = resolve_ground_energy(gt, k);
  }
  auto run = [&](std::size_t tau, std::size_t sweeps) {
    ExperimentConfig cfg = base;
    cfg.tau = tau;
    cfg.sweeps = sweeps;
    std::vector<double> p;
    for (const auto& r : run_experiment(cfg).records) p.push_back(r.success_prob);
    return p;
  };
  const auto lo = run(options.tau_lo, options.sweeps_lo);
  const auto hi = run(options.tau_lo, options.sweeps_hi);
  const auto wide = run(options.tau_hi, options.sweeps_lo);

  ExperimentConfig sa_cfg = base;
  sa_cfg.method = Method::SA;
  sa_cfg.sweeps = options.sweeps_lo;
  std::vector<double> sa_p;
  for (const auto& r : run_experiment(sa_cfg).records) sa_p.push_back(r.success_prob);

  std::vector<double> d_sweeps;
  std::vector<double> d_tau;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    d_sweeps.push_back(hi[k] - lo[k]);
    d_tau.push_back(lo[k] - wide[k]);
  }
  const auto st_s = sign_test_greater(d_sweeps);
  const auto st_t = sign_test_greater(d_tau);
  const double elapsed = seconds_since(t0);
  const bool in_budget = elapsed <= options.budget_s;

  sweeps_check.statistic = st_s.p_value;
  sweeps_check.passed = mean(d_sweeps) >= 0.0 && st_s.p_value < options.alpha && in_budget;
  sweeps_check.detail = fmt("mean %.4f -> %.4f; sign test +%zu/-%zu/=%zu, p = %.3g; %.0f s; ",
                            mean(lo), mean(hi), st_s.positive, st_s.negative, st_s.ties,
                            st_s.p_value, elapsed) +
                        scale;
  tau_check.statistic = st_t.p_value;
  tau_check.passed = mean(d_tau) >= 0.0 && st_t.p_value < options.alpha && in_budget;
  tau_check.detail = fmt("mean %.4f -> %.4f; sign test +%zu/-%zu/=%zu, p = %.3g; %.0f s; ",
                         mean(lo), mean(wide), st_t.positive, st_t.negative, st_t.ties,
                         st_t.p_value, elapsed) +
                     scale;

  Check order;
  order.informational = true;
  order.name = fmt("SA vs SQA mean success at %zu sweeps", options.sweeps_lo);
  order.statistic = mean(sa_p) - mean(lo);
  order.detail = fmt("SA %.4f, SQA (tau = %zu) %.4f%s", mean(sa_p), options.tau_lo, mean(lo),
                     mean(sa_p) >= mean(lo) ? "" : "; ordering reversed");
  return {sweeps_check, tau_check, order};
}

Check determinism_suite(const std::vector<std::size_t>& worker_counts, std::uint64_t seed) {
  ChimeraSpec spec;
  spec.m = 1;
  spec.n = 1;
  spec.k = 8;
  const auto graph = chimera_graph(spec);

  std::vector<ExperimentConfig> configs(3);
  auto& sa = configs[0];
  sa.method = Method::SA;
  for (std::size_t k = 0; k < 10; ++k) sa.instances.push_back(batch_instance(graph, seed, k, "cell"));
  sa.runs_per_instance = 20;
  sa.sweeps = 10000;

  auto& sqa = configs[1];
  sqa.method = Method::SQA;
  for (std::size_t k = 0; k < 4; ++k) sqa.instances.push_back(batch_instance(graph, seed, k, "cell"));
  sqa.runs_per_instance = 10;
  sqa.sweeps = 300;
  sqa.tau = 8;

  auto& qa = configs[2];
  qa.method = Method::ExactQA;
  for (std::size_t k = 0; k < 3; ++k) {
    qa.instances.push_back(random_dense_instance(3, derive_seed(seed, k, 9)).with_id(fmt("d%zu", k)));
  }
  qa.runs_per_instance = 100;
  qa.t_f = 5.0;
  qa.qa_steps = 200;

  std::size_t mismatches = 0;
  for (auto& cfg : configs) {
    cfg.master_seed = seed;
    std::string reference;
    for (std::size_t w : worker_counts) {
      cfg.threads = w;
      const auto csv = to_csv(run_experiment(cfg));
      if (reference.empty()) {
        reference = csv;
      } else if (csv != reference) {
        ++mismatches;
      }
    }
  }
  Check c;
  c.name = "identical CSV across worker counts";
  c.statistic = static_cast<double>(mismatches);
  c.threshold = 0.0;
  c.passed = mismatches == 0;
  std::string workers;
  for (std::size_t q = 0; q < worker_counts.size(); ++q) {
    workers += fmt("%s%zu", q ? "/" : "", worker_counts[q]);
  }
  c.detail = fmt("SA, SQA and exact-QA batches at %s workers; %zu mismatches", workers.c_str(),
                 mismatches);
  return c;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport rep;
  const bool full = options.level == VerifyLevel::Full;
  const std::uint64_t seed = options.seed;

  rep.checks.push_back(spectrum_identity_suite(2, full ? 8 : 4, full ? 100 : 20, seed, 1e-10));

  BoundSuiteOptions bound;
  bound.seed = seed;
  if (!full) {
    bound.sizes = {1, 2};
    bound.durations = {1.0, 10.0};
    bound.per_size = 1;
    bound.u_grid = 64;
  }
  rep.append(adiabatic_bound_suite(bound));

  rep.checks.push_back(delta_oracle_suite(full ? 1000 : 300, full ? 6 : 4, 8, seed, 1e-10,
                                          options.deltas));

  StationaritySuiteOptions stat;
  stat.samples = full ? 1000000 : 100000;
  stat.seed = seed;
  stat.threads = options.threads;
  rep.append(stationarity_suite(stat));

  rep.append(trotter_rate_suite({4, 8, 16, 32}, -1.8));

  CltSuiteOptions clt;
  clt.seed = seed;
  if (!full) {
    clt.Ms = {8, 32};
    clt.samples = 20000;
    clt.report_biased = false;
  }
  rep.append(clt_suite(clt));

  if (full) {
    SaQualityOptions qual;
    qual.seed = seed;
    qual.threads = options.threads;
    rep.checks.push_back(sa_quality_suite(qual));

    TrendOptions trend;
    trend.seed = seed;
    trend.threads = options.threads;
    rep.append(sqa_trend_suite(trend));
  }

  rep.checks.push_back(determinism_suite(full ? std::vector<std::size_t>{1, 4, 16}
                                              : std::vector<std::size_t>{1, 4},
                                         seed));
  return rep;
}

}  // namespace isingqa
