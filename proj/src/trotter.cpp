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

#include "isingqa/trotter.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "isingqa/errors.hpp"
#include "isingqa/quantum.hpp"
#include "isingqa/stats.hpp"

namespace isingqa {

namespace {

void require_no_fields(const IsingInstance& inst) {
  if (inst.has_fields()) {
    throw InvalidArgument("the path-integral distribution has no field term; instance '" +
                          inst.id() + "' has h != 0");
  }
}

std::size_t path_bits(const IsingInstance& inst, std::size_t M, std::size_t cap) {
  const std::size_t n = inst.size() * M;
  if (n > cap) {
    throw CapabilityError("exact path enumeration supports b M <= " + std::to_string(cap) +
                          ", got " + std::to_string(n));
  }
  return n;
}

// F0 and F1 of every path state, indexed like PathIntegralState::index.
struct PathTable {
  std::vector<double> f0;
  std::vector<double> f1;
  std::size_t bits = 0;

  PathTable(const IsingInstance& inst, std::size_t M, std::size_t cap) {
    bits = path_bits(inst, M, cap);
    const std::size_t count = std::size_t{1} << bits;
    f0.resize(count);
    f1.resize(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      const auto s = PathIntegralState::from_index(M, inst.size(), idx);
      f0[idx] = isingqa::f0(inst, s);
      f1[idx] = isingqa::f1(s);
    }
  }

  double log_weight(std::size_t idx, double beta, double gamma) const {
    return beta * f0[idx] + gamma * f1[idx];
  }
};

double gamma_at(const TheoryParams& params, double t) {
  return gamma_coupling(params.beta, params.Gamma(t), params.M);
}

double log_sum_exp(const std::vector<double>& xs) {
  const double m = *std::max_element(xs.begin(), xs.end());
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - m);
  return m + std::log(acc);
}

}  // namespace

void TheoryParams::validate() const {
  if (!(beta > 0.0)) throw ConfigError("beta must be positive");
  if (M < 2) throw ConfigError("need at least two slices");
  if (!(L1M > 0.0)) throw ConfigError("L1M must be positive");
  if (!Gamma) throw ConfigError("no transverse-field schedule");
}

double gamma_coupling(double beta, double Gamma_t, std::size_t M) {
  if (!(Gamma_t > 0.0) || !std::isfinite(Gamma_t)) {
    throw InvalidArgument("transverse field must be positive and finite, got " +
                          std::to_string(Gamma_t));
  }
  if (!(beta > 0.0) || M == 0) throw InvalidArgument("beta and M must be positive");
  const double x = beta * Gamma_t / static_cast<double>(M);
  // ln coth x = ln(1 + 2 / (e^{2x} - 1)), accurate at both ends.
  return 0.5 * std::log1p(2.0 / std::expm1(2.0 * x));
}

double gamma_schedule_floor(double t, const TheoryParams& params, std::size_t b) {
  if (t < 0.0) throw InvalidArgument("step index must be non-negative");
  const double c = 2.0 / (static_cast<double>(params.resolved_R(b)) * params.L1M);
  return static_cast<double>(params.M) / params.beta * std::atanh(std::pow(t + 2.0, -c));
}

double default_L1M_singleflip() { return 4.0; }

double slice_coupling_sum(const IsingInstance& inst, std::span<const std::int8_t> slice) {
  double acc = 0.0;
  for (const auto& e : inst.edges()) acc += e.J * slice[e.i] * slice[e.j];
  return acc;
}

double f0(const IsingInstance& inst, const PathIntegralState& state) {
  if (state.size() != inst.size()) throw InvalidArgument("path state does not match instance");
  double acc = 0.0;
  for (std::size_t l = 0; l < state.tau(); ++l) acc += slice_coupling_sum(inst, state.slice(l));
  return acc / static_cast<double>(state.tau());
}

double f1(const PathIntegralState& state) {
  double acc = 0.0;
  for (std::size_t l = 0; l < state.tau(); ++l) {
    const std::size_t nl = state.next_slice(l);
    for (std::size_t i = 0; i < state.size(); ++i) acc += state.at(l, i) * state.at(nl, i);
  }
  return acc;
}

SliceSampler::SliceSampler(const IsingInstance& inst, double beta_over_M) : b_(inst.size()) {
  require_no_fields(inst);
  if (b_ > kTheorySliceCap) {
    throw CapabilityError("exact slice sampling supports b <= " +
                          std::to_string(kTheorySliceCap));
  }
  const std::size_t count = std::size_t{1} << b_;
  sums_.resize(count);
  std::vector<double> logw(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto s = SpinConfiguration::from_index(b_, idx);
    sums_[idx] = slice_coupling_sum(inst, s.spins());
    logw[idx] = beta_over_M * sums_[idx];
  }
  const double lz = log_sum_exp(logw);
  probs_.resize(count);
  cumulative_.resize(count);
  double run = 0.0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    probs_[idx] = std::exp(logw[idx] - lz);
    run += probs_[idx];
    cumulative_[idx] = run;
  }
}

std::uint64_t SliceSampler::draw_index(Rng& rng) const {
  const double u = uniform01(rng) * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::uint64_t>(
      std::min<std::ptrdiff_t>(it - cumulative_.begin(),
                               static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
}

PathIntegralState sample_q_fixed(const TheoryParams& params, const IsingInstance& inst, Rng& rng) {
  if (!(params.beta > 0.0) || params.M < 2) throw ConfigError("need beta > 0 and M >= 2");
  const SliceSampler sampler(inst, params.beta / static_cast<double>(params.M));
  const std::size_t b = inst.size();
  std::vector<std::int8_t> spins(params.M * b);
  for (std::size_t l = 0; l < params.M; ++l) {
    const auto idx = sampler.draw_index(rng);
    for (std::size_t k = 0; k < b; ++k) {
      spins[l * b + k] = ((idx >> (b - 1 - k)) & 1U) ? -1 : 1;
    }
  }
  return PathIntegralState(params.M, b, std::move(spins));
}

double clt_statistic(const PathIntegralState& state, const IsingInstance& inst) {
  if (state.size() != inst.size()) throw InvalidArgument("path state does not match instance");
  double acc = 0.0;
  for (std::size_t l = 0; l < state.tau(); ++l) acc += slice_coupling_sum(inst, state.slice(l));
  return acc / std::sqrt(static_cast<double>(state.tau()));
}

double log_q_weight(const IsingInstance& inst, const PathIntegralState& state, double beta,
                    double gamma) {
  return beta * f0(inst, state) + gamma * f1(state);
}

std::vector<double> q_target(const IsingInstance& inst, double beta, std::size_t M,
                             double gamma) {
  require_no_fields(inst);
  const PathTable table(inst, M, kPathEnumerationCap);
  std::vector<double> logw(table.f0.size());
  for (std::size_t idx = 0; idx < logw.size(); ++idx) logw[idx] = table.log_weight(idx, beta, gamma);
  const double lz = log_sum_exp(logw);
  for (auto& v : logw) v = std::exp(v - lz);
  return logw;
}

double acceptance(AcceptanceRule rule, double ratio) {
  if (rule == AcceptanceRule::Metropolis) return std::min(1.0, ratio);
  if (std::isinf(ratio)) return 1.0;
  return ratio / (1.0 + ratio);
}

Eigen::MatrixXd transition_matrix(const IsingInstance& inst, const TheoryParams& params,
                                  double t) {
  params.validate();
  require_no_fields(inst);
  const PathTable table(inst, params.M, 10);
  const double gamma = gamma_at(params, t);
  const auto count = static_cast<Eigen::Index>(table.f0.size());
  const double p = 1.0 / static_cast<double>(table.bits);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(count, count);
  for (Eigen::Index x = 0; x < count; ++x) {
    const double lx = table.log_weight(static_cast<std::size_t>(x), params.beta, gamma);
    double out = 0.0;
    for (std::size_t bit = 0; bit < table.bits; ++bit) {
      const auto y = x ^ (Eigen::Index{1} << bit);
      const double ly = table.log_weight(static_cast<std::size_t>(y), params.beta, gamma);
      const double move = p * acceptance(params.rule, std::exp(ly - lx));
      g(y, x) = move;
      out += move;
    }
    g(x, x) = 1.0 - out;
  }
  return g;
}

std::vector<double> propagate_distribution(const IsingInstance& inst, const TheoryParams& params,
                                           double t, const std::vector<double>& dist) {
  params.validate();
  require_no_fields(inst);
  const PathTable table(inst, params.M, kPathEnumerationCap);
  if (dist.size() != table.f0.size()) throw InvalidArgument("distribution size mismatch");
  const double gamma = gamma_at(params, t);
  const double p = 1.0 / static_cast<double>(table.bits);
  std::vector<double> next(dist.size(), 0.0);
  for (std::size_t x = 0; x < dist.size(); ++x) {
    if (dist[x] == 0.0) continue;
    const double lx = table.log_weight(x, params.beta, gamma);
    double stay = 1.0;
    for (std::size_t bit = 0; bit < table.bits; ++bit) {
      const std::size_t y = x ^ (std::size_t{1} << bit);
      const double move =
          p * acceptance(params.rule, std::exp(table.log_weight(y, params.beta, gamma) - lx));
      next[y] += move * dist[x];
      stay -= move;
    }
    next[x] += stay * dist[x];
  }
  return next;
}

std::vector<double> slice_marginal(const std::vector<double>& dist, std::size_t b,
                                   std::size_t M) {
  const std::size_t bits = b * M;
  if (dist.size() != (std::size_t{1} << bits)) throw InvalidArgument("distribution size mismatch");
  std::vector<double> out(std::size_t{1} << b, 0.0);
  const std::size_t shift = bits - b;
  for (std::size_t idx = 0; idx < dist.size(); ++idx) out[idx >> shift] += dist[idx];
  return out;
}

PathIntegralState mcmc_q_t(const TheoryParams& params, const IsingInstance& inst,
                           std::size_t steps, Rng& rng, const PathIntegralState* start,
                           double t0) {
  params.validate();
  require_no_fields(inst);
  const std::size_t b = inst.size();
  const std::size_t M = params.M;
  PathIntegralState state = start ? *start : PathIntegralState::random(M, b, rng);
  if (state.size() != b || state.tau() != M) {
    throw InvalidArgument("start state does not match instance and M");
  }
  const std::size_t n = b * M;
  const double w0 = params.beta / static_cast<double>(M);
  auto s = state.mutable_data();

  double last_gamma_field = -1.0;
  double gamma = 0.0;
  for (std::size_t step = 0; step < steps; ++step) {
    const double t = t0 + static_cast<double>(step);
    const double field = params.Gamma(t);
    if (field != last_gamma_field) {
      // The floor is decreasing in t, so an unchanged Gamma stays admissible.
      const double floor = gamma_schedule_floor(t, params, b);
      if (!(field >= floor)) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "Gamma(%.6g) = %.6g is below the admissible floor %.6g",
                      t, field, floor);
        throw ConfigError(msg);
      }
      gamma = gamma_coupling(params.beta, field, M);
      last_gamma_field = field;
    }
    const std::size_t e = uniform_index(rng, n);
    const std::size_t l = e / b;
    const std::size_t i = e % b;
    const std::int8_t* cur = s.data() + l * b;
    double local = 0.0;
    for (const auto& nb : inst.neighbors(i)) local += nb.J * cur[nb.index];
    const double time = s[state.prev_slice(l) * b + i] + s[state.next_slice(l) * b + i];
    const double dlog = -2.0 * cur[i] * (w0 * local + gamma * time);
    bool accept = false;
    if (params.rule == AcceptanceRule::Metropolis) {
      accept = dlog >= 0.0 || uniform01(rng) < std::exp(dlog);
    } else {
      accept = uniform01(rng) < 1.0 / (1.0 + std::exp(-dlog));
    }
    if (accept) s[e] = static_cast<std::int8_t>(-s[e]);
  }
  return state;
}

double quantum_partition_function(const IsingInstance& inst, double beta, double Gamma) {
  require_no_fields(inst);
  if (inst.size() > kEvolveCap) throw CapabilityError("trace evaluation supports b <= 10");
  const std::size_t b = inst.size();
  const auto dim = Eigen::Index{1} << b;
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto s = SpinConfiguration::from_index(b, static_cast<std::uint64_t>(x));
    k(x, x) = beta * slice_coupling_sum(inst, s.spins());
    for (std::size_t q = 0; q < b; ++q) k(x ^ (Eigen::Index{1} << q), x) = beta * Gamma;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
  return es.eigenvalues().array().exp().sum();
}

double annealing_partition_function(const IsingInstance& inst, double beta, double Gamma) {
  const Eigen::MatrixXd h =
      build_quantum_ising(inst).matrix + Gamma * build_transverse(inst.size()).matrix;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return (-beta * es.eigenvalues().array()).exp().sum();
}

namespace {

// log of sum over path states of exp(beta F0 + gamma F1).
double log_path_partition(const IsingInstance& inst, double beta, std::size_t M, double gamma) {
  require_no_fields(inst);
  const std::size_t b = inst.size();
  if (b > kTheorySliceCap) {
    throw CapabilityError("transfer matrix supports b <= " + std::to_string(kTheorySliceCap));
  }
  if (M < 2) throw InvalidArgument("need at least two slices");
  const auto dim = Eigen::Index{1} << b;
  Eigen::VectorXd half(dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    const auto s = SpinConfiguration::from_index(b, static_cast<std::uint64_t>(x));
    half[x] = std::exp(0.5 * beta / static_cast<double>(M) * slice_coupling_sum(inst, s.spins()));
  }
  // Symmetrized transfer matrix D^1/2 K D^1/2 with K(s, s') = exp(gamma s.s').
  Eigen::MatrixXd t(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (Eigen::Index y = 0; y < dim; ++y) {
      const auto differ = std::popcount(static_cast<std::uint64_t>(x ^ y));
      const double overlap = static_cast<double>(b) - 2.0 * differ;
      t(x, y) = half[x] * std::exp(gamma * overlap) * half[y];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& mu = es.eigenvalues();
  const double top = mu[dim - 1];
  double acc = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) acc += std::pow(mu[k] / top, static_cast<double>(M));
  return static_cast<double>(M) * std::log(top) + std::log(acc);
}

}  // namespace

double path_partition_function(const IsingInstance& inst, double beta, std::size_t M,
                               double gamma) {
  return std::exp(log_path_partition(inst, beta, M, gamma));
}

double path_partition_function_brute(const IsingInstance& inst, double beta, std::size_t M,
                                     double gamma) {
  require_no_fields(inst);
  const PathTable table(inst, M, kPathEnumerationCap);
  std::vector<double> logw(table.f0.size());
  for (std::size_t idx = 0; idx < logw.size(); ++idx) logw[idx] = table.log_weight(idx, beta, gamma);
  return std::exp(log_sum_exp(logw));
}

PartitionCheck trotter_partition_check(const IsingInstance& inst, const TheoryParams& params,
                                       double Gamma_t) {
  if (!(params.beta > 0.0) || params.M < 2) throw ConfigError("need beta > 0 and M >= 2");
  const double gamma = gamma_coupling(params.beta, Gamma_t, params.M);
  const double m = static_cast<double>(params.M);
  const double log_prefactor = 0.5 * static_cast<double>(inst.size()) * m *
                               std::log(0.5 * std::sinh(2.0 * params.beta * Gamma_t / m));
  PartitionCheck out;
  out.exact = quantum_partition_function(inst, params.beta, Gamma_t);
  out.prefactored = std::exp(log_prefactor + log_path_partition(inst, params.beta, params.M, gamma));
  out.abs_error = std::abs(out.prefactored - out.exact);
  return out;
}

double slice_sum_spacing(const IsingInstance& inst) {
  if (!inst.is_integral()) return 0.0;
  if (inst.size() > kEnumerationCap) throw CapabilityError("slice enumeration cap exceeded");
  const std::size_t count = std::size_t{1} << inst.size();
  const auto s0 = SpinConfiguration::from_index(inst.size(), 0);
  const auto base = std::llround(slice_coupling_sum(inst, s0.spins()));
  long long g = 0;
  for (std::size_t idx = 1; idx < count; ++idx) {
    const auto s = SpinConfiguration::from_index(inst.size(), idx);
    g = std::gcd(g, std::llabs(std::llround(slice_coupling_sum(inst, s.spins())) - base));
  }
  return static_cast<double>(g);
}

CltReport clt_convergence_test(const IsingInstance& inst, double beta,
                               const std::vector<std::size_t>& Ms, std::size_t n_samples,
                               std::uint64_t seed, bool continuity_correction, double alpha) {
  if (n_samples < 1000) throw ConfigError("CLT test needs at least 1000 samples");
  if (Ms.empty()) throw ConfigError("no slice counts given");
  CltReport rep;
  rep.target_variance = inst.coupling_square_sum();
  rep.continuity_correction = continuity_correction;
  const double sd = std::sqrt(rep.target_variance);
  const double spacing = continuity_correction ? slice_sum_spacing(inst) : 0.0;

  for (std::size_t M : Ms) {
    if (M < 2) throw ConfigError("need M >= 2");
    const SliceSampler sampler(inst, beta / static_cast<double>(M));
    Rng rng(derive_seed(seed, M, 0));
    const double scale = 1.0 / std::sqrt(static_cast<double>(M));
    const double cell = spacing * scale;
    std::vector<double> raw(n_samples);
    std::vector<double> spread(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) {
      double acc = 0.0;
      for (std::size_t l = 0; l < M; ++l) acc += sampler.slice_sum(sampler.draw_index(rng));
      raw[k] = acc * scale;
      spread[k] = raw[k] + (cell > 0.0 ? (uniform01(rng) - 0.5) * cell : 0.0);
    }
    CltRow row;
    row.M = M;
    row.mean = mean(raw);
    row.variance = variance(raw);
    if (sd == 0.0) {
      // X is identically zero and so is the limit.
      row.ks = 0.0;
      row.p_value = 1.0;
    } else {
      const auto ks = ks_test(spread, [sd](double x) { return normal_cdf(x, 0.0, sd); });
      row.ks = ks.statistic;
      row.p_value = ks.p_value;
    }
    rep.rows.push_back(row);
  }
  rep.decreasing = sd == 0.0 || rep.rows.back().ks < rep.rows.front().ks;
  rep.passes_at_largest = rep.rows.back().p_value >= alpha;
  return rep;
}

}  // namespace isingqa
