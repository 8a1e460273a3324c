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

#include "isingqa/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "isingqa/errors.hpp"
#include "isingqa/instance_io.hpp"
#include "isingqa/parallel.hpp"
#include "isingqa/quantum.hpp"
#include "isingqa/rng.hpp"
#include "isingqa/sa.hpp"

namespace isingqa {

Method parse_method(const std::string& name) {
  if (name == "sa" || name == "SA") return Method::SA;
  if (name == "sqa" || name == "SQA") return Method::SQA;
  if (name == "exact-qa" || name == "EXACT_QA") return Method::ExactQA;
  throw ConfigError("unknown method '" + name + "'");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::SA: return "SA";
    case Method::SQA: return "SQA";
    case Method::ExactQA: return "EXACT_QA";
  }
  return "?";
}

GroundTruth parse_ground_truth(const std::string& name) {
  if (name == "auto") return GroundTruth::Auto;
  if (name == "brute_force") return GroundTruth::BruteForce;
  if (name == "sa_protocol") return GroundTruth::SaProtocol;
  if (name == "provided") return GroundTruth::Provided;
  throw ConfigError("unknown ground truth policy '" + name + "'");
}

std::string to_string(GroundTruth g) {
  switch (g) {
    case GroundTruth::Auto: return "auto";
    case GroundTruth::BruteForce: return "brute_force";
    case GroundTruth::SaProtocol: return "sa_protocol";
    case GroundTruth::Provided: return "provided";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (instances.empty()) throw ConfigError("no instances");
  if (runs_per_instance < 1) throw ConfigError("runs per instance must be at least 1");
  const std::size_t b = instances.front().size();
  for (const auto& inst : instances) {
    if (inst.size() != b) throw ConfigError("instances in one batch must share b");
  }
  switch (method) {
    case Method::SA:
      if (sweeps < 1) throw ConfigError("SA needs at least one sweep");
      cooling.validate();
      break;
    case Method::SQA:
      if (sweeps < 1) throw ConfigError("SQA needs at least one sweep");
      if (tau < 2) throw ConfigError("SQA needs tau >= 2");
      if (!(sqa.temperature > 0.0)) throw ConfigError("temperature must be positive");
      for (const auto& inst : instances) {
        if (inst.has_fields()) throw ConfigError("SQA rejects instances with fields");
      }
      break;
    case Method::ExactQA:
      if (b > kEvolveCap) throw ConfigError("exact QA supports b <= 10");
      if (qa_steps < 1 || !(t_f >= 0.0)) throw ConfigError("exact QA needs steps >= 1, t_f >= 0");
      break;
  }
  if (ground_truth == GroundTruth::SaProtocol &&
      (protocol_grid.empty() || protocol_repeats < 1)) {
    throw ConfigError("SA protocol needs a sweep grid and repeats >= 1");
  }
  if (histogram_bins < 1) throw ConfigError("need at least one histogram bin");
}

Histogram histogram(const std::vector<double>& probs, std::size_t bins) {
  if (probs.empty()) throw InvalidArgument("histogram of empty input");
  if (bins < 1) throw InvalidArgument("need at least one bin");
  const double top = *std::max_element(probs.begin(), probs.end());
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    h.edges[k] = top * static_cast<double>(k) / static_cast<double>(bins);
  }
  h.counts.assign(bins, 0);
  for (double p : probs) {
    std::size_t k = bins - 1;
    if (top > 0.0) {
      k = std::min(bins - 1, static_cast<std::size_t>(std::floor(p / top * static_cast<double>(bins))));
    }
    ++h.counts[k];
  }
  return h;
}

double resolve_ground_energy(const ExperimentConfig& cfg, std::size_t k) {
  const auto& inst = cfg.instances.at(k);
  const auto provided = cfg.provided.find(inst.id());
  auto protocol = [&] {
    return sa_ground_truth(inst, cfg.protocol_grid, cfg.protocol_repeats,
                           derive_seed(cfg.master_seed, k, kInstanceStream), cfg.cooling,
                           cfg.threads);
  };
  switch (cfg.ground_truth) {
    case GroundTruth::BruteForce:
      if (inst.size() > kEnumerationCap) {
        throw ConfigError("brute force ground truth needs b <= " + std::to_string(kEnumerationCap));
      }
      return brute_force_ground(inst).energy;
    case GroundTruth::Provided:
      if (provided == cfg.provided.end()) {
        throw ConfigError("no ground energy provided for '" + inst.id() + "'");
      }
      return provided->second;
    case GroundTruth::SaProtocol:
      return protocol();
    case GroundTruth::Auto:
      if (inst.size() <= kEnumerationCap) return brute_force_ground(inst).energy;
      if (provided != cfg.provided.end()) return provided->second;
      return protocol();
  }
  throw ConfigError("unresolvable ground truth");
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const std::size_t n_inst = cfg.instances.size();
  const std::size_t runs = cfg.runs_per_instance;

  std::vector<double> ground(n_inst);
  for (std::size_t k = 0; k < n_inst; ++k) ground[k] = resolve_ground_energy(cfg, k);

  std::vector<double> exact(n_inst, 0.0);
  if (cfg.method == Method::ExactQA) {
    parallel_for(n_inst, cfg.threads, [&](std::size_t k) {
      const auto psi = evolve(cfg.instances[k], cfg.sqa.controls, cfg.t_f, cfg.qa_steps);
      exact[k] = success_probability(cfg.instances[k], psi);
    });
  }

  std::vector<std::uint8_t> hit(n_inst * runs, 0);
  parallel_for(n_inst * runs, cfg.threads, [&](std::size_t item) {
    const std::size_t k = item / runs;
    const std::size_t r = item % runs;
    const auto& inst = cfg.instances[k];
    const std::uint64_t seed = derive_seed(cfg.master_seed, k, r);
    bool success = false;
    switch (cfg.method) {
      case Method::SA: {
        const auto res = sa_run(inst, cfg.cooling, cfg.sweeps, seed);
        success = same_energy(res.final_energy, ground[k], inst.is_integral());
        break;
      }
      case Method::SQA: {
        const auto res = sqa_run(inst, cfg.sqa, cfg.tau, cfg.sweeps, seed, cfg.sqa_options);
        success = same_energy(res.final_energy, ground[k], inst.is_integral());
        break;
      }
      case Method::ExactQA: {
        // One terminal measurement per run.
        Rng rng(seed);
        success = uniform01(rng) < exact[k];
        break;
      }
    }
    hit[item] = success ? 1 : 0;
  });

  ExperimentReport rep;
  std::vector<double> probs;
  for (std::size_t k = 0; k < n_inst; ++k) {
    InstanceRecord rec;
    rec.instance_id = cfg.instances[k].id();
    rec.method = cfg.method;
    rec.b = cfg.instances[k].size();
    rec.tau = cfg.method == Method::SQA ? cfg.tau : 0;
    rec.sweeps = cfg.method == Method::ExactQA ? cfg.qa_steps : cfg.sweeps;
    rec.runs = runs;
    for (std::size_t r = 0; r < runs; ++r) rec.hits += hit[k * runs + r];
    rec.success_prob = static_cast<double>(rec.hits) / static_cast<double>(runs);
    rec.ground_energy = ground[k];
    if (cfg.method == Method::ExactQA) rec.exact_success = exact[k];
    probs.push_back(rec.success_prob);
    rep.records.push_back(std::move(rec));
  }
  rep.histogram = histogram(probs, cfg.histogram_bins);
  rep.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "instance_id,method,b,tau,sweeps,runs,hits,success_prob,ground_energy\n";
  for (const auto& r : report.records) {
    out << r.instance_id << ',' << to_string(r.method) << ',' << r.b << ',';
    if (r.method == Method::SQA) out << r.tau;
    out << ',' << r.sweeps << ',' << r.runs << ',' << r.hits << ','
        << format_double(r.success_prob) << ',' << format_double(r.ground_energy) << '\n';
  }
  return out.str();
}

std::string to_json(const ExperimentConfig& cfg, const ExperimentReport& report) {
  nlohmann::ordered_json j;
  auto& c = j["config"];
  c["method"] = to_string(cfg.method);
  c["instances"] = cfg.instances.size();
  c["runs_per_instance"] = cfg.runs_per_instance;
  c["sweeps"] = cfg.sweeps;
  if (cfg.method == Method::SQA) {
    c["tau"] = cfg.tau;
    c["temperature"] = cfg.sqa.temperature;
    c["schedule"] = cfg.sqa.controls.name;
  }
  if (cfg.method == Method::SA) {
    c["cooling"] = to_string(cfg.cooling.kind);
    c["cooling_c"] = cfg.cooling.c;
  }
  if (cfg.method == Method::ExactQA) {
    c["t_f"] = cfg.t_f;
    c["qa_steps"] = cfg.qa_steps;
    c["schedule"] = cfg.sqa.controls.name;
  }
  c["master_seed"] = cfg.master_seed;
  c["ground_truth"] = to_string(cfg.ground_truth);

  auto& recs = j["records"];
  recs = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json o;
    o["instance_id"] = r.instance_id;
    o["method"] = to_string(r.method);
    o["b"] = r.b;
    if (r.method == Method::SQA) o["tau"] = r.tau;
    o["sweeps"] = r.sweeps;
    o["runs"] = r.runs;
    o["hits"] = r.hits;
    o["success_prob"] = r.success_prob;
    o["ground_energy"] = r.ground_energy;
    if (r.exact_success) o["exact_success"] = *r.exact_success;
    recs.push_back(std::move(o));
  }
  j["histogram"]["edges"] = report.histogram.edges;
  j["histogram"]["counts"] = report.histogram.counts;
  j["wall_time_s"] = report.wall_time_s;
  return j.dump(2) + "\n";
}

}  // namespace isingqa
