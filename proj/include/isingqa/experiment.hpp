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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isingqa/ising.hpp"
#include "isingqa/schedule.hpp"
#include "isingqa/sqa.hpp"

namespace isingqa {

enum class Method { SA, SQA, ExactQA };
/// Auto: brute force within the enumeration cap, else a provided value,
/// else the SA protocol.
enum class GroundTruth { Auto, BruteForce, SaProtocol, Provided };

Method parse_method(const std::string& name);
std::string to_string(Method m);
GroundTruth parse_ground_truth(const std::string& name);
std::string to_string(GroundTruth g);

struct ExperimentConfig {
  Method method = Method::SA;
  std::vector<IsingInstance> instances;
  std::size_t runs_per_instance = 1;
  std::size_t sweeps = 1000;
  std::size_t tau = 30;

  CoolingSchedule cooling = CoolingSchedule::inverse_log();
  SqaSchedule sqa = default_dw_schedule();
  SqaOptions sqa_options;
  /// Exact QA: annealing duration and integration steps.
  double t_f = 10.0;
  std::size_t qa_steps = 1000;

  std::uint64_t master_seed = 0;
  GroundTruth ground_truth = GroundTruth::Auto;
  /// Known ground energies keyed by instance id.
  std::map<std::string, double> provided;
  std::vector<std::size_t> protocol_grid = {10000, 50000, 100000};
  std::size_t protocol_repeats = 30;

  std::size_t threads = 1;
  std::size_t histogram_bins = 10;

  void validate() const;
};

struct InstanceRecord {
  std::string instance_id;
  Method method = Method::SA;
  std::size_t b = 0;
  std::size_t tau = 0;
  std::size_t sweeps = 0;
  std::size_t runs = 0;
  std::size_t hits = 0;
  double success_prob = 0.0;
  double ground_energy = 0.0;
  /// Exact QA only: the measurement probability the runs sample from.
  std::optional<double> exact_success;
};

struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

struct ExperimentReport {
  std::vector<InstanceRecord> records;
  Histogram histogram;
  double wall_time_s = 0.0;
};

/// Equal-width bins on [0, max(probs)], right-open except the last.
Histogram histogram(const std::vector<double>& probs, std::size_t bins);

/// Ground energy per the configured policy for instance k.
double resolve_ground_energy(const ExperimentConfig& cfg, std::size_t k);

/// Run r of instance k uses seed derive_seed(master_seed, k, r); the result
/// does not depend on the thread count.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentConfig& cfg, const ExperimentReport& report);

}  // namespace isingqa
