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

#include <json.hpp>

#include "isingqa/chimera.hpp"
#include "isingqa/errors.hpp"
#include "isingqa/experiment.hpp"

using namespace isingqa;

namespace {

std::vector<IsingInstance> cells(std::size_t count) {
  ChimeraSpec s;
  s.m = 1;
  s.n = 1;
  const auto g = chimera_graph(s);
  std::vector<IsingInstance> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(batch_instance(g, 4, k, "cell"));
  return out;
}

}  // namespace

TEST_CASE("histogram examples") {
  const auto h = histogram({0.1, 0.1, 0.9}, 2);
  CHECK(h.counts == std::vector<std::size_t>{2, 1});
  const auto same = histogram({0.3, 0.3, 0.3}, 4);
  CHECK(same.counts == std::vector<std::size_t>{0, 0, 0, 3});
  Rng rng(1);
  std::vector<double> p(100);
  for (auto& x : p) x = uniform01(rng);
  std::size_t total = 0;
  for (auto c : histogram(p, 10).counts) total += c;
  CHECK(total == 100);
}

TEST_CASE("success ratio") {
  ExperimentConfig cfg;
  cfg.method = Method::ExactQA;
  cfg.instances = {IsingInstance(1, {}, {1}, "spin")};
  cfg.runs_per_instance = 3000;
  cfg.t_f = 0.0;
  cfg.qa_steps = 1;
  // The uniform state finds the biased spin half the time.
  const auto rep = run_experiment(cfg);
  REQUIRE(rep.records.size() == 1);
  CHECK(*rep.records[0].exact_success == Catch::Approx(0.5));
  CHECK(rep.records[0].success_prob ==
        static_cast<double>(rep.records[0].hits) / 3000.0);
  CHECK(std::abs(rep.records[0].success_prob - 0.5) <= 4 * std::sqrt(0.25 / 3000));
}

TEST_CASE("zero-coupling instances are always solved") {
  const IsingInstance flat(4, {{0, 1, 0}, {2, 3, 0}}, {}, "flat");
  for (Method m : {Method::SA, Method::SQA, Method::ExactQA}) {
    ExperimentConfig cfg;
    cfg.method = m;
    cfg.instances = {flat};
    cfg.runs_per_instance = 20;
    cfg.sweeps = 10;
    cfg.tau = 4;
    cfg.qa_steps = 20;
    CHECK(run_experiment(cfg).records[0].success_prob == 1.0);
  }
}

TEST_CASE("configuration errors") {
  ExperimentConfig cfg;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.instances = {IsingInstance(2, {}), IsingInstance(3, {})};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.instances = {IsingInstance(2, {}, {}, "a")};
  cfg.ground_truth = GroundTruth::Provided;
  CHECK_THROWS_AS(run_experiment(cfg), ConfigError);
  cfg.provided["a"] = 0.0;
  CHECK_NOTHROW(run_experiment(cfg));
  cfg.method = Method::SQA;
  cfg.tau = 1;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  CHECK_THROWS_AS(parse_method("dwave"), ConfigError);
  CHECK(parse_ground_truth(to_string(GroundTruth::SaProtocol)) == GroundTruth::SaProtocol);
}

TEST_CASE("reports are independent of worker count") {
  ExperimentConfig cfg;
  cfg.method = Method::SQA;
  cfg.instances = cells(3);
  cfg.runs_per_instance = 8;
  cfg.sweeps = 100;
  cfg.tau = 4;
  cfg.master_seed = 11;
  const auto one = run_experiment(cfg);
  cfg.threads = 3;
  const auto three = run_experiment(cfg);
  CHECK(to_csv(one) == to_csv(three));

  auto strip = [&](const ExperimentReport& r) {
    auto j = nlohmann::json::parse(to_json(cfg, r));
    j.erase("wall_time_s");
    return j.dump();
  };
  CHECK(strip(one) == strip(three));
}

TEST_CASE("csv layout") {
  ExperimentConfig cfg;
  cfg.instances = cells(2);
  cfg.runs_per_instance = 5;
  cfg.sweeps = 50;
  const auto csv = to_csv(run_experiment(cfg));
  CHECK(csv.rfind("instance_id,method,b,tau,sweeps,runs,hits,success_prob,ground_energy\n", 0) ==
        0);
  CHECK(csv.find("cell_000,SA,8,,50,5,") != std::string::npos);
}
