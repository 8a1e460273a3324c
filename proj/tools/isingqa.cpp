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

// Command-line front end: instance generation, annealing experiments,
// histograms and the verification suites.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isingqa/chimera.hpp"
#include "isingqa/errors.hpp"
#include "isingqa/experiment.hpp"
#include "isingqa/instance_io.hpp"
#include "isingqa/verify.hpp"

namespace fs = std::filesystem;
using namespace isingqa;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfig = 2;

std::vector<IsingInstance> load_all(const std::vector<std::string>& paths) {
  std::vector<fs::path> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> found;
      for (const auto& e : fs::directory_iterator(p)) {
        const auto ext = e.path().extension();
        if (e.is_regular_file() && (ext == ".txt" || ext == ".json")) found.push_back(e.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(p);
    }
  }
  if (files.empty()) throw ConfigError("no instance files given");
  std::vector<IsingInstance> out;
  for (const auto& f : files) {
    auto inst = load_instance(f);
    if (inst.id().empty()) inst = inst.with_id(f.stem().string());
    out.push_back(std::move(inst));
  }
  return out;
}

// Two-column CSV "instance_id,ground_energy"; a header line is skipped.
std::map<std::string, double> load_ground_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::map<std::string, double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ConfigError("bad ground energy line: " + line);
    const auto id = line.substr(0, comma);
    const auto value = line.substr(comma + 1);
    try {
      out[id] = std::stod(value);
    } catch (const std::exception&) {
      if (out.empty()) continue;
      throw ConfigError("bad ground energy line: " + line);
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ConfigError("cannot write " + out);
  f << text;
}

struct RunFlags {
  std::vector<std::string> instances;
  std::size_t runs = 100;
  std::size_t sweeps = 1000;
  std::size_t tau = 30;
  double temperature = 0.1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string out;
  std::string format = "csv";
  std::string ground_truth = "auto";
  std::string ground_file;
  std::string cooling = "inverse-log-k";
  double cooling_c = 2.0;
  std::string order = "local-global";
  double t_f = 10.0;
  std::size_t steps = 1000;
  std::size_t bins = 10;
};

void add_common(CLI::App* app, RunFlags& f) {
  app->add_option("--instances", f.instances, "Instance files or directories")->required();
  app->add_option("--runs", f.runs, "Runs per instance")->capture_default_str();
  app->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  app->add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app->add_option("--out", f.out, "Output file (default stdout)");
  app->add_option("--format", f.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("--ground-truth", f.ground_truth, "auto, brute_force, sa_protocol, provided")
      ->capture_default_str();
  app->add_option("--ground-file", f.ground_file, "CSV of instance_id,ground_energy");
  app->add_option("--bins", f.bins, "Histogram bins (json output)")->capture_default_str();
}

int run(Method method, const RunFlags& f) {
  ExperimentConfig cfg;
  cfg.method = method;
  cfg.instances = load_all(f.instances);
  cfg.runs_per_instance = f.runs;
  cfg.sweeps = f.sweeps;
  cfg.tau = f.tau;
  cfg.sqa.temperature = f.temperature;
  cfg.sqa_options.order =
      f.order == "global-local" ? SweepOrder::GlobalThenLocal : SweepOrder::LocalThenGlobal;
  cfg.cooling.kind = parse_cooling_kind(f.cooling);
  cfg.cooling.c = f.cooling_c;
  cfg.t_f = f.t_f;
  cfg.qa_steps = f.steps;
  cfg.master_seed = f.seed;
  cfg.threads = f.threads;
  cfg.histogram_bins = f.bins;
  cfg.ground_truth = parse_ground_truth(f.ground_truth);
  if (!f.ground_file.empty()) cfg.provided = load_ground_file(f.ground_file);
  const auto rep = run_experiment(cfg);
  emit(f.format == "json" ? to_json(cfg, rep) : to_csv(rep), f.out);
  return kExitOk;
}

// success_prob column of an experiment CSV.
std::vector<double> read_probabilities(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty file " + path);
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  const auto col = std::find(header.begin(), header.end(), "success_prob");
  if (col == header.end()) throw ConfigError(path + " has no success_prob column");
  const auto index = static_cast<std::size_t>(col - header.begin());
  std::vector<double> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    for (std::size_t k = 0; k <= index; ++k) std::getline(ss, cell, ',');
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ising annealing experiments: SA, path-integral SQA and exact small-b QA"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate random +-1 Chimera instances");
  std::size_t rows = 1, cols = 0, shore = 4, count = 1;
  std::uint64_t gen_seed = 0;
  std::string mask_file, out_dir = ".", prefix = "inst", gen_format = "txt";
  gen->add_option("--rows", rows, "Unit-cell rows")->capture_default_str();
  gen->add_option("--cols", cols, "Unit-cell columns (default: rows)");
  gen->add_option("--shore", shore, "Qubits per cell shore")->capture_default_str();
  gen->add_option("--mask", mask_file, "File of inactive qubit ids");
  gen->add_option("--instances", count, "Number of instances")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Master seed")->capture_default_str();
  gen->add_option("--out", out_dir, "Output directory")->capture_default_str();
  gen->add_option("--prefix", prefix, "Instance id prefix")->capture_default_str();
  gen->add_option("--format", gen_format, "txt or json")
      ->check(CLI::IsMember({"txt", "json"}))
      ->capture_default_str();

  // mask
  auto* mask = app.add_subcommand("mask", "Write a random inactive-qubit mask");
  std::size_t mask_count = 0;
  std::string mask_out;
  mask->add_option("--rows", rows, "Unit-cell rows")->capture_default_str();
  mask->add_option("--cols", cols, "Unit-cell columns (default: rows)");
  mask->add_option("--shore", shore, "Qubits per cell shore")->capture_default_str();
  mask->add_option("--count", mask_count, "Inactive qubits")->required();
  mask->add_option("--seed", gen_seed, "Seed")->capture_default_str();
  mask->add_option("--out", mask_out, "Mask file")->required();

  RunFlags sa_f, sqa_f, qa_f;
  auto* sa = app.add_subcommand("sa", "Simulated annealing runs");
  add_common(sa, sa_f);
  sa->add_option("--sweeps", sa_f.sweeps, "Sweeps per run")->capture_default_str();
  sa->add_option("--schedule", sa_f.cooling, "inverse-log-k, inverse-k, linear")
      ->capture_default_str();
  sa->add_option("--c", sa_f.cooling_c, "Cooling scale c")->capture_default_str();

  auto* sqa = app.add_subcommand("sqa", "Path-integral simulated quantum annealing runs");
  add_common(sqa, sqa_f);
  sqa->add_option("--sweeps", sqa_f.sweeps, "Sweeps per run")->capture_default_str();
  sqa->add_option("--tau", sqa_f.tau, "Trotter slices")->capture_default_str();
  sqa->add_option("--temperature", sqa_f.temperature, "Temperature T")->capture_default_str();
  sqa->add_option("--order", sqa_f.order, "local-global or global-local")
      ->check(CLI::IsMember({"local-global", "global-local"}))
      ->capture_default_str();

  auto* qa = app.add_subcommand("exact-qa", "Exact state-vector annealing (b <= 10)");
  add_common(qa, qa_f);
  qa->add_option("--t-f", qa_f.t_f, "Annealing duration")->capture_default_str();
  qa->add_option("--steps", qa_f.steps, "Integration steps")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  std::string level = "fast", verify_out, verify_format = "text";
  std::uint64_t verify_seed = 2026;
  std::size_t verify_threads = 1;
  verify->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();
  verify->add_option("--seed", verify_seed, "Seed")->capture_default_str();
  verify->add_option("--threads", verify_threads, "Worker threads")->capture_default_str();
  verify->add_option("--out", verify_out, "Report file (default stdout)");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* hist = app.add_subcommand("hist", "Histogram of success probabilities from a CSV");
  std::string hist_in, hist_out, hist_format = "csv";
  std::size_t bins = 10;
  hist->add_option("--in", hist_in, "Experiment CSV")->required();
  hist->add_option("--bins", bins, "Bins")->capture_default_str();
  hist->add_option("--out", hist_out, "Output file (default stdout)");
  hist->add_option("--format", hist_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed() || mask->parsed()) {
      ChimeraSpec spec;
      spec.m = rows;
      spec.n = cols == 0 ? rows : cols;
      spec.k = shore;
      if (mask->parsed()) {
        write_mask(random_mask(spec, mask_count, gen_seed), mask_out);
        return kExitOk;
      }
      if (!mask_file.empty()) spec.mask = read_mask(mask_file);
      const auto graph = chimera_graph(spec);
      fs::create_directories(out_dir);
      for (std::size_t k = 0; k < count; ++k) {
        const auto inst = batch_instance(graph, gen_seed, k, prefix);
        save_instance(inst, fs::path(out_dir) / (inst.id() + "." + gen_format));
      }
      std::cerr << "wrote " << count << " instances with b = " << graph.b << " to " << out_dir
                << "\n";
      return kExitOk;
    }
    if (sa->parsed()) return run(Method::SA, sa_f);
    if (sqa->parsed()) return run(Method::SQA, sqa_f);
    if (qa->parsed()) return run(Method::ExactQA, qa_f);
    if (verify->parsed()) {
      VerifyOptions opt;
      opt.level = level == "full" ? VerifyLevel::Full : VerifyLevel::Fast;
      opt.seed = verify_seed;
      opt.threads = verify_threads;
      const auto rep = verify_all(opt);
      emit(verify_format == "json" ? rep.to_json() : rep.to_text(), verify_out);
      return rep.all_passed() ? kExitOk : kExitCheckFailed;
    }
    if (hist->parsed()) {
      const auto h = histogram(read_probabilities(hist_in), bins);
      std::ostringstream out;
      if (hist_format == "json") {
        out << "{\"edges\": [";
        for (std::size_t k = 0; k < h.edges.size(); ++k) {
          out << (k ? ", " : "") << format_double(h.edges[k]);
        }
        out << "], \"counts\": [";
        for (std::size_t k = 0; k < h.counts.size(); ++k) out << (k ? ", " : "") << h.counts[k];
        out << "]}\n";
      } else {
        out << "lo,hi,count\n";
        for (std::size_t k = 0; k < h.counts.size(); ++k) {
          out << format_double(h.edges[k]) << ',' << format_double(h.edges[k + 1]) << ','
              << h.counts[k] << '\n';
        }
      }
      emit(out.str(), hist_out);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
