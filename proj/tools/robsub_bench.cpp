// Copyright 2026 The robsub Authors
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

// Sweep driver: robsub_bench --config sweep.cfg [--k 10,20] [--tau 1:5:1] ...
//
// Exit codes: 0 sweep completed (skipped cells included), 1 config error,
// 2 I/O or dataset error.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "robsub/experiment.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust submodular maximization benchmark sweeps"};
  std::string config_path;
  std::string k, tau, eta, seed, adversary, output;
  bool bound_report = false;
  app.add_option("--config", config_path, "key=value sweep configuration")->required();
  app.add_option("--k", k, "override k values (list or first:last:step)");
  app.add_option("--tau", tau, "override tau values");
  app.add_option("--eta", eta, "override PRo bucket base eta");
  app.add_option("--seed", seed, "override seed");
  app.add_option("--adversary", adversary, "optimal or greedy");
  app.add_option("--output", output, "CSV output path ('-' for stdout)");
  app.add_flag("--bound-report", bound_report, "print the guarantee report and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  robsub::ExperimentConfig cfg;
  try {
    cfg = robsub::load_config(config_path);
    const std::vector<std::pair<const char*, const std::string*>> overrides = {
        {"k", &k}, {"tau", &tau}, {"eta", &eta}, {"seed", &seed},
        {"adversary", &adversary}, {"output", &output}};
    for (const auto& [key, value] : overrides) {
      if (!value->empty()) cfg.set(key, *value);
    }
    cfg.validate();
  } catch (const robsub::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const robsub::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (bound_report) {
    std::cout << robsub::emit_bound_report(cfg);
    return 0;
  }

  std::vector<robsub::ExperimentRecord> records;
  try {
    records = robsub::run_experiment(cfg);
  } catch (const robsub::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    if (cfg.output.empty() || cfg.output == "-") {
      robsub::write_csv(std::cout, records);
    } else {
      robsub::emit_csv(records, cfg.output);
    }
  } catch (const robsub::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
