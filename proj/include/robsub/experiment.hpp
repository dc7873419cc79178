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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robsub/adversaries.hpp"
#include "robsub/data_io.hpp"
#include "robsub/subroutines.hpp"

namespace robsub {

enum class DatasetKind { kEdgeList, kVectors, kTable2, kRandomGraph };
enum class ObjectiveKind { kDomSet, kExemplar, kTabular };
enum class Algorithm { kGreedy, kPro, kOsu };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(DatasetKind kind);
std::string_view to_string(ObjectiveKind kind);

/// One sweep over (algorithm x k x tau) on a single loaded instance.
///
/// Read from a flat `key = value` file ('#' starts a comment). Lists are
/// comma separated; integer lists also accept `first:last:step` ranges.
struct ExperimentConfig {
  DatasetKind dataset_kind = DatasetKind::kTable2;
  std::filesystem::path dataset;
  bool directed = false;
  char delimiter = ',';
  Preprocessing preprocessing = Preprocessing::kNone;
  std::optional<std::size_t> expected_dim;
  double table2_n = 10.0;
  double table2_eps = 0.5;
  std::size_t random_nodes = 200;
  double random_edge_probability = 0.02;

  ObjectiveKind objective = ObjectiveKind::kTabular;
  std::vector<Algorithm> algorithms = {Algorithm::kGreedy, Algorithm::kPro, Algorithm::kOsu};
  SubroutineSpec subroutine = SubroutineSpec::lazy_greedy();
  std::vector<std::size_t> k_values;
  std::vector<std::size_t> tau_values;
  std::size_t eta = 1;
  /// Equal-bucket size for OSU; nullopt means "tau".
  std::optional<std::size_t> osu_bucket_size;
  AdversaryKind adversary = AdversaryKind::kOptimal;
  std::uint64_t seed = 0;
  std::size_t subsample_size = 1000;
  std::uint64_t node_budget = 10'000'000;
  /// When off, wall_time_ms is written as 0 so the CSV is reproducible byte for byte.
  bool timing = true;
  std::filesystem::path output;
  std::filesystem::path id_map_output;

  /// Sets one key from its textual value; throws ConfigError.
  void set(std::string_view key, std::string_view value);
  /// Cross-field checks; throws ConfigError.
  void validate() const;
};

ExperimentConfig parse_config(std::istream& in);
/// Throws IoError if the file cannot be read, ConfigError if it is invalid.
ExperimentConfig load_config(const std::filesystem::path& path);

/// A loaded objective together with what was needed to build it.
struct ExperimentInstance {
  std::unique_ptr<SubmodularOracle> oracle;
  std::vector<std::int64_t> original_ids;  // edge-list datasets only
  std::vector<ElementId> subsample_ids;    // exemplar datasets only
};

/// Loads the dataset and builds the objective. Subsampling uses cfg.seed.
ExperimentInstance build_instance(const ExperimentConfig& cfg);

enum class RecordStatus { kOk, kSkippedInfeasible, kAdversaryBudgetExceeded };
std::string_view to_string(RecordStatus status);

struct ExperimentRecord {
  Algorithm algorithm = Algorithm::kGreedy;
  SubroutineKind subroutine = SubroutineKind::kLazyGreedy;
  std::size_t k = 0;
  std::size_t tau = 0;
  std::optional<std::size_t> eta;  // PRo rows only
  std::optional<double> raw_value;
  std::optional<double> robust_value;
  AdversaryKind adversary = AdversaryKind::kOptimal;
  std::uint64_t marginal_evals = 0;
  std::uint64_t full_evals = 0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  RecordStatus status = RecordStatus::kOk;
};

/// Whether `algorithm` can run at (k, tau) on a ground set of n elements.
bool is_feasible(const ExperimentConfig& cfg, Algorithm algorithm, std::size_t n, std::size_t k,
                 std::size_t tau);

/// Runs every (algorithm, k, tau) cell in that order. Infeasible cells and
/// exhausted adversary budgets become record statuses rather than errors.
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             const SubmodularOracle& oracle);
std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg);

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
/// Throws IoError when the path cannot be written.
void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path);

/// Per (k, tau): the worst-case guarantee PRo certifies, whether its
/// conditions hold, and whether OSU fits.
std::string emit_bound_report(const ExperimentConfig& cfg);

}  // namespace robsub
