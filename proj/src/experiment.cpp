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

#include "robsub/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "robsub/domset.hpp"
#include "robsub/exemplar.hpp"
#include "robsub/robust.hpp"
#include "robsub/tabular.hpp"

namespace robsub {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = std::min(s.find(sep, start), s.size());
    out.push_back(trim(s.substr(start, stop - start)));
    if (stop == s.size()) break;
    start = stop + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto [next, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || next != text.data() + text.size()) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "on" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "off" || text == "0" || text == "no") return false;
  throw ConfigError("invalid boolean '" + std::string(text) + "' for " + std::string(key));
}

/// "5,10,20" or "5:30:5" (inclusive) or a mix; result sorted and unique.
std::vector<std::size_t> parse_size_list(std::string_view key, std::string_view text) {
  std::vector<std::size_t> out;
  for (std::string_view item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1) {
      out.push_back(parse_number<std::size_t>(key, parts[0]));
    } else if (parts.size() == 3) {
      const auto first = parse_number<std::size_t>(key, parts[0]);
      const auto last = parse_number<std::size_t>(key, parts[1]);
      const auto step = parse_number<std::size_t>(key, parts[2]);
      if (step == 0 || last < first) {
        throw ConfigError("invalid range '" + std::string(item) + "' for " + std::string(key));
      }
      for (std::size_t v = first; v <= last; v += step) out.push_back(v);
    } else {
      throw ConfigError("invalid list item '" + std::string(item) + "' for " + std::string(key));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "greedy") return Algorithm::kGreedy;
  if (name == "pro") return Algorithm::kPro;
  if (name == "osu") return Algorithm::kOsu;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, false);
}

std::size_t osu_bucket(const ExperimentConfig& cfg, std::size_t tau) {
  return cfg.osu_bucket_size.value_or(tau);
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGreedy: return "greedy";
    case Algorithm::kPro: return "pro";
    case Algorithm::kOsu: return "osu";
  }
  return "unknown";
}

std::string_view to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kEdgeList: return "edge_list";
    case DatasetKind::kVectors: return "vectors";
    case DatasetKind::kTable2: return "table2";
    case DatasetKind::kRandomGraph: return "random_graph";
  }
  return "unknown";
}

std::string_view to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::kDomSet: return "domset";
    case ObjectiveKind::kExemplar: return "exemplar";
    case ObjectiveKind::kTabular: return "tabular";
  }
  return "unknown";
}

std::string_view to_string(RecordStatus status) {
  switch (status) {
    case RecordStatus::kOk: return "ok";
    case RecordStatus::kSkippedInfeasible: return "skipped_infeasible";
    case RecordStatus::kAdversaryBudgetExceeded: return "adversary_budget_exceeded";
  }
  return "unknown";
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  if (key == "dataset") {
    dataset = std::string(value);
  } else if (key == "dataset_kind") {
    if (value == "edge_list") dataset_kind = DatasetKind::kEdgeList;
    else if (value == "vectors") dataset_kind = DatasetKind::kVectors;
    else if (value == "table2") dataset_kind = DatasetKind::kTable2;
    else if (value == "random_graph") dataset_kind = DatasetKind::kRandomGraph;
    else throw ConfigError("unknown dataset_kind '" + std::string(value) + "'");
  } else if (key == "directed") {
    directed = parse_bool(key, value);
  } else if (key == "delimiter") {
    if (value == "tab" || value == "\\t") delimiter = '\t';
    else if (value == "space") delimiter = ' ';
    else if (value.size() == 1) delimiter = value[0];
    else throw ConfigError("delimiter must be a single character, 'tab' or 'space'");
  } else if (key == "preprocessing") {
    preprocessing = parse_preprocessing(value);
  } else if (key == "expected_dim") {
    expected_dim = parse_number<std::size_t>(key, value);
  } else if (key == "table2_n") {
    table2_n = parse_number<double>(key, value);
  } else if (key == "table2_eps") {
    table2_eps = parse_number<double>(key, value);
  } else if (key == "random_nodes") {
    random_nodes = parse_number<std::size_t>(key, value);
  } else if (key == "random_edge_prob") {
    random_edge_probability = parse_number<double>(key, value);
  } else if (key == "objective") {
    if (value == "domset") objective = ObjectiveKind::kDomSet;
    else if (value == "exemplar") objective = ObjectiveKind::kExemplar;
    else if (value == "tabular") objective = ObjectiveKind::kTabular;
    else throw ConfigError("unknown objective '" + std::string(value) + "'");
  } else if (key == "algorithms") {
    algorithms.clear();
    for (std::string_view name : split(value, ',')) algorithms.push_back(parse_algorithm(name));
    std::sort(algorithms.begin(), algorithms.end());
    algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());
  } else if (key == "subroutine") {
    subroutine.kind = parse_subroutine_kind(value);
  } else if (key == "epsilon") {
    subroutine.epsilon = parse_number<double>(key, value);
  } else if (key == "k") {
    k_values = parse_size_list(key, value);
  } else if (key == "tau") {
    tau_values = parse_size_list(key, value);
  } else if (key == "eta") {
    eta = parse_number<std::size_t>(key, value);
  } else if (key == "osu_bucket_size") {
    if (value == "tau") osu_bucket_size.reset();
    else osu_bucket_size = parse_number<std::size_t>(key, value);
  } else if (key == "adversary") {
    adversary = parse_adversary_kind(value);
  } else if (key == "seed") {
    seed = parse_number<std::uint64_t>(key, value);
  } else if (key == "subsample_size") {
    subsample_size = parse_number<std::size_t>(key, value);
  } else if (key == "node_budget") {
    node_budget = parse_number<std::uint64_t>(key, value);
  } else if (key == "timing") {
    timing = parse_bool(key, value);
  } else if (key == "output") {
    output = std::string(value);
  } else if (key == "id_map_output") {
    id_map_output = std::string(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void ExperimentConfig::validate() const {
  const bool needs_file = dataset_kind == DatasetKind::kEdgeList ||
                          dataset_kind == DatasetKind::kVectors;
  if (needs_file && dataset.empty()) {
    throw ConfigError("dataset path is required for dataset_kind " +
                      std::string(to_string(dataset_kind)));
  }
  const ObjectiveKind expected = dataset_kind == DatasetKind::kTable2    ? ObjectiveKind::kTabular
                                 : dataset_kind == DatasetKind::kVectors ? ObjectiveKind::kExemplar
                                                                         : ObjectiveKind::kDomSet;
  if (objective != expected) {
    throw ConfigError("objective " + std::string(to_string(objective)) +
                      " does not match dataset_kind " + std::string(to_string(dataset_kind)));
  }
  if (algorithms.empty()) throw ConfigError("at least one algorithm is required");
  if (k_values.empty()) throw ConfigError("k must list at least one value");
  if (tau_values.empty()) throw ConfigError("tau must list at least one value");
  if (eta == 0) throw ConfigError("eta must be >= 1");
  if (osu_bucket_size && *osu_bucket_size == 0) throw ConfigError("osu_bucket_size must be >= 1");
  if (dataset_kind == DatasetKind::kRandomGraph) {
    if (random_nodes == 0) throw ConfigError("random_nodes must be >= 1");
    if (!(random_edge_probability >= 0.0 && random_edge_probability <= 1.0)) {
      throw ConfigError("random_edge_prob must lie in [0, 1]");
    }
  }
  if (dataset_kind == DatasetKind::kTable2 &&
      !(table2_eps >= 0.0 && table2_eps < table2_n - 1.0)) {
    throw ConfigError("table2 requires 0 <= table2_eps < table2_n - 1");
  }
  if (objective == ObjectiveKind::kExemplar && subsample_size == 0) {
    throw ConfigError("subsample_size must be >= 1");
  }
  if (node_budget == 0) throw ConfigError("node_budget must be >= 1");
  subroutine.validate();
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      cfg.set(trim(text.substr(0, eq)), trim(text.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path.string() + "'");
  return parse_config(in);
}

ExperimentInstance build_instance(const ExperimentConfig& cfg) {
  ExperimentInstance instance;
  switch (cfg.dataset_kind) {
    case DatasetKind::kTable2:
      instance.oracle =
          std::make_unique<TabularObjective>(table2_objective(cfg.table2_n, cfg.table2_eps));
      break;
    case DatasetKind::kRandomGraph:
      instance.oracle = std::make_unique<DomSetObjective>(
          random_graph(cfg.random_nodes, cfg.random_edge_probability, cfg.seed));
      break;
    case DatasetKind::kEdgeList: {
      LoadedGraph loaded = load_edge_list(cfg.dataset, cfg.directed);
      instance.original_ids = std::move(loaded.original_ids);
      instance.oracle = std::make_unique<DomSetObjective>(std::move(loaded.graph));
      if (!cfg.id_map_output.empty()) save_id_map(cfg.id_map_output, instance.original_ids);
      break;
    }
    case DatasetKind::kVectors: {
      VectorDataset data =
          load_vectors(cfg.dataset, cfg.delimiter, cfg.preprocessing, cfg.expected_dim);
      const std::size_t n = data.size();
      ExemplarConfig exemplar;
      if (cfg.subsample_size < n) {
        instance.subsample_ids = subsample(n, cfg.subsample_size, cfg.seed);
        exemplar.subsample_ids = instance.subsample_ids;
      }
      instance.oracle = std::make_unique<ExemplarObjective>(std::move(data), std::move(exemplar));
      break;
    }
  }
  return instance;
}

bool is_feasible(const ExperimentConfig& cfg, Algorithm algorithm, std::size_t n, std::size_t k,
                 std::size_t tau) {
  if (k > n || tau > k) return false;
  switch (algorithm) {
    case Algorithm::kGreedy: return true;
    case Algorithm::kPro: return tau == 0 || robust_part_size(tau, cfg.eta) <= k;
    case Algorithm::kOsu: return tau * osu_bucket(cfg, tau) <= k;
  }
  return false;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg,
                                             const SubmodularOracle& oracle) {
  cfg.validate();
  SubroutineSpec spec = cfg.subroutine;
  spec.seed = cfg.seed;
  const std::size_t n = oracle.ground_size();

  std::vector<Algorithm> algorithms = cfg.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  std::vector<ExperimentRecord> records;
  for (Algorithm algorithm : algorithms) {
    for (std::size_t k : cfg.k_values) {
      for (std::size_t tau : cfg.tau_values) {
        ExperimentRecord record;
        record.algorithm = algorithm;
        record.subroutine = spec.kind;
        record.k = k;
        record.tau = tau;
        if (algorithm == Algorithm::kPro) record.eta = cfg.eta;
        record.adversary = cfg.adversary;
        record.seed = cfg.seed;

        if (!is_feasible(cfg, algorithm, n, k, tau)) {
          record.status = RecordStatus::kSkippedInfeasible;
          records.push_back(record);
          continue;
        }

        oracle.reset_counts();
        const auto start = std::chrono::steady_clock::now();
        RobustSolution solution;
        switch (algorithm) {
          case Algorithm::kGreedy: solution = greedy_baseline(oracle, k, spec); break;
          case Algorithm::kPro: solution = pro(oracle, k, tau, cfg.eta, spec); break;
          case Algorithm::kOsu: solution = osu(oracle, k, tau, osu_bucket(cfg, tau), spec); break;
        }
        const auto stop = std::chrono::steady_clock::now();
        const EvalCounts counts = oracle.counts();
        record.marginal_evals = counts.marginal_evals;
        record.full_evals = counts.full_evals;
        if (cfg.timing) {
          record.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        }
        record.raw_value = solution.raw_value;

        try {
          if (tau == 0) {
            record.robust_value = solution.raw_value;
          } else if (cfg.adversary == AdversaryKind::kOptimal) {
            BranchAndBoundOptions options;
            options.node_budget = cfg.node_budget;
            record.robust_value = optimal_removal(oracle, solution.S, tau, options).residual_value;
          } else {
            record.robust_value = greedy_removal(oracle, solution.S, tau).residual_value;
          }
        } catch (const AdversaryBudgetExceeded&) {
          record.status = RecordStatus::kAdversaryBudgetExceeded;
        }
        records.push_back(record);
      }
    }
  }
  return records;
}

std::vector<ExperimentRecord> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const ExperimentInstance instance = build_instance(cfg);
  return run_experiment(cfg, *instance.oracle);
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "algorithm,subroutine,k,tau,eta,raw_value,robust_value,adversary_kind,"
         "marginal_evals,full_evals,wall_time_ms,seed,status\n";
  auto optional_double = [](const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
  };
  for (const ExperimentRecord& r : records) {
    out << csv_field(to_string(r.algorithm)) << ',' << csv_field(to_string(r.subroutine)) << ','
        << r.k << ',' << r.tau << ',' << (r.eta ? std::to_string(*r.eta) : std::string()) << ','
        << optional_double(r.raw_value) << ',' << optional_double(r.robust_value) << ','
        << csv_field(to_string(r.adversary)) << ',' << r.marginal_evals << ',' << r.full_evals
        << ',' << format_double(r.wall_time_ms) << ',' << r.seed << ','
        << csv_field(to_string(r.status)) << '\n';
  }
}

void emit_csv(const std::vector<ExperimentRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_csv(out, records);
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string emit_bound_report(const ExperimentConfig& cfg) {
  std::ostringstream out;
  const std::optional<double> b = beta(cfg.subroutine);
  out << "# subroutine " << to_string(cfg.subroutine.kind) << ", eta " << cfg.eta << ", beta "
      << (b ? format_double(*b) : std::string("undefined")) << '\n';
  for (std::size_t k : cfg.k_values) {
    for (std::size_t tau : cfg.tau_values) {
      out << "k=" << k << " tau=" << tau << ": ";
      if (k <= tau) {
        out << "error: the guarantee requires k > tau\n";
        continue;
      }
      const std::size_t bucket = osu_bucket(cfg, tau);
      const std::string osu_note =
          "osu |S0|=" + std::to_string(tau * bucket) +
          (tau * bucket <= k ? " feasible" : " infeasible");
      if (tau == 0) {
        out << "no robust part; " << osu_note << '\n';
        continue;
      }
      const std::size_t s0 = robust_part_size(tau, cfg.eta);
      out << "pro |S0|=" << s0;
      if (s0 > k) {
        const auto fallback = max_feasible_tau(k, cfg.eta);
        out << " infeasible (largest feasible tau "
            << (fallback ? std::to_string(*fallback) : std::string("none")) << "); " << osu_note
            << '\n';
        continue;
      }
      if (!b) {
        out << " feasible; no certificate (subroutine is not beta-iterative); " << osu_note << '\n';
        continue;
      }
      const BoundCertificate cert = theorem1_certificate(k, tau, cfg.eta, *b, s0);
      out << " factor=" << format_double(cert.factor)
          << " tau_condition=" << (cert.tau_condition ? "yes" : "no")
          << " eta_condition=" << (cert.eta_condition ? "yes" : "no");
      if (tau < 2) out << " (guarantee stated for 2 <= tau only)";
      out << "; " << osu_note << '\n';
    }
  }
  return out.str();
}

}  // namespace robsub
