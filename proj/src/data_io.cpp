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

#include "robsub/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <string>

namespace robsub {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Whitespace delimiters split on runs of blanks; anything else splits on
/// every occurrence, so empty cells survive and are reported.
std::vector<std::string_view> split_fields(std::string_view text, char delimiter) {
  std::vector<std::string_view> fields;
  if (delimiter == ' ' || delimiter == '\t') {
    std::size_t pos = 0;
    while ((pos = text.find_first_not_of(" \t", pos)) != std::string_view::npos) {
      const std::size_t stop = std::min(text.find_first_of(" \t", pos), text.size());
      fields.push_back(text.substr(pos, stop - pos));
      pos = stop;
    }
    return fields;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t stop = std::min(text.find(delimiter, start), text.size());
    fields.push_back(trim(text.substr(start, stop - start)));
    if (stop == text.size()) return fields;
    start = stop + 1;
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

}  // namespace

LoadedGraph read_edge_list(std::istream& in, bool directed) {
  std::vector<std::pair<std::int64_t, std::int64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    std::int64_t ids[2];
    const char* cursor = text.data();
    const char* end = text.data() + text.size();
    for (int t = 0; t < 2; ++t) {
      while (cursor < end && (*cursor == ' ' || *cursor == '\t')) ++cursor;
      const auto [next, ec] = std::from_chars(cursor, end, ids[t]);
      if (ec != std::errc() || next == cursor || (next < end && *next != ' ' && *next != '\t')) {
        throw ParseError("expected two integer node ids, got '" + std::string(text) + "'", line_no);
      }
      cursor = next;
    }
    while (cursor < end && (*cursor == ' ' || *cursor == '\t')) ++cursor;
    if (cursor != end) {
      throw ParseError("trailing tokens after edge in '" + std::string(text) + "'", line_no);
    }
    raw.emplace_back(ids[0], ids[1]);
  }
  if (raw.empty()) throw DomainError("edge list contains no edges");

  // Dense id = rank of the original id, so dense files reload unchanged.
  std::vector<std::int64_t> original;
  original.reserve(2 * raw.size());
  for (const auto& [u, v] : raw) {
    original.push_back(u);
    original.push_back(v);
  }
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  auto dense = [&](std::int64_t id) {
    return static_cast<ElementId>(std::lower_bound(original.begin(), original.end(), id) -
                                  original.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) edges.emplace_back(dense(u), dense(v));
  return {Graph(original.size(), edges, directed), std::move(original)};
}

LoadedGraph load_edge_list(const std::filesystem::path& path, bool directed) {
  auto in = open_input(path);
  return read_edge_list(in, directed);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << "# " << (graph.directed() ? "directed" : "undirected") << " nodes "
      << graph.node_count() << " edges " << graph.edge_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
  // Isolated nodes are written as self-loops so the node count survives a reload.
  for (ElementId v = 0; v < graph.node_count(); ++v) {
    if (graph.neighbors(v).empty()) out << v << ' ' << v << '\n';
  }
}

void write_id_map(std::ostream& out, const std::vector<std::int64_t>& original_ids) {
  for (std::size_t dense = 0; dense < original_ids.size(); ++dense) {
    out << original_ids[dense] << ' ' << dense << '\n';
  }
}

void save_id_map(const std::filesystem::path& path, const std::vector<std::int64_t>& original_ids) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_id_map(out, original_ids);
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Preprocessing parse_preprocessing(std::string_view name) {
  if (name == "none") return Preprocessing::kNone;
  if (name == "mean_shift") return Preprocessing::kMeanShift;
  if (name == "mean_shift_unit_norm") return Preprocessing::kMeanShiftUnitNorm;
  throw ConfigError("unknown preprocessing '" + std::string(name) + "'");
}

void preprocess(Eigen::MatrixXd& points, Preprocessing preprocessing) {
  if (preprocessing == Preprocessing::kNone || points.rows() == 0) return;
  const Eigen::RowVectorXd mean = points.colwise().mean();
  points.rowwise() -= mean;
  if (preprocessing == Preprocessing::kMeanShiftUnitNorm) {
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      const double norm = points.row(i).norm();
      if (norm > 0.0) points.row(i) /= norm;
    }
  }
}

VectorDataset read_vectors(std::istream& in, char delimiter, Preprocessing preprocessing) {
  std::vector<double> cells;
  std::size_t dim = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    std::size_t count = 0;
    for (const std::string_view token : split_fields(text, delimiter)) {
      double value = 0.0;
      const auto [next, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || next != token.data() + token.size()) {
        throw ParseError("non-numeric value '" + std::string(token) + "'", line_no, count + 1);
      }
      cells.push_back(value);
      ++count;
    }
    if (rows == 0) {
      dim = count;
    } else if (count != dim) {
      throw ParseError("row has " + std::to_string(count) + " columns, expected " +
                           std::to_string(dim),
                       line_no);
    }
    ++rows;
  }
  if (rows == 0) throw DomainError("vector file contains no rows");

  VectorDataset dataset;
  dataset.points = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      cells.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dim));
  preprocess(dataset.points, preprocessing);
  return dataset;
}

VectorDataset load_vectors(const std::filesystem::path& path, char delimiter,
                           Preprocessing preprocessing, std::optional<std::size_t> expected_dim) {
  auto in = open_input(path);
  VectorDataset dataset = read_vectors(in, delimiter, preprocessing);
  if (expected_dim && *expected_dim != dataset.dim()) {
    std::cerr << "warning: '" << path.string() << "' has " << dataset.dim()
              << " columns, expected " << *expected_dim << "; using the file's column count\n";
  }
  return dataset;
}

std::vector<ElementId> subsample(std::size_t n, std::size_t size, std::uint64_t seed) {
  if (size > n) {
    throw DomainError("cannot draw " + std::to_string(size) + " items from " + std::to_string(n));
  }
  std::vector<ElementId> all(n);
  std::iota(all.begin(), all.end(), ElementId{0});
  std::vector<ElementId> picked;
  picked.reserve(size);
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), size, rng);
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace robsub
