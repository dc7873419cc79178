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
#include <optional>
#include <string_view>
#include <vector>

#include "robsub/domset.hpp"
#include "robsub/exemplar.hpp"

namespace robsub {

struct LoadedGraph {
  Graph graph;
  /// original_ids[dense] is the id that appeared in the file.
  std::vector<std::int64_t> original_ids;
};

/// SNAP-style edge list: two integer tokens per line, '#' comment lines,
/// blank lines ignored. Ids are remapped densely in order of first
/// appearance. Throws ParseError (with line number) or DomainError when no
/// edges are present.
LoadedGraph read_edge_list(std::istream& in, bool directed);
LoadedGraph load_edge_list(const std::filesystem::path& path, bool directed);

void write_edge_list(std::ostream& out, const Graph& graph);
/// "original_id dense_id" per line.
void write_id_map(std::ostream& out, const std::vector<std::int64_t>& original_ids);
void save_id_map(const std::filesystem::path& path, const std::vector<std::int64_t>& original_ids);

enum class Preprocessing { kNone, kMeanShift, kMeanShiftUnitNorm };

Preprocessing parse_preprocessing(std::string_view name);

/// Rectangular delimited numeric table, one item per row. Throws ParseError
/// for ragged rows or non-numeric cells.
VectorDataset read_vectors(std::istream& in, char delimiter = ',',
                           Preprocessing preprocessing = Preprocessing::kNone);
VectorDataset load_vectors(const std::filesystem::path& path, char delimiter = ',',
                           Preprocessing preprocessing = Preprocessing::kNone,
                           std::optional<std::size_t> expected_dim = std::nullopt);

/// Subtracts the column means; then, for kMeanShiftUnitNorm, scales every
/// non-zero row to unit L2 norm.
void preprocess(Eigen::MatrixXd& points, Preprocessing preprocessing);

/// `size` distinct ids from [0, n), uniform, ascending, reproducible per seed.
std::vector<ElementId> subsample(std::size_t n, std::size_t size, std::uint64_t seed);

}  // namespace robsub
