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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "robsub/oracle.hpp"

namespace robsub {

using Edge = std::pair<ElementId, ElementId>;

/// Graph in compressed adjacency form with sorted, duplicate-free neighbor
/// lists and no self-loops. Undirected graphs store both directions.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges, bool directed);

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  /// Arcs for directed graphs, unordered pairs for undirected ones.
  std::size_t edge_count() const noexcept;
  bool directed() const noexcept { return directed_; }

  std::span<const ElementId> neighbors(ElementId v) const;
  /// Edges in canonical order (undirected edges listed once with u < v).
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  bool directed_;
  std::vector<std::size_t> offsets_;
  std::vector<ElementId> targets_;
};

/// f(S) = |S + N(S)|, the number of nodes covered by S and its out-neighbors.
class DomSetObjective final : public SubmodularOracle {
 public:
  explicit DomSetObjective(Graph graph);

  std::size_t ground_size() const noexcept override { return graph_.node_count(); }
  const Graph& graph() const noexcept { return graph_; }

 protected:
  double value(const ElementSet& s) const override;
  double gain(ElementId e, const ElementSet& s) const override;

 private:
  ElementSet covered_by(const ElementSet& s) const;

  Graph graph_;
};

/// Uncounted one-shot evaluation of |S + N(S)|.
double domset_value(const Graph& graph, const ElementSet& s);

}  // namespace robsub
