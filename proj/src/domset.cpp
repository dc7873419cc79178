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

#include "robsub/domset.hpp"

#include <algorithm>
#include <string>

namespace robsub {
namespace {

ElementSet cover(const Graph& graph, const ElementSet& s) {
  ElementSet covered(graph.node_count());
  for (ElementId u : s) {
    covered.insert(u);
    for (ElementId v : graph.neighbors(u)) covered.insert(v);
  }
  return covered;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges, bool directed)
    : directed_(directed), offsets_(n + 1, 0) {
  if (n == 0) throw DomainError("graph must have at least one node");
  std::vector<Edge> arcs;
  arcs.reserve(directed ? edges.size() : 2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") out of range for " + std::to_string(n) + " nodes");
    }
    // A node always covers itself; self-loops add nothing.
    if (u == v) continue;
    arcs.emplace_back(u, v);
    if (!directed) arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  targets_.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    ++offsets_[u + 1];
    targets_.push_back(v);
  }
  for (std::size_t i = 1; i <= n; ++i) offsets_[i] += offsets_[i - 1];
}

std::size_t Graph::edge_count() const noexcept {
  return directed_ ? targets_.size() : targets_.size() / 2;
}

std::span<const ElementId> Graph::neighbors(ElementId v) const {
  if (v >= node_count()) throw DomainError("node " + std::to_string(v) + " out of range");
  return std::span<const ElementId>(targets_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (ElementId u = 0; u < node_count(); ++u) {
    for (ElementId v : neighbors(u)) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DomSetObjective::DomSetObjective(Graph graph) : graph_(std::move(graph)) {}

ElementSet DomSetObjective::covered_by(const ElementSet& s) const { return cover(graph_, s); }

double DomSetObjective::value(const ElementSet& s) const {
  return static_cast<double>(covered_by(s).size());
}

double DomSetObjective::gain(ElementId e, const ElementSet& s) const {
  const ElementSet covered = covered_by(s);
  std::size_t fresh = covered.contains(e) ? 0 : 1;
  for (ElementId v : graph_.neighbors(e)) {
    if (!covered.contains(v)) ++fresh;
  }
  return static_cast<double>(fresh);
}

double domset_value(const Graph& graph, const ElementSet& s) {
  if (s.universe() != graph.node_count()) {
    throw DomainError("set universe does not match graph node count");
  }
  return static_cast<double>(cover(graph, s).size());
}

}  // namespace robsub
