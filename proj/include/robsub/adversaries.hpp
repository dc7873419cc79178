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
#include <cstdint>
#include <string_view>

#include "robsub/oracle.hpp"

namespace robsub {

enum class AdversaryKind { kOptimal, kGreedy };

std::string_view to_string(AdversaryKind kind);
AdversaryKind parse_adversary_kind(std::string_view name);

struct RemovalResult {
  ElementSet removed;
  /// f(S \ removed).
  double residual_value = 0.0;
  AdversaryKind kind = AdversaryKind::kOptimal;
  /// Branch-and-bound nodes visited; zero for the greedy adversary.
  std::uint64_t nodes_explored = 0;
};

/// Thrown when branch-and-bound exhausts its node budget; carries the best
/// removal found so far, whose residual is an upper bound on the optimum.
class AdversaryBudgetExceeded : public ResourceError {
 public:
  AdversaryBudgetExceeded(const std::string& what, RemovalResult incumbent)
      : ResourceError(what), incumbent_(std::move(incumbent)) {}
  const RemovalResult& incumbent() const noexcept { return incumbent_; }

 private:
  RemovalResult incumbent_;
};

/// Removes, tau times, the element whose removal leaves the smallest value
/// (smallest id on ties).
RemovalResult greedy_removal(const SubmodularOracle& oracle, const ElementSet& s,
                             std::size_t tau);

struct BranchAndBoundOptions {
  std::uint64_t node_budget = 10'000'000;
  bool pruning = true;
};

/// Exact min of f(S \ Z) over |Z| <= tau by depth-first branch-and-bound.
///
/// Elements are branched in decreasing order of f(e | S - e). A node with
/// partial removal Zp, remaining budget r and undecided pool C is pruned when
///   f(S \ Zp) - (sum of the r largest f(e | S \ Zp \ C), e in C) >= incumbent,
/// which lower-bounds every completion by submodularity.
RemovalResult optimal_removal(const SubmodularOracle& oracle, const ElementSet& s,
                              std::size_t tau, const BranchAndBoundOptions& options = {});

/// Residual value under the chosen adversary.
double robust_value(const SubmodularOracle& oracle, const ElementSet& s, std::size_t tau,
                    AdversaryKind kind);

struct RobustOptimum {
  ElementSet set;
  double value = 0.0;
};

/// argmax over |S| = k of min over |Z| <= tau of f(S \ Z), by double
/// enumeration. Lexicographically smallest S wins ties. Limited to n <= 14,
/// k <= 6 (ResourceError otherwise).
RobustOptimum brute_force_robust_opt(const SubmodularOracle& oracle, std::size_t k,
                                     std::size_t tau);

}  // namespace robsub
