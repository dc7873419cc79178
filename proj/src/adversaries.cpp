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

#include "robsub/adversaries.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace robsub {
namespace {

void check_removal(const SubmodularOracle& oracle, const ElementSet& s, std::size_t tau) {
  if (s.universe() != oracle.ground_size()) {
    throw DomainError("solution set universe does not match the oracle");
  }
  if (tau > s.size()) {
    throw DomainError("cannot remove " + std::to_string(tau) + " elements from a set of " +
                      std::to_string(s.size()));
  }
}

class BranchAndBound {
 public:
  BranchAndBound(const SubmodularOracle& oracle, const ElementSet& s, std::size_t tau,
                 const BranchAndBoundOptions& options, RemovalResult incumbent)
      : oracle_(oracle), tau_(tau), options_(options), best_(std::move(incumbent)) {
    best_.kind = AdversaryKind::kOptimal;
    const double full = oracle_.evaluate(s);
    std::vector<std::pair<double, ElementId>> keyed;
    for (ElementId e : s) keyed.emplace_back(full - oracle_.evaluate(s.without(e)), e);
    // Decreasing f(e | S - e), smallest id first among equals.
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      return a.first > b.first || (a.first == b.first && a.second < b.second);
    });
    for (const auto& entry : keyed) order_.push_back(entry.second);
    kept_ = s;
    removed_ = ElementSet(s.universe());
    root_value_ = full;
  }

  RemovalResult run() {
    visit(0, tau_, root_value_);
    best_.nodes_explored = nodes_;
    return best_;
  }

 private:
  void visit(std::size_t depth, std::size_t budget, double current) {
    if (++nodes_ > options_.node_budget) {
      best_.nodes_explored = nodes_;
      throw AdversaryBudgetExceeded(
          "branch-and-bound exceeded " + std::to_string(options_.node_budget) + " nodes", best_);
    }
    if (current < best_.residual_value) {
      best_.residual_value = current;
      best_.removed = removed_;
    }
    if (budget == 0 || depth == order_.size()) return;
    if (options_.pruning && lower_bound(depth, budget, current) >= best_.residual_value) return;

    const ElementId e = order_[depth];
    kept_.erase(e);
    removed_.insert(e);
    visit(depth + 1, budget - 1, oracle_.evaluate(kept_));
    removed_.erase(e);
    kept_.insert(e);

    visit(depth + 1, budget, current);
  }

  /// current - (sum of the `budget` largest f(e | kept \ pool)), e in pool.
  double lower_bound(std::size_t depth, std::size_t budget, double current) {
    ElementSet base = kept_;
    for (std::size_t i = depth; i < order_.size(); ++i) base.erase(order_[i]);
    gains_.clear();
    for (std::size_t i = depth; i < order_.size(); ++i) {
      gains_.push_back(oracle_.marginal_gain(order_[i], base));
    }
    const std::size_t take = std::min(budget, gains_.size());
    std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(take),
                      gains_.end(), std::greater<>());
    return current - std::accumulate(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(take), 0.0);
  }

  const SubmodularOracle& oracle_;
  std::size_t tau_;
  BranchAndBoundOptions options_;
  RemovalResult best_;
  std::vector<ElementId> order_;
  ElementSet kept_;
  ElementSet removed_;
  double root_value_ = 0.0;
  std::uint64_t nodes_ = 0;
  std::vector<double> gains_;
};

}  // namespace

std::string_view to_string(AdversaryKind kind) {
  return kind == AdversaryKind::kOptimal ? "optimal" : "greedy";
}

AdversaryKind parse_adversary_kind(std::string_view name) {
  if (name == "optimal") return AdversaryKind::kOptimal;
  if (name == "greedy") return AdversaryKind::kGreedy;
  throw ConfigError("unknown adversary '" + std::string(name) + "'");
}

RemovalResult greedy_removal(const SubmodularOracle& oracle, const ElementSet& s,
                             std::size_t tau) {
  check_removal(oracle, s, tau);
  RemovalResult result{ElementSet(s.universe()), 0.0, AdversaryKind::kGreedy, 0};
  ElementSet remaining = s;
  for (std::size_t step = 0; step < tau; ++step) {
    double lowest = std::numeric_limits<double>::infinity();
    ElementId pick = 0;
    for (ElementId e : remaining) {
      const double v = oracle.evaluate(remaining.without(e));
      if (v < lowest) {
        lowest = v;
        pick = e;
      }
    }
    remaining.erase(pick);
    result.removed.insert(pick);
  }
  result.residual_value = oracle.evaluate(remaining);
  return result;
}

RemovalResult optimal_removal(const SubmodularOracle& oracle, const ElementSet& s,
                              std::size_t tau, const BranchAndBoundOptions& options) {
  check_removal(oracle, s, tau);
  RemovalResult seed = greedy_removal(oracle, s, tau);
  return BranchAndBound(oracle, s, tau, options, std::move(seed)).run();
}

double robust_value(const SubmodularOracle& oracle, const ElementSet& s, std::size_t tau,
                    AdversaryKind kind) {
  if (tau == 0) {
    check_removal(oracle, s, tau);
    return oracle.evaluate(s);
  }
  return kind == AdversaryKind::kOptimal ? optimal_removal(oracle, s, tau).residual_value
                                         : greedy_removal(oracle, s, tau).residual_value;
}

RobustOptimum brute_force_robust_opt(const SubmodularOracle& oracle, std::size_t k,
                                     std::size_t tau) {
  const std::size_t n = oracle.ground_size();
  if (n > 14 || k > 6) {
    throw ResourceError("brute-force robust optimum limited to n <= 14 and k <= 6 (got n = " +
                        std::to_string(n) + ", k = " + std::to_string(k) + ")");
  }
  if (k > n) throw DomainError("k exceeds ground set size");

  RobustOptimum best{ElementSet(n), -std::numeric_limits<double>::infinity()};
  std::vector<ElementId> combo(k);
  std::iota(combo.begin(), combo.end(), ElementId{0});
  while (true) {
    // Inner minimum over all sub-masks of the combination with at most tau bits.
    double worst = std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > tau) continue;
      ElementSet rest(n);
      for (std::size_t j = 0; j < k; ++j) {
        if (!((mask >> j) & 1u)) rest.insert(combo[j]);
      }
      worst = std::min(worst, oracle.evaluate(rest));
    }
    if (worst > best.value) best = {ElementSet(n, std::span<const ElementId>(combo)), worst};

    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && combo[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++combo[i - 1];
    for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return best;
}

}  // namespace robsub
