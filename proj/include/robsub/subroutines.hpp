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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robsub/oracle.hpp"

namespace robsub {

enum class SubroutineKind { kGreedy, kLazyGreedy, kThresholding, kStochastic };

std::string_view to_string(SubroutineKind kind);
/// Accepts "greedy", "lazy_greedy", "thresholding", "stochastic".
SubroutineKind parse_subroutine_kind(std::string_view name);

/// A greedy-family algorithm A(k', V') and its parameters.
struct SubroutineSpec {
  SubroutineKind kind = SubroutineKind::kLazyGreedy;
  /// Required in (0, 1) for thresholding and stochastic; ignored otherwise.
  std::optional<double> epsilon;
  std::uint64_t seed = 0;

  static SubroutineSpec greedy() { return {SubroutineKind::kGreedy, std::nullopt, 0}; }
  static SubroutineSpec lazy_greedy() { return {SubroutineKind::kLazyGreedy, std::nullopt, 0}; }
  static SubroutineSpec thresholding(double epsilon) {
    return {SubroutineKind::kThresholding, epsilon, 0};
  }
  static SubroutineSpec stochastic(double epsilon, std::uint64_t seed) {
    return {SubroutineKind::kStochastic, epsilon, seed};
  }

  /// Throws ConfigError when epsilon is missing or out of range for the kind.
  void validate() const;
};

/// beta of the beta-iterative property: 1 for (lazy) greedy, 1/(1-eps) for
/// thresholding, and nullopt for stochastic greedy, which is not certified.
std::optional<double> beta(const SubroutineSpec& spec);

/// Ordered output (v1, ..., vl) with prefix values f({v1..vi}).
struct OrderedSolution {
  std::vector<ElementId> elements;
  std::vector<double> values;

  std::size_t size() const noexcept { return elements.size(); }
  double value() const noexcept { return values.empty() ? 0.0 : values.back(); }
  ElementSet as_set(std::size_t universe) const;
};

/// Runs the subroutine on `ground` and returns exactly k_prime elements.
///
/// Ties in marginal gain go to the smallest id. When every remaining gain is
/// zero the solution is still filled to k_prime. Throws InfeasibleError when
/// k_prime exceeds |ground|.
OrderedSolution run_subroutine(const SubroutineSpec& spec, const SubmodularOracle& oracle,
                               const ElementSet& ground, std::size_t k_prime);

OrderedSolution greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                       std::size_t k_prime);
OrderedSolution lazy_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                            std::size_t k_prime);
OrderedSolution thresholding_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                                    std::size_t k_prime, double epsilon);
OrderedSolution stochastic_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                                  std::size_t k_prime, double epsilon, std::uint64_t seed);

struct BetaCheck {
  bool holds = true;
  /// First step i at which f(A_{i+1}) - f(A_i) < max_v f(v | A_i) / beta - 1e-9.
  std::optional<std::size_t> first_violation;
};

/// Exhaustive check of the beta-iterative property over `ground`.
BetaCheck verify_beta_iterative(const OrderedSolution& solution, const SubmodularOracle& oracle,
                                const ElementSet& ground, double beta);

/// (1 - exp(-l / (beta k))) * opt_value: the guaranteed value of the first l
/// picks of a beta-iterative algorithm relative to the best size-k set.
double lemma1_bound(std::size_t l, std::size_t k, double beta, double opt_value);

}  // namespace robsub
