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

#include "robsub/subroutines.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <queue>
#include <random>

namespace robsub {
namespace {

/// Accumulates the ordered picks and their prefix values.
class SolutionBuilder {
 public:
  SolutionBuilder(const SubmodularOracle& oracle, std::size_t k_prime)
      : oracle_(oracle), chosen_(oracle.ground_size()) {
    solution_.elements.reserve(k_prime);
    solution_.values.reserve(k_prime);
  }

  void add(ElementId e) {
    chosen_.insert(e);
    solution_.elements.push_back(e);
    solution_.values.push_back(oracle_.evaluate(chosen_));
  }

  const ElementSet& chosen() const noexcept { return chosen_; }
  std::size_t size() const noexcept { return solution_.elements.size(); }
  OrderedSolution take() { return std::move(solution_); }

 private:
  const SubmodularOracle& oracle_;
  ElementSet chosen_;
  OrderedSolution solution_;
};

void check_request(const SubmodularOracle& oracle, const ElementSet& ground, std::size_t k_prime) {
  if (ground.universe() != oracle.ground_size()) {
    throw DomainError("ground set universe does not match the oracle");
  }
  const std::size_t available = ground.size();
  if (k_prime > available) {
    throw InfeasibleError("requested " + std::to_string(k_prime) + " elements from a ground set of " +
                          std::to_string(available));
  }
}

/// Exact argmax of f(e | chosen) over unchosen candidates; smallest id on ties.
ElementId best_candidate(const SubmodularOracle& oracle, const std::vector<ElementId>& candidates,
                         const ElementSet& chosen) {
  double best_gain = -std::numeric_limits<double>::infinity();
  ElementId best = candidates.front();
  bool found = false;
  for (ElementId e : candidates) {
    if (chosen.contains(e)) continue;
    const double g = oracle.marginal_gain(e, chosen);
    if (!found || g > best_gain) {
      best_gain = g;
      best = e;
      found = true;
    }
  }
  return best;
}

}  // namespace

std::string_view to_string(SubroutineKind kind) {
  switch (kind) {
    case SubroutineKind::kGreedy: return "greedy";
    case SubroutineKind::kLazyGreedy: return "lazy_greedy";
    case SubroutineKind::kThresholding: return "thresholding";
    case SubroutineKind::kStochastic: return "stochastic";
  }
  return "unknown";
}

SubroutineKind parse_subroutine_kind(std::string_view name) {
  if (name == "greedy") return SubroutineKind::kGreedy;
  if (name == "lazy_greedy" || name == "lazy") return SubroutineKind::kLazyGreedy;
  if (name == "thresholding") return SubroutineKind::kThresholding;
  if (name == "stochastic") return SubroutineKind::kStochastic;
  throw ConfigError("unknown subroutine '" + std::string(name) + "'");
}

void SubroutineSpec::validate() const {
  const bool needs_epsilon =
      kind == SubroutineKind::kThresholding || kind == SubroutineKind::kStochastic;
  if (!needs_epsilon) return;
  if (!epsilon) throw ConfigError(std::string(to_string(kind)) + " requires epsilon");
  if (!(*epsilon > 0.0 && *epsilon < 1.0)) {
    throw ConfigError("epsilon must lie in (0, 1), got " + std::to_string(*epsilon));
  }
}

std::optional<double> beta(const SubroutineSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case SubroutineKind::kGreedy:
    case SubroutineKind::kLazyGreedy: return 1.0;
    case SubroutineKind::kThresholding: return 1.0 / (1.0 - *spec.epsilon);
    case SubroutineKind::kStochastic: return std::nullopt;
  }
  return std::nullopt;
}

ElementSet OrderedSolution::as_set(std::size_t universe) const {
  return ElementSet(universe, std::span<const ElementId>(elements));
}

OrderedSolution run_subroutine(const SubroutineSpec& spec, const SubmodularOracle& oracle,
                               const ElementSet& ground, std::size_t k_prime) {
  spec.validate();
  switch (spec.kind) {
    case SubroutineKind::kGreedy: return greedy(oracle, ground, k_prime);
    case SubroutineKind::kLazyGreedy: return lazy_greedy(oracle, ground, k_prime);
    case SubroutineKind::kThresholding:
      return thresholding_greedy(oracle, ground, k_prime, *spec.epsilon);
    case SubroutineKind::kStochastic:
      return stochastic_greedy(oracle, ground, k_prime, *spec.epsilon, spec.seed);
  }
  throw ConfigError("unknown subroutine kind");
}

OrderedSolution greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                       std::size_t k_prime) {
  check_request(oracle, ground, k_prime);
  SolutionBuilder out(oracle, k_prime);
  const std::vector<ElementId> candidates = ground.to_vector();
  while (out.size() < k_prime) out.add(best_candidate(oracle, candidates, out.chosen()));
  return out.take();
}

OrderedSolution lazy_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                            std::size_t k_prime) {
  check_request(oracle, ground, k_prime);
  SolutionBuilder out(oracle, k_prime);
  if (k_prime == 0) return out.take();

  struct Entry {
    double bound;
    ElementId id;
    std::size_t round;  // selection round in which `bound` was computed
  };
  // Max-heap on (bound, -id): ties resolve to the smallest id, as in greedy().
  auto lower = [](const Entry& a, const Entry& b) {
    return a.bound < b.bound || (a.bound == b.bound && a.id > b.id);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower)> queue(lower);
  for (ElementId e : ground) queue.push({oracle.marginal_gain(e, out.chosen()), e, 0});

  for (std::size_t round = 0; out.size() < k_prime;) {
    Entry top = queue.top();
    queue.pop();
    if (top.round == round) {
      out.add(top.id);
      ++round;
      continue;
    }
    top.bound = oracle.marginal_gain(top.id, out.chosen());
    top.round = round;
    queue.push(top);
  }
  return out.take();
}

OrderedSolution thresholding_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                                    std::size_t k_prime, double epsilon) {
  SubroutineSpec::thresholding(epsilon).validate();
  check_request(oracle, ground, k_prime);
  SolutionBuilder out(oracle, k_prime);
  if (k_prime == 0) return out.take();

  const std::vector<ElementId> candidates = ground.to_vector();
  double top_singleton = 0.0;
  for (ElementId e : candidates) {
    top_singleton = std::max(top_singleton, oracle.marginal_gain(e, out.chosen()));
  }
  const double floor = epsilon / static_cast<double>(candidates.size()) * top_singleton;

  double threshold = top_singleton;
  while (out.size() < k_prime) {
    for (ElementId e : candidates) {
      if (out.size() == k_prime) break;
      if (out.chosen().contains(e)) continue;
      if (oracle.marginal_gain(e, out.chosen()) >= threshold) out.add(e);
    }
    threshold *= 1.0 - epsilon;
    if (threshold < floor || threshold <= 0.0) break;
  }
  // Remaining gains are all below the floor; finish with exact argmax picks.
  while (out.size() < k_prime) out.add(best_candidate(oracle, candidates, out.chosen()));
  return out.take();
}

OrderedSolution stochastic_greedy(const SubmodularOracle& oracle, const ElementSet& ground,
                                  std::size_t k_prime, double epsilon, std::uint64_t seed) {
  SubroutineSpec::stochastic(epsilon, seed).validate();
  check_request(oracle, ground, k_prime);
  SolutionBuilder out(oracle, k_prime);
  if (k_prime == 0) return out.take();

  const std::size_t ground_size = ground.size();
  const auto sample_size = static_cast<std::size_t>(
      std::ceil(static_cast<double>(ground_size) / static_cast<double>(k_prime) *
                std::log(1.0 / epsilon)));

  std::mt19937_64 rng(seed);
  std::vector<ElementId> remaining = ground.to_vector();
  std::vector<ElementId> sample;
  while (out.size() < k_prime) {
    sample.clear();
    std::sample(remaining.begin(), remaining.end(), std::back_inserter(sample),
                std::clamp<std::size_t>(sample_size, 1, remaining.size()), rng);
    const ElementId pick = best_candidate(oracle, sample, out.chosen());
    out.add(pick);
    remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), pick));
  }
  return out.take();
}

BetaCheck verify_beta_iterative(const OrderedSolution& solution, const SubmodularOracle& oracle,
                                const ElementSet& ground, double beta) {
  BetaCheck result;
  ElementSet prefix = oracle.empty_set();
  double prefix_value = 0.0;
  for (std::size_t i = 0; i < solution.size(); ++i) {
    double best = 0.0;
    for (ElementId v : ground) best = std::max(best, oracle.marginal_gain(v, prefix));
    prefix.insert(solution.elements[i]);
    const double next_value = oracle.evaluate(prefix);
    if (next_value - prefix_value < best / beta - 1e-9) {
      result.holds = false;
      result.first_violation = i;
      return result;
    }
    prefix_value = next_value;
  }
  return result;
}

double lemma1_bound(std::size_t l, std::size_t k, double beta, double opt_value) {
  if (k == 0) throw DomainError("lemma1_bound requires k >= 1");
  if (!(beta >= 1.0)) throw DomainError("lemma1_bound requires beta >= 1");
  if (l == 0) return 0.0;
  const double exponent = static_cast<double>(l) / (beta * static_cast<double>(k));
  return -std::expm1(-exponent) * opt_value;
}

}  // namespace robsub
