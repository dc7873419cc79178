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

#include "instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace robsub::testing {

TabularObjective random_submodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> item_count(3, 3 * n);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::bernoulli_distribution covers(0.3);
  std::uniform_real_distribution<double> concave_scale(0.0, 2.0);

  const std::size_t items = item_count(rng);
  std::vector<double> item_weight(items);
  for (double& w : item_weight) w = weight(rng);
  std::vector<std::vector<bool>> cover(n, std::vector<bool>(items));
  for (auto& row : cover) {
    for (std::size_t j = 0; j < items; ++j) row[j] = covers(rng);
  }
  std::vector<double> modular(n);
  for (double& m : modular) m = weight(rng);
  const double scale = concave_scale(rng);

  std::vector<double> values(std::size_t{1} << n);
  for (std::uint32_t mask = 1; mask < values.size(); ++mask) {
    double covered = 0.0;
    for (std::size_t j = 0; j < items; ++j) {
      for (std::size_t e = 0; e < n; ++e) {
        if (((mask >> e) & 1u) && cover[e][j]) {
          covered += item_weight[j];
          break;
        }
      }
    }
    double mass = 0.0;
    for (std::size_t e = 0; e < n; ++e) {
      if ((mask >> e) & 1u) mass += modular[e];
    }
    values[mask] = covered + scale * std::sqrt(mass);
  }
  return TabularObjective(n, std::move(values));
}

ElementSet random_subset(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  std::vector<ElementId> ids(n);
  std::iota(ids.begin(), ids.end(), ElementId{0});
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(size);
  return ElementSet(n, std::span<const ElementId>(ids));
}

std::vector<ElementSet> subsets_of_size(const ElementSet& within, std::size_t size) {
  const std::vector<ElementId> pool = within.to_vector();
  std::vector<ElementSet> out;
  if (size > pool.size()) return out;
  std::vector<bool> pick(pool.size(), false);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
  do {
    ElementSet s(within.universe());
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pick[i]) s.insert(pool[i]);
    }
    out.push_back(std::move(s));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

double exhaustive_opt(const SubmodularOracle& f, std::size_t k) {
  double best = 0.0;
  for (const ElementSet& s : subsets_of_size(f.full_set(), k)) best = std::max(best, f.evaluate(s));
  return best;
}

double exhaustive_min_removal(const SubmodularOracle& f, const ElementSet& s, std::size_t tau) {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t size = 0; size <= std::min(tau, s.size()); ++size) {
    for (const ElementSet& z : subsets_of_size(s, size)) worst = std::min(worst, f.evaluate(s - z));
  }
  return worst;
}

double exhaustive_robust_opt(const SubmodularOracle& f, std::size_t k, std::size_t tau) {
  double best = -std::numeric_limits<double>::infinity();
  for (const ElementSet& s : subsets_of_size(f.full_set(), k)) {
    best = std::max(best, exhaustive_min_removal(f, s, tau));
  }
  return best;
}

}  // namespace robsub::testing
