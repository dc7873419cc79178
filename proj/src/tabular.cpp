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

#include "robsub/tabular.hpp"

#include <cmath>
#include <string>

namespace robsub {
namespace {

std::string mask_string(std::uint32_t mask, std::size_t n) {
  std::string out = "{";
  bool first = true;
  for (std::size_t j = 0; j < n; ++j) {
    if ((mask >> j) & 1u) {
      if (!first) out += ",";
      out += std::to_string(j);
      first = false;
    }
  }
  return out + "}";
}

void check_shape(std::size_t n, std::span<const double> values) {
  if (n == 0 || n > TabularObjective::kMaxGroundSize) {
    throw ConfigError("tabular objective needs 1 <= n <= " +
                      std::to_string(TabularObjective::kMaxGroundSize) + ", got " +
                      std::to_string(n));
  }
  if (values.size() != (std::size_t{1} << n)) {
    throw ConfigError("tabular objective over " + std::to_string(n) + " elements needs " +
                      std::to_string(std::size_t{1} << n) + " values, got " +
                      std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw ConfigError("tabular value for " + mask_string(static_cast<std::uint32_t>(i), n) +
                        " must be finite and non-negative");
    }
  }
}

}  // namespace

TabularObjective::TabularObjective(std::size_t n, std::vector<double> values, Unchecked)
    : n_(n), values_(std::move(values)) {
  check_shape(n_, values_);
}

TabularObjective::TabularObjective(std::size_t n, std::vector<double> values)
    : TabularObjective(n, std::move(values), Unchecked{}) {
  if (const TabularCheck result = check(); !result.ok()) {
    throw ConfigError("tabular objective rejected: " + result.violation);
  }
}

TabularObjective TabularObjective::unchecked(std::size_t n, std::vector<double> values) {
  return TabularObjective(n, std::move(values), Unchecked{});
}

TabularCheck TabularObjective::check(std::size_t n, std::span<const double> values,
                                     double tolerance) {
  check_shape(n, values);
  TabularCheck result;
  auto note = [&](std::string what) {
    if (result.violation.empty()) result.violation = std::move(what);
  };
  if (values[0] != 0.0) {
    result.normalized = false;
    note("f({}) = " + std::to_string(values[0]) + " != 0");
  }
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t bit_i = std::uint32_t{1} << i;
      if (s & bit_i) continue;
      if (values[s | bit_i] < values[s] - tolerance) {
        result.monotone = false;
        note("f(" + mask_string(s | bit_i, n) + ") < f(" + mask_string(s, n) + ")");
      }
      // Local form of diminishing returns: f(i | S) >= f(i | S + j).
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint32_t bit_j = std::uint32_t{1} << j;
        if (s & bit_j) continue;
        const double gain_alone = values[s | bit_i] - values[s];
        const double gain_with_j = values[s | bit_i | bit_j] - values[s | bit_j];
        if (gain_alone < gain_with_j - tolerance) {
          result.submodular = false;
          note("f(" + std::to_string(i) + " | " + mask_string(s, n) + ") < f(" + std::to_string(i) +
               " | " + mask_string(s | bit_j, n) + ")");
        }
      }
    }
  }
  return result;
}

std::uint32_t TabularObjective::mask_of(const ElementSet& s) {
  std::uint32_t mask = 0;
  for (ElementId e : s) mask |= std::uint32_t{1} << e;
  return mask;
}

TabularObjective tabulate(const SubmodularOracle& oracle) {
  const std::size_t n = oracle.ground_size();
  if (n > TabularObjective::kMaxGroundSize) {
    throw ResourceError("cannot tabulate an oracle over " + std::to_string(n) + " elements");
  }
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    ElementSet s(n);
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) s.insert(static_cast<ElementId>(j));
    }
    values[mask] = oracle.evaluate(s);
  }
  return TabularObjective::unchecked(n, std::move(values));
}

TabularObjective table2_objective(double n_param, double eps_param) {
  if (!(n_param >= 0.0) || !(eps_param >= 0.0) || !(eps_param < n_param - 1.0)) {
    throw ConfigError("table2 objective requires 0 <= eps < n - 1 (got n=" +
                      std::to_string(n_param) + ", eps=" + std::to_string(eps_param) + ")");
  }
  const double n = n_param;
  const double eps = eps_param;
  // Bit 0 = s1, bit 1 = s2, bit 2 = s3.
  std::vector<double> values = {
      0.0,      // {}
      n,        // {s1}
      eps,      // {s2}
      n + eps,  // {s1,s2}
      n - 1.0,  // {s3}
      n,        // {s1,s3}
      n,        // {s2,s3}
      n + eps,  // {s1,s2,s3}
  };
  return TabularObjective::unchecked(3, std::move(values));
}

ModularObjective::ModularObjective(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ConfigError("modular objective needs at least one weight");
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw ConfigError("modular weights must be non-negative");
  }
}

double ModularObjective::value(const ElementSet& s) const {
  double total = 0.0;
  for (ElementId e : s) total += weights_[e];
  return total;
}

}  // namespace robsub
