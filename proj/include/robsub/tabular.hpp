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
#include <span>
#include <string>
#include <vector>

#include "robsub/oracle.hpp"

namespace robsub {

/// Outcome of checking an explicit table against the oracle contract.
struct TabularCheck {
  bool normalized = true;
  bool monotone = true;
  bool submodular = true;
  /// Human-readable description of the first violation found, if any.
  std::string violation;

  bool ok() const noexcept { return normalized && monotone && submodular; }
};

/// Set function given by an explicit table of all 2^n values.
///
/// Entry i holds f(S) for the set whose bit j is set iff element j is in S.
class TabularObjective final : public SubmodularOracle {
 public:
  static constexpr std::size_t kMaxGroundSize = 20;

  /// Validates the table; throws ConfigError if it is not normalized,
  /// monotone and submodular (absolute tolerance 1e-9).
  TabularObjective(std::size_t n, std::vector<double> values);

  /// Skips the lattice checks (shape and non-negativity are still enforced).
  static TabularObjective unchecked(std::size_t n, std::vector<double> values);

  static TabularCheck check(std::size_t n, std::span<const double> values,
                            double tolerance = 1e-9);
  TabularCheck check(double tolerance = 1e-9) const { return check(n_, values_, tolerance); }

  std::size_t ground_size() const noexcept override { return n_; }
  std::span<const double> table() const noexcept { return values_; }

  static std::uint32_t mask_of(const ElementSet& s);

 protected:
  double value(const ElementSet& s) const override { return values_[mask_of(s)]; }

 private:
  struct Unchecked {};
  TabularObjective(std::size_t n, std::vector<double> values, Unchecked);

  std::size_t n_;
  std::vector<double> values_;
};

/// Tabulates any oracle with at most kMaxGroundSize elements.
TabularObjective tabulate(const SubmodularOracle& oracle);

/// The three-element function (s1, s2, s3 = elements 0, 1, 2) on which greedy
/// is arbitrarily bad for the robust problem. The full set maps to n + eps.
///
/// Requires 0 <= eps < n - 1. The table is only submodular at eps == 1
/// (f(s2 | {s3}) = 1 exceeds f({s2}) = eps otherwise), so it is built
/// without lattice validation.
TabularObjective table2_objective(double n_param, double eps_param);

/// f(S) = sum of non-negative weights.
class ModularObjective final : public SubmodularOracle {
 public:
  explicit ModularObjective(std::vector<double> weights);

  std::size_t ground_size() const noexcept override { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }

 protected:
  double value(const ElementSet& s) const override;
  double gain(ElementId e, const ElementSet&) const override { return weights_[e]; }

 private:
  std::vector<double> weights_;
};

}  // namespace robsub
