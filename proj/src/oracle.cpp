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

#include "robsub/oracle.hpp"

#include <string>

namespace robsub {

void SubmodularOracle::check_set(const ElementSet& s) const {
  if (s.universe() != ground_size()) {
    throw DomainError("set over universe of size " + std::to_string(s.universe()) +
                      " passed to oracle with ground set of size " +
                      std::to_string(ground_size()));
  }
}

double SubmodularOracle::evaluate(const ElementSet& s) const {
  check_set(s);
  counter_.count_full();
  if (s.empty()) return 0.0;
  return value(s);
}

double SubmodularOracle::marginal_gain(ElementId e, const ElementSet& s) const {
  check_set(s);
  if (e >= ground_size()) {
    throw DomainError("element " + std::to_string(e) + " out of range for ground set of size " +
                      std::to_string(ground_size()));
  }
  counter_.count_marginal();
  if (s.contains(e)) return 0.0;
  return gain(e, s);
}

double SubmodularOracle::gain(ElementId e, const ElementSet& s) const {
  const double base = s.empty() ? 0.0 : value(s);
  return value(s.with(e)) - base;
}

ConditionalOracle::ConditionalOracle(const SubmodularOracle& base_oracle, ElementSet base)
    : oracle_(base_oracle), base_(std::move(base)), base_value_(oracle_.evaluate(base_)) {}

double ConditionalOracle::value(const ElementSet& s) const {
  return oracle_.evaluate(s | base_) - base_value_;
}

double ConditionalOracle::gain(ElementId e, const ElementSet& s) const {
  return oracle_.marginal_gain(e, s | base_);
}

ConditionalOracle conditional_view(const SubmodularOracle& oracle, const ElementSet& base) {
  return ConditionalOracle(oracle, base);
}

}  // namespace robsub
