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

#include <atomic>
#include <cstdint>

#include "robsub/element_set.hpp"

namespace robsub {

struct EvalCounts {
  std::uint64_t full_evals = 0;
  std::uint64_t marginal_evals = 0;

  friend EvalCounts operator-(EvalCounts a, EvalCounts b) {
    return {a.full_evals - b.full_evals, a.marginal_evals - b.marginal_evals};
  }
  bool operator==(const EvalCounts&) const = default;
};

/// Thread-safe evaluation counter. Counts only grow until reset().
class EvalCounter {
 public:
  EvalCounter() = default;
  EvalCounter(const EvalCounter& other) noexcept { *this = other; }
  EvalCounter& operator=(const EvalCounter& other) noexcept {
    full_.store(other.full_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    marginal_.store(other.marginal_.load(std::memory_order_relaxed), std::memory_order_relaxed);
    return *this;
  }

  void count_full() noexcept { full_.fetch_add(1, std::memory_order_relaxed); }
  void count_marginal() noexcept { marginal_.fetch_add(1, std::memory_order_relaxed); }

  EvalCounts snapshot() const noexcept {
    return {full_.load(std::memory_order_relaxed), marginal_.load(std::memory_order_relaxed)};
  }
  void reset() noexcept {
    full_.store(0, std::memory_order_relaxed);
    marginal_.store(0, std::memory_order_relaxed);
  }

 private:
  std::atomic<std::uint64_t> full_{0};
  std::atomic<std::uint64_t> marginal_{0};
};

/// Evaluation contract for a normalized monotone submodular f : 2^V -> R>=0.
///
/// Derived classes implement value() and optionally a faster gain(); callers
/// go through evaluate()/marginal_gain(), which validate arguments and count
/// calls. Implementations must be safe for concurrent const use.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  virtual std::size_t ground_size() const noexcept = 0;

  /// f(S). Throws DomainError if S is not over this oracle's ground set.
  double evaluate(const ElementSet& s) const;

  /// f(e | S) = f(S + e) - f(S); exactly 0 when e is already in S.
  double marginal_gain(ElementId e, const ElementSet& s) const;

  EvalCounts counts() const noexcept { return counter_.snapshot(); }
  void reset_counts() const noexcept { counter_.reset(); }

  ElementSet empty_set() const { return ElementSet(ground_size()); }
  ElementSet full_set() const { return ElementSet::full(ground_size()); }

 protected:
  virtual double value(const ElementSet& s) const = 0;
  /// Called only with e not in s.
  virtual double gain(ElementId e, const ElementSet& s) const;

 private:
  void check_set(const ElementSet& s) const;

  mutable EvalCounter counter_;
};

/// g(S) = f(S | base) = f(S + base) - f(base).
///
/// Borrows the underlying oracle, which must outlive the view. Calls through
/// the view are counted on both the view and the underlying oracle.
class ConditionalOracle final : public SubmodularOracle {
 public:
  ConditionalOracle(const SubmodularOracle& base_oracle, ElementSet base);

  std::size_t ground_size() const noexcept override { return oracle_.ground_size(); }
  const ElementSet& base() const noexcept { return base_; }

 protected:
  double value(const ElementSet& s) const override;
  double gain(ElementId e, const ElementSet& s) const override;

 private:
  const SubmodularOracle& oracle_;
  ElementSet base_;
  double base_value_;
};

ConditionalOracle conditional_view(const SubmodularOracle& oracle, const ElementSet& base);

}  // namespace robsub
