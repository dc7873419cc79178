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
#include <optional>
#include <vector>

#include "robsub/subroutines.hpp"

namespace robsub {

/// ceil(log2(x)) for x >= 1.
std::size_t ceil_log2(std::size_t x);

struct Partition {
  std::size_t index;         // i
  std::size_t bucket_count;  // ceil(tau / 2^i)
  std::size_t bucket_size;   // 2^i * eta
};

/// Shape of PRo's robust part S0: partitions i = 0..ceil(log2 tau).
struct PartitionLayout {
  std::size_t tau = 0;
  std::size_t eta = 0;
  std::vector<Partition> partitions;
  std::size_t s0_size = 0;
};

/// sum_{i=0}^{ceil(log2 tau)} ceil(tau / 2^i) * 2^i * eta.
std::size_t robust_part_size(std::size_t tau, std::size_t eta);

/// Largest tau >= 1 whose robust part fits in k, or nullopt if none does.
std::optional<std::size_t> max_feasible_tau(std::size_t k, std::size_t eta);

/// Throws DomainError for tau == 0 or eta == 0 and InfeasibleError (naming
/// the largest feasible tau) when the robust part does not fit in k.
PartitionLayout partition_layout(std::size_t tau, std::size_t eta, std::size_t k);

struct Bucket {
  std::size_t partition;  // i
  std::size_t index;      // j, 1-based
  OrderedSolution solution;
};

struct RobustSolution {
  ElementSet S;
  ElementSet S0;
  ElementSet S1;
  std::vector<Bucket> buckets;
  OrderedSolution remainder;
  double raw_value = 0.0;
};

/// Partitioned robust selection. Every bucket and the remainder are separate
/// runs of the subroutine with the unconditioned objective on the elements
/// not yet selected. tau == 0 reduces to a single run of size k.
RobustSolution pro(const SubmodularOracle& oracle, std::size_t k, std::size_t tau,
                   std::size_t eta, const SubroutineSpec& spec);

/// Baseline with tau equal buckets of `bucket_size` followed by a remainder
/// of size k - tau * bucket_size. Throws InfeasibleError if that is negative.
RobustSolution osu(const SubmodularOracle& oracle, std::size_t k, std::size_t tau,
                   std::size_t bucket_size, const SubroutineSpec& spec);

/// Non-robust baseline: S0 empty, S1 = subroutine(k) on the full ground set.
RobustSolution greedy_baseline(const SubmodularOracle& oracle, std::size_t k,
                               const SubroutineSpec& spec);

struct BoundCertificate {
  std::size_t k = 0;
  std::size_t tau = 0;
  std::size_t eta = 0;
  double beta = 1.0;
  std::size_t s0_size = 0;
  /// Guaranteed ratio of the robust value to the robust optimum.
  double factor = 0.0;
  /// 2 <= tau <= k / (3 eta (log2 k + 2)).
  bool tau_condition = false;
  /// eta >= 4 (log2 k + 1).
  bool eta_condition = false;

  bool conditions_met() const noexcept { return tau_condition && eta_condition; }
};

/// factor = P / (1 + P) with
///   P = eta / (5 beta^3 ceil(log2 tau) + eta) * (1 - exp(-(k - s0) / (beta (k - tau)))).
/// Throws DomainError for k <= tau, s0_size > k, eta == 0 or beta < 1.
BoundCertificate theorem1_certificate(std::size_t k, std::size_t tau, std::size_t eta,
                                      double beta, std::size_t s0_size);

/// Limit of the certificate as k grows: (1 - e^{-1/beta}) / (2 - e^{-1/beta}).
double asymptotic_factor(double beta);

}  // namespace robsub
