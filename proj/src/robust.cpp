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

#include "robsub/robust.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

namespace robsub {
namespace {

/// Stochastic runs get an independent seed per subroutine call; call 0 keeps
/// the configured seed so tau == 0 matches the plain baseline.
SubroutineSpec spec_for_call(const SubroutineSpec& spec, std::size_t call) {
  if (call == 0 || spec.kind != SubroutineKind::kStochastic) return spec;
  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(call)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  SubroutineSpec out = spec;
  out.seed = (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
  return out;
}

void check_cardinality(const SubmodularOracle& oracle, std::size_t k) {
  if (k > oracle.ground_size()) {
    throw DomainError("k = " + std::to_string(k) + " exceeds ground set size " +
                      std::to_string(oracle.ground_size()));
  }
}

/// Shared bucket-then-remainder construction used by PRo and OSU.
class RobustBuilder {
 public:
  RobustBuilder(const SubmodularOracle& oracle, const SubroutineSpec& spec)
      : oracle_(oracle), spec_(spec), n_(oracle.ground_size()) {
    solution_.S0 = ElementSet(n_);
  }

  void add_bucket(std::size_t partition, std::size_t index, std::size_t size) {
    const ElementSet ground = ElementSet::full(n_) - solution_.S0;
    OrderedSolution bucket = run_subroutine(spec_for_call(spec_, calls_++), oracle_, ground, size);
    solution_.S0 |= bucket.as_set(n_);
    solution_.buckets.push_back({partition, index, std::move(bucket)});
  }

  RobustSolution finish(std::size_t k) {
    const ElementSet ground = ElementSet::full(n_) - solution_.S0;
    solution_.remainder =
        run_subroutine(spec_for_call(spec_, calls_++), oracle_, ground, k - solution_.S0.size());
    solution_.S1 = solution_.remainder.as_set(n_);
    solution_.S = solution_.S0 | solution_.S1;
    solution_.raw_value = oracle_.evaluate(solution_.S);
    return std::move(solution_);
  }

 private:
  const SubmodularOracle& oracle_;
  const SubroutineSpec& spec_;
  std::size_t n_;
  std::size_t calls_ = 0;
  RobustSolution solution_;
};

}  // namespace

std::size_t ceil_log2(std::size_t x) {
  if (x == 0) throw DomainError("ceil_log2 of zero");
  return static_cast<std::size_t>(std::bit_width(x - 1));
}

std::size_t robust_part_size(std::size_t tau, std::size_t eta) {
  if (tau == 0) return 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i <= ceil_log2(tau); ++i) {
    const std::size_t width = std::size_t{1} << i;
    total += (tau + width - 1) / width * width * eta;
  }
  return total;
}

std::optional<std::size_t> max_feasible_tau(std::size_t k, std::size_t eta) {
  if (eta == 0) throw DomainError("eta must be >= 1");
  std::optional<std::size_t> best;
  for (std::size_t tau = 1; robust_part_size(tau, eta) <= k; ++tau) best = tau;
  return best;
}

PartitionLayout partition_layout(std::size_t tau, std::size_t eta, std::size_t k) {
  if (tau == 0) throw DomainError("partition layout requires tau >= 1");
  if (eta == 0) throw DomainError("partition layout requires eta >= 1");
  PartitionLayout layout{tau, eta, {}, 0};
  for (std::size_t i = 0; i <= ceil_log2(tau); ++i) {
    const std::size_t width = std::size_t{1} << i;
    const Partition p{i, (tau + width - 1) / width, width * eta};
    layout.partitions.push_back(p);
    layout.s0_size += p.bucket_count * p.bucket_size;
  }
  if (layout.s0_size > k) {
    const auto fallback = max_feasible_tau(k, eta);
    throw InfeasibleError("robust part of size " + std::to_string(layout.s0_size) +
                          " exceeds k = " + std::to_string(k) + " (tau = " + std::to_string(tau) +
                          ", eta = " + std::to_string(eta) + "); largest feasible tau is " +
                          (fallback ? std::to_string(*fallback) : std::string("none")));
  }
  return layout;
}

RobustSolution pro(const SubmodularOracle& oracle, std::size_t k, std::size_t tau,
                   std::size_t eta, const SubroutineSpec& spec) {
  check_cardinality(oracle, k);
  spec.validate();
  RobustBuilder builder(oracle, spec);
  if (tau == 0) return builder.finish(k);
  for (const Partition& p : partition_layout(tau, eta, k).partitions) {
    for (std::size_t j = 1; j <= p.bucket_count; ++j) builder.add_bucket(p.index, j, p.bucket_size);
  }
  return builder.finish(k);
}

RobustSolution osu(const SubmodularOracle& oracle, std::size_t k, std::size_t tau,
                   std::size_t bucket_size, const SubroutineSpec& spec) {
  check_cardinality(oracle, k);
  spec.validate();
  if (tau * bucket_size > k) {
    throw InfeasibleError("OSU robust part tau * bucket_size = " + std::to_string(tau * bucket_size) +
                          " exceeds k = " + std::to_string(k));
  }
  RobustBuilder builder(oracle, spec);
  for (std::size_t j = 1; j <= tau; ++j) builder.add_bucket(0, j, bucket_size);
  return builder.finish(k);
}

RobustSolution greedy_baseline(const SubmodularOracle& oracle, std::size_t k,
                               const SubroutineSpec& spec) {
  check_cardinality(oracle, k);
  spec.validate();
  return RobustBuilder(oracle, spec).finish(k);
}

BoundCertificate theorem1_certificate(std::size_t k, std::size_t tau, std::size_t eta,
                                      double beta, std::size_t s0_size) {
  if (k <= tau) throw DomainError("certificate requires k > tau");
  if (tau == 0) throw DomainError("certificate requires tau >= 1");
  if (eta == 0) throw DomainError("certificate requires eta >= 1");
  if (!(beta >= 1.0)) throw DomainError("certificate requires beta >= 1");
  if (s0_size > k) throw DomainError("robust part larger than k");

  const double kd = static_cast<double>(k);
  const double etad = static_cast<double>(eta);
  const double log_k = std::log2(kd);

  BoundCertificate cert{k, tau, eta, beta, s0_size};
  const double bucket_weight =
      etad / (5.0 * beta * beta * beta * static_cast<double>(ceil_log2(tau)) + etad);
  const double coverage = -std::expm1(-(kd - static_cast<double>(s0_size)) /
                                      (beta * (kd - static_cast<double>(tau))));
  const double p = bucket_weight * coverage;
  cert.factor = p / (1.0 + p);
  cert.tau_condition = tau >= 2 && static_cast<double>(tau) <= kd / (3.0 * etad * (log_k + 2.0));
  cert.eta_condition = etad >= 4.0 * (log_k + 1.0);
  return cert;
}

double asymptotic_factor(double beta) {
  const double decay = std::exp(-1.0 / beta);
  return (1.0 - decay) / (2.0 - decay);
}

}  // namespace robsub
