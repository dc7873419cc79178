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

#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "gtest/gtest.h"
#include "instances.hpp"
#include "robsub/domset.hpp"
#include "robsub/exemplar.hpp"
#include "robsub/tabular.hpp"

namespace robsub {
namespace {

constexpr ElementId kS1 = 0, kS2 = 1, kS3 = 2;

DomSetObjective star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (ElementId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return DomSetObjective(Graph(leaves + 1, edges, false));
}

TEST(EvaluateTest, CounterexampleValues) {
  const auto f = table2_objective(10.0, 0.5);
  EXPECT_EQ(f.evaluate(f.empty_set()), 0.0);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS1})), 10.0);
}

TEST(EvaluateTest, StarIsNormalized) {
  const auto f = star(4);
  EXPECT_EQ(f.evaluate(f.empty_set()), 0.0);
}

TEST(EvaluateTest, WrongUniverseIsDomainError) {
  const auto f = table2_objective(10.0, 0.5);
  EXPECT_THROW(f.evaluate(ElementSet(4, {3})), DomainError);
  EXPECT_THROW(f.marginal_gain(3, f.empty_set()), DomainError);
}

TEST(MarginalGainTest, CounterexampleExamples) {
  const auto f = table2_objective(10.0, 0.5);
  const ElementSet s1(3, {kS1});
  EXPECT_EQ(f.marginal_gain(kS2, s1), 0.5);
  EXPECT_EQ(f.marginal_gain(kS3, s1), 0.0);
  EXPECT_EQ(f.marginal_gain(kS1, s1), 0.0);
}

TEST(EvalCounterTest, DistinguishesFullAndMarginal) {
  const ModularObjective f({3.0, 2.0, 1.0});
  f.reset_counts();
  f.evaluate(ElementSet(3, {0}));
  f.evaluate(f.empty_set());
  f.marginal_gain(1, ElementSet(3, {0}));
  f.marginal_gain(0, ElementSet(3, {0}));  // member: still counted
  EXPECT_EQ(f.counts(), (EvalCounts{2, 2}));
  f.reset_counts();
  EXPECT_EQ(f.counts(), (EvalCounts{0, 0}));
}

TEST(EvalCounterTest, ConcurrentIncrementsAreNotLost) {
  const ModularObjective f(std::vector<double>(64, 1.0));
  const ElementSet s(64, {1, 2, 3});
  constexpr int kThreads = 4;
  constexpr int kCalls = 5000;
  std::vector<std::thread> workers;
  for (int t = 0; t < kThreads; ++t) {
    workers.emplace_back([&] {
      for (int i = 0; i < kCalls; ++i) {
        f.marginal_gain(static_cast<ElementId>(i % 64), s);
        f.evaluate(s);
      }
    });
  }
  for (auto& w : workers) w.join();
  EXPECT_EQ(f.counts(), (EvalCounts{kThreads * kCalls, kThreads * kCalls}));
}

TEST(ConditionalViewTest, EmptyBaseIsIdentity) {
  std::mt19937_64 rng(5);
  const auto f = testing::random_submodular(6, rng);
  const auto g = conditional_view(f, f.empty_set());
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    ElementSet s(6);
    for (ElementId e = 0; e < 6; ++e) {
      if ((mask >> e) & 1u) s.insert(e);
    }
    EXPECT_EQ(g.evaluate(s), f.evaluate(s));
  }
}

TEST(ConditionalViewTest, CounterexampleConditionedOnS1) {
  const auto f = table2_objective(10.0, 0.5);
  const auto g = conditional_view(f, ElementSet(3, {kS1}));
  EXPECT_EQ(g.evaluate(ElementSet(3, {kS2})), 0.5);
  EXPECT_EQ(g.evaluate(g.empty_set()), 0.0);
  EXPECT_EQ(g.evaluate(ElementSet(3, {kS1})), 0.0);
  EXPECT_EQ(g.marginal_gain(kS2, g.empty_set()), 0.5);
}

// Contract properties over every shipped oracle family.
struct OracleCase {
  std::string name;
  std::function<std::unique_ptr<SubmodularOracle>(std::mt19937_64&)> make;
};

std::vector<OracleCase> oracle_cases() {
  return {
      {"tabular", [](std::mt19937_64& rng) -> std::unique_ptr<SubmodularOracle> {
         return std::make_unique<TabularObjective>(testing::random_submodular(8, rng));
       }},
      {"modular", [](std::mt19937_64& rng) -> std::unique_ptr<SubmodularOracle> {
         std::uniform_real_distribution<double> w(0.0, 5.0);
         std::vector<double> weights(10);
         for (double& x : weights) x = w(rng);
         return std::make_unique<ModularObjective>(weights);
       }},
      {"domset", [](std::mt19937_64& rng) -> std::unique_ptr<SubmodularOracle> {
         std::bernoulli_distribution coin(0.25);
         std::vector<Edge> edges;
         for (ElementId u = 0; u < 12; ++u) {
           for (ElementId v = 0; v < 12; ++v) {
             if (u != v && coin(rng)) edges.emplace_back(u, v);
           }
         }
         return std::make_unique<DomSetObjective>(Graph(12, edges, true));
       }},
      {"exemplar", [](std::mt19937_64& rng) -> std::unique_ptr<SubmodularOracle> {
         std::normal_distribution<double> gauss;
         VectorDataset data{Eigen::MatrixXd(12, 3)};
         for (Eigen::Index i = 0; i < 12; ++i) {
           for (Eigen::Index j = 0; j < 3; ++j) data.points(i, j) = gauss(rng);
         }
         return std::make_unique<ExemplarObjective>(std::move(data));
       }},
      {"conditioned", [](std::mt19937_64& rng) -> std::unique_ptr<SubmodularOracle> {
         // The view borrows its base, so keep the base alive alongside it.
         struct Owned : SubmodularOracle {
           explicit Owned(TabularObjective base)
               : base_(std::move(base)), view_(base_, ElementSet(base_.ground_size(), {0, 3})) {}
           std::size_t ground_size() const noexcept override { return base_.ground_size(); }
           double value(const ElementSet& s) const override { return view_.evaluate(s); }
           TabularObjective base_;
           ConditionalOracle view_;
         };
         return std::make_unique<Owned>(testing::random_submodular(8, rng));
       }},
  };
}

TEST(OracleContractTest, NormalizedMonotoneSubmodularConsistent) {
  std::mt19937_64 rng(2024);
  for (const OracleCase& c : oracle_cases()) {
    SCOPED_TRACE(c.name);
    for (int instance = 0; instance < 5; ++instance) {
      const auto f = c.make(rng);
      const std::size_t n = f->ground_size();
      ASSERT_LE(n, 12u);
      EXPECT_EQ(f->evaluate(f->empty_set()), 0.0);
      std::uniform_int_distribution<std::size_t> size_of(0, n - 1);
      for (int trial = 0; trial < 100; ++trial) {
        const ElementSet t = testing::random_subset(n, size_of(rng), rng);
        // S: random subset of T.
        ElementSet s = t;
        std::bernoulli_distribution drop(0.5);
        for (ElementId e : t) {
          if (drop(rng)) s.erase(e);
        }
        EXPECT_LE(f->evaluate(s), f->evaluate(t));
        for (ElementId e = 0; e < n; ++e) {
          if (t.contains(e)) continue;
          EXPECT_GE(f->marginal_gain(e, s), f->marginal_gain(e, t) - 1e-9);
          EXPECT_NEAR(f->marginal_gain(e, s), f->evaluate(s.with(e)) - f->evaluate(s), 1e-9);
        }
      }
    }
  }
}

}  // namespace
}  // namespace robsub
