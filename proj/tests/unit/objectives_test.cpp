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

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "instances.hpp"
#include "robsub/domset.hpp"
#include "robsub/exemplar.hpp"
#include "robsub/tabular.hpp"

namespace robsub {
namespace {

constexpr ElementId kS1 = 0, kS2 = 1, kS3 = 2;

TEST(CounterexampleTest, ListedRows) {
  const auto f = table2_objective(10.0, 0.5);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS1})), 10.0);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS2})), 0.5);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS3})), 9.0);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS1, kS2})), 10.5);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS1, kS3})), 10.0);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS2, kS3})), 10.0);
  EXPECT_EQ(f.evaluate(ElementSet(3, {kS1, kS2, kS3})), 10.5);
}

TEST(CounterexampleTest, ParameterRange) {
  EXPECT_THROW(table2_objective(10.0, -0.1), ConfigError);
  EXPECT_THROW(table2_objective(10.0, 9.0), ConfigError);
  EXPECT_THROW(table2_objective(1.0, 0.0), ConfigError);
  EXPECT_NO_THROW(table2_objective(10.0, 8.999));
}

// The published table is monotone and normalized everywhere in its legal
// range but only submodular at eps = 1: f(s2 | {s3}) = 1 must not exceed
// f({s2}) = eps, and f(s2 | {s1,s3}) = eps must not exceed f(s2 | {s3}) = 1.
TEST(CounterexampleTest, ValidationOverLegalRange) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const double n = std::uniform_real_distribution<double>(1.5, 50.0)(rng);
    const double eps = std::uniform_real_distribution<double>(0.0, n - 1.0)(rng);
    const TabularCheck check = table2_objective(n, eps).check();
    EXPECT_TRUE(check.normalized);
    EXPECT_TRUE(check.monotone);
    EXPECT_EQ(check.submodular, std::abs(eps - 1.0) <= 1e-9) << "n=" << n << " eps=" << eps;
  }
  EXPECT_TRUE(table2_objective(10.0, 1.0).check().ok());
  EXPECT_FALSE(table2_objective(10.0, 0.5).check().submodular);
}

TEST(TabularObjectiveTest, StrictConstructorRejectsViolations) {
  EXPECT_THROW(TabularObjective(1, {1.0, 2.0}), ConfigError);              // f({}) != 0
  EXPECT_THROW(TabularObjective(2, {0.0, 2.0, 1.0, 1.5}), ConfigError);    // not monotone
  EXPECT_THROW(TabularObjective(2, {0.0, 1.0, 1.0, 3.0}), ConfigError);    // supermodular
  EXPECT_THROW(TabularObjective(2, {0.0, 1.0, 1.0}), ConfigError);         // wrong size
  EXPECT_THROW(TabularObjective(1, {0.0, -1.0}), ConfigError);             // negative
  EXPECT_NO_THROW(TabularObjective(2, {0.0, 1.0, 1.0, 1.5}));
}

TEST(TabularObjectiveTest, TabulateReproducesOracle) {
  const ModularObjective modular({1.0, 2.0, 4.0});
  const TabularObjective table = tabulate(modular);
  for (std::uint32_t mask = 0; mask < 8; ++mask) EXPECT_EQ(table.table()[mask], mask);
  EXPECT_TRUE(table.check().ok());
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (ElementId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges, false);
}

TEST(DomSetTest, StarExamples) {
  const Graph g = star_graph(4);
  EXPECT_EQ(domset_value(g, ElementSet(5, {0})), 5.0);
  EXPECT_EQ(domset_value(g, ElementSet(5, {1, 2})), 3.0);
  EXPECT_EQ(domset_value(g, ElementSet(5)), 0.0);
  const DomSetObjective f(g);
  EXPECT_EQ(f.evaluate(ElementSet(5, {1, 2})), 3.0);
  EXPECT_EQ(f.marginal_gain(0, ElementSet(5, {1, 2})), 2.0);
}

TEST(DomSetTest, OutOfRange) {
  EXPECT_THROW(domset_value(star_graph(2), ElementSet(4, {3})), DomainError);
  const std::vector<Edge> bad = {{0, 7}};
  EXPECT_THROW(Graph(3, bad, false), DomainError);
}

TEST(DomSetTest, DirectedUsesOutNeighbors) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  const Graph g(3, edges, true);
  EXPECT_EQ(domset_value(g, ElementSet(3, {0})), 2.0);
  EXPECT_EQ(domset_value(g, ElementSet(3, {2})), 1.0);
}

TEST(DomSetTest, SelfLoopsAndDuplicatesCollapse) {
  const std::vector<Edge> edges = {{0, 0}, {0, 1}, {1, 0}, {0, 1}};
  const Graph g(2, edges, false);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.neighbors(0).size(), 1u);
  EXPECT_EQ(domset_value(g, ElementSet(2, {0})), 2.0);
}

TEST(DomSetTest, IntegerValuedAndBoundedByN) {
  std::mt19937_64 rng(9);
  std::bernoulli_distribution coin(0.1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 30;
    std::vector<Edge> edges;
    for (ElementId u = 0; u < n; ++u) {
      for (ElementId v = 0; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    const Graph g(n, edges, trial % 2 == 0);
    for (std::size_t size = 0; size <= n; size += 5) {
      const double v = domset_value(g, testing::random_subset(n, size, rng));
      EXPECT_LE(v, static_cast<double>(n));
      EXPECT_EQ(v, std::floor(v));
    }
  }
}

VectorDataset two_points() {
  VectorDataset d{Eigen::MatrixXd(2, 2)};
  d.points << 1, 0, -1, 0;
  return d;
}

TEST(ExemplarTest, HandEvaluatedExamples) {
  const VectorDataset d = two_points();
  EXPECT_EQ(exemplar_value(d, {}, ElementSet(2)), 0.0);
  // L({e0}) = 1, L({(1,0), e0}) = (0 + 1) / 2.
  EXPECT_DOUBLE_EQ(exemplar_value(d, {}, ElementSet(2, {0})), 0.5);
  EXPECT_DOUBLE_EQ(exemplar_value(d, {}, ElementSet(2, {0, 1})), 1.0);
  EXPECT_DOUBLE_EQ(ExemplarObjective(d).reference_loss(), 1.0);
}

TEST(ExemplarTest, Errors) {
  EXPECT_THROW(ExemplarObjective(VectorDataset{Eigen::MatrixXd(0, 3)}), DomainError);
  ExemplarConfig bad_ref;
  bad_ref.reference = Eigen::VectorXd::Zero(3);
  EXPECT_THROW(ExemplarObjective(two_points(), bad_ref), ConfigError);
  ExemplarConfig dup;
  dup.subsample_ids = {1, 1};
  EXPECT_THROW(ExemplarObjective(two_points(), dup), ConfigError);
  ExemplarConfig out_of_range;
  out_of_range.subsample_ids = {2};
  EXPECT_THROW(ExemplarObjective(two_points(), out_of_range), ConfigError);
}

// Direct evaluation of the k-medoid loss difference with plain loops.
double direct_exemplar(const Eigen::MatrixXd& x, const std::vector<ElementId>& eval,
                       const Eigen::VectorXd& e0, const ElementSet& s) {
  auto d2 = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) total += (a[j] - b[j]) * (a[j] - b[j]);
    return total;
  };
  double base = 0.0, with_s = 0.0;
  for (ElementId v : eval) {
    const Eigen::VectorXd xv = x.row(v).transpose();
    const double ref = d2(e0, xv);
    double best = ref;
    for (ElementId e : s) best = std::min(best, d2(x.row(e).transpose(), xv));
    base += ref;
    with_s += best;
  }
  return (base - with_s) / static_cast<double>(eval.size());
}

TEST(ExemplarTest, MatchesDirectEvaluationAndIsMonotone) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 6 + static_cast<std::size_t>(trial % 7);
    VectorDataset d{Eigen::MatrixXd(static_cast<Eigen::Index>(n), 4)};
    for (Eigen::Index i = 0; i < d.points.rows(); ++i) {
      for (Eigen::Index j = 0; j < 4; ++j) d.points(i, j) = gauss(rng);
    }
    ExemplarConfig cfg;
    cfg.reference = Eigen::VectorXd::Constant(4, 0.25);
    std::vector<ElementId> all(n);
    std::iota(all.begin(), all.end(), ElementId{0});
    const ExemplarObjective f(d, cfg);

    std::vector<double> value(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < value.size(); ++mask) {
      ElementSet s(n);
      for (ElementId e = 0; e < n; ++e) {
        if ((mask >> e) & 1u) s.insert(e);
      }
      value[mask] = f.evaluate(s);
      EXPECT_NEAR(value[mask], direct_exemplar(d.points, all, *cfg.reference, s), 1e-9);
    }
    for (std::uint32_t mask = 0; mask < value.size(); ++mask) {
      for (std::size_t e = 0; e < n; ++e) {
        EXPECT_LE(value[mask], value[mask | (1u << e)]);
      }
    }
  }
}

TEST(ExemplarTest, FullSubsampleEqualsUnsubsampled) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss;
  VectorDataset d{Eigen::MatrixXd(20, 5)};
  for (Eigen::Index i = 0; i < 20; ++i) {
    for (Eigen::Index j = 0; j < 5; ++j) d.points(i, j) = gauss(rng);
  }
  ExemplarConfig full;
  full.subsample_ids.resize(20);
  std::iota(full.subsample_ids.begin(), full.subsample_ids.end(), ElementId{0});
  const ExemplarObjective plain(d), subsampled(d, full);
  ExemplarConfig uncached;
  uncached.cache_distances = false;
  const ExemplarObjective no_cache(d, uncached);
  for (int trial = 0; trial < 50; ++trial) {
    const ElementSet s = testing::random_subset(20, static_cast<std::size_t>(trial % 20), rng);
    EXPECT_EQ(plain.evaluate(s), subsampled.evaluate(s));
    EXPECT_EQ(plain.evaluate(s), no_cache.evaluate(s));
    EXPECT_EQ(plain.marginal_gain(7, s), no_cache.marginal_gain(7, s));
  }
}

TEST(ExemplarTest, SubsampleAveragesOverSubsetOnly) {
  VectorDataset d{Eigen::MatrixXd(3, 1)};
  d.points << 1, 2, 10;
  ExemplarConfig cfg;
  cfg.subsample_ids = {0, 1};
  const ExemplarObjective f(d, cfg);
  EXPECT_DOUBLE_EQ(f.reference_loss(), (1.0 + 4.0) / 2.0);
  // Picking item 1 (x=2): distances to {1,2} become {1,0} vs reference {1,4}.
  EXPECT_DOUBLE_EQ(f.evaluate(ElementSet(3, {1})), 2.0);
}

}  // namespace
}  // namespace robsub
