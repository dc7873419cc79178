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

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "robsub/oracle.hpp"

namespace robsub {

/// n items as the rows of a dense n x dim matrix.
struct VectorDataset {
  Eigen::MatrixXd points;

  std::size_t size() const noexcept { return static_cast<std::size_t>(points.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(points.cols()); }
};

struct ExemplarConfig {
  /// Reference element e0; the zero vector when unset.
  std::optional<Eigen::VectorXd> reference;
  /// Items over which the loss is averaged; all items when empty.
  std::vector<ElementId> subsample_ids;
  /// Cache per-element distance rows to the evaluation items.
  bool cache_distances = true;
};

/// Exemplar-based clustering objective
///
///   f(S) = L({e0}) - L(S + {e0}),  L(A) = mean_{v in V'} min_{s in A} |s - v|^2,
///
/// where V' is the configured subsample. Normalized, monotone and submodular.
class ExemplarObjective final : public SubmodularOracle {
 public:
  ExemplarObjective(VectorDataset dataset, ExemplarConfig config = {});

  std::size_t ground_size() const noexcept override { return dataset_.size(); }
  const VectorDataset& dataset() const noexcept { return dataset_; }
  std::size_t evaluation_count() const noexcept {
    return static_cast<std::size_t>(eval_points_.rows());
  }
  /// L({e0}).
  double reference_loss() const noexcept { return reference_loss_; }

 protected:
  double value(const ElementSet& s) const override;
  double gain(ElementId e, const ElementSet& s) const override;

 private:
  /// Squared distances from item e to every evaluation item.
  Eigen::VectorXd distances(ElementId e) const;
  const Eigen::VectorXd& cached_distances(ElementId e) const;
  Eigen::VectorXd nearest(const ElementSet& s) const;

  VectorDataset dataset_;
  Eigen::MatrixXd eval_points_;
  Eigen::VectorXd reference_distances_;
  double reference_loss_ = 0.0;
  bool cache_ = true;

  mutable std::vector<std::once_flag> cache_once_;
  mutable std::vector<Eigen::VectorXd> cache_rows_;
};

/// One-shot evaluation of the exemplar objective.
double exemplar_value(const VectorDataset& dataset, const ExemplarConfig& config,
                      const ElementSet& s);

}  // namespace robsub
