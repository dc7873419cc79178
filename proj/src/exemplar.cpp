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

#include "robsub/exemplar.hpp"

#include <string>

namespace robsub {

ExemplarObjective::ExemplarObjective(VectorDataset dataset, ExemplarConfig config)
    : dataset_(std::move(dataset)), cache_(config.cache_distances) {
  const Eigen::Index n = dataset_.points.rows();
  const Eigen::Index dim = dataset_.points.cols();
  if (n == 0) throw DomainError("exemplar objective needs a non-empty dataset");

  Eigen::VectorXd reference = Eigen::VectorXd::Zero(dim);
  if (config.reference) {
    if (config.reference->size() != dim) {
      throw ConfigError("reference element has dimension " +
                        std::to_string(config.reference->size()) + ", dataset has " +
                        std::to_string(dim));
    }
    reference = *config.reference;
  }

  if (config.subsample_ids.empty()) {
    eval_points_ = dataset_.points;
  } else {
    ElementSet seen(static_cast<std::size_t>(n));
    eval_points_.resize(static_cast<Eigen::Index>(config.subsample_ids.size()), dim);
    for (std::size_t j = 0; j < config.subsample_ids.size(); ++j) {
      const ElementId id = config.subsample_ids[j];
      if (id >= static_cast<std::size_t>(n)) {
        throw ConfigError("subsample id " + std::to_string(id) + " out of range");
      }
      if (seen.contains(id)) throw ConfigError("duplicate subsample id " + std::to_string(id));
      seen.insert(id);
      eval_points_.row(static_cast<Eigen::Index>(j)) = dataset_.points.row(id);
    }
  }

  reference_distances_ = (eval_points_.rowwise() - reference.transpose()).rowwise().squaredNorm();
  reference_loss_ = reference_distances_.mean();

  if (cache_) {
    cache_once_ = std::vector<std::once_flag>(static_cast<std::size_t>(n));
    cache_rows_.resize(static_cast<std::size_t>(n));
  }
}

Eigen::VectorXd ExemplarObjective::distances(ElementId e) const {
  return (eval_points_.rowwise() - dataset_.points.row(e)).rowwise().squaredNorm();
}

const Eigen::VectorXd& ExemplarObjective::cached_distances(ElementId e) const {
  std::call_once(cache_once_[e], [&] { cache_rows_[e] = distances(e); });
  return cache_rows_[e];
}

Eigen::VectorXd ExemplarObjective::nearest(const ElementSet& s) const {
  Eigen::VectorXd best = reference_distances_;
  for (ElementId e : s) {
    if (cache_) {
      best = best.cwiseMin(cached_distances(e));
    } else {
      best = best.cwiseMin(distances(e));
    }
  }
  return best;
}

double ExemplarObjective::value(const ElementSet& s) const {
  return reference_loss_ - nearest(s).mean();
}

double ExemplarObjective::gain(ElementId e, const ElementSet& s) const {
  const Eigen::VectorXd best = nearest(s);
  const Eigen::VectorXd with_e = cache_ ? best.cwiseMin(cached_distances(e))
                                        : best.cwiseMin(distances(e));
  return best.mean() - with_e.mean();
}

double exemplar_value(const VectorDataset& dataset, const ExemplarConfig& config,
                      const ElementSet& s) {
  ExemplarConfig uncached = config;
  uncached.cache_distances = false;
  return ExemplarObjective(dataset, uncached).evaluate(s);
}

}  // namespace robsub
