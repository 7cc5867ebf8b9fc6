// Copyright 2026 The polclust Authors. All rights reserved.
//
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

#ifndef POLCLUST_HARNESS_HPP_
#define POLCLUST_HARNESS_HPP_

#include <span>
#include <string>
#include <vector>

#include "polclust/evaluation.hpp"
#include "polclust/extractor.hpp"
#include "polclust/rankers.hpp"

namespace polclust {

struct CurvePoint {
  std::size_t k = 0;
  double fraction_states_restored = 0.0;
  double fraction_policy_actions = 0.0;
  double mean_reward = 0.0;
  double pct_of_original = 0.0;  // mean_reward / baseline
  double std_error = 0.0;
};

// Restoration curve. Points have strictly increasing restored fraction and
// the first point restores nothing.
struct Curve {
  std::string method;
  std::vector<CurvePoint> points;
};

// Point k restores the union of the top-k clusters, k = 0..#clusters. A
// cluster that adds no new state produces no point.
Curve curve_for_clusters(const std::string& method,
                         const std::vector<RankedCluster>& ranked,
                         std::size_t state_count, double baseline_reward,
                         const RolloutContext& ctx);

// Point k restores the top k * increment states until all are restored.
Curve curve_for_state_ranking(const std::string& method, const StateRanking& ranking,
                              std::size_t increment, double baseline_reward,
                              const RolloutContext& ctx);

// Trapezoid area under pct_of_original over fraction_states_restored in
// [0, 1]. A curve that stops short of full restoration is held flat at its
// last value up to 1.
double restoration_auc(const Curve& curve);

// Spearman rank correlation with average ranks for ties; 0 when either
// input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

struct SubsetResult {
  StateSet states;
  double mean_reward = 0.0;
  std::size_t evaluated = 0;
};

// Exhaustive search over every k-subset of the environment's states used as
// the restored set. Ties keep the lexicographically first subset in token
// order. Throws when C(|S|, k) exceeds `max_combinations`.
SubsetResult brute_force_best_subset(const RolloutContext& ctx, std::size_t k,
                                     double max_combinations = 2e6);

}  // namespace polclust

#endif  // POLCLUST_HARNESS_HPP_
