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

#ifndef POLCLUST_EVALUATION_HPP_
#define POLCLUST_EVALUATION_HPP_

#include <cstdint>

#include "polclust/env.hpp"
#include "polclust/policy.hpp"

namespace polclust {

// Environment, policy and rollout settings shared by every pruned-policy
// evaluation of one experiment. Episode e of any evaluation uses seed
// derive_seed(seed, e), so two restored sets are always compared on the
// same episode seeds.
struct RolloutContext {
  Environment& env;
  const Policy& policy;
  int episodes = 30;
  std::uint64_t seed = 0;
};

struct Evaluation {
  double mean_reward = 0.0;
  // Mean over episodes of (policy steps / total steps).
  double fraction_policy_actions = 0.0;
  double std_error = 0.0;  // standard error of the mean reward
};

Evaluation evaluate_restored(const RolloutContext& ctx, const StateSet& restored);

}  // namespace polclust

#endif  // POLCLUST_EVALUATION_HPP_
