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

#include "polclust/evaluation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polclust {

Evaluation evaluate_restored(const RolloutContext& ctx, const StateSet& restored) {
  if (ctx.episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  const PrunedPolicy pruned(ctx.policy, restored, ctx.env.initial_action());
  std::vector<double> rewards;
  double fraction = 0.0;
  for (int e = 0; e < ctx.episodes; ++e) {
    const EpisodeResult ep =
        run_pruned_episode(ctx.env, pruned, derive_seed(ctx.seed, static_cast<std::uint64_t>(e)));
    rewards.push_back(ep.total_reward);
    if (ep.steps > 0) {
      fraction += static_cast<double>(ep.policy_steps) / static_cast<double>(ep.steps);
    }
  }
  const double n = ctx.episodes;
  Evaluation out;
  out.mean_reward = mean_reward_of(rewards);
  out.fraction_policy_actions = fraction / n;
  if (ctx.episodes > 1) {
    double ss = 0.0;
    for (double r : rewards) ss += (r - out.mean_reward) * (r - out.mean_reward);
    const double var = ss / (n - 1);
    out.std_error = std::sqrt(var / n);
  }
  return out;
}

}  // namespace polclust
