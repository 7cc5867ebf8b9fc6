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

#include "polclust/sampler.hpp"

#include <cmath>
#include <random>
#include <unordered_map>
#include <vector>

namespace polclust {
namespace {

constexpr std::uint64_t kPlusStream = 0x2b;
constexpr std::uint64_t kMinusStream = 0x2d;
constexpr std::uint64_t kBaselineStream = 0xba5e;

}  // namespace

std::string to_string(SuiteSign sign) {
  return sign == SuiteSign::kPlus ? "+" : "-";
}

SuiteSign suite_sign_from_string(const std::string& s) {
  if (s == "+") return SuiteSign::kPlus;
  if (s == "-") return SuiteSign::kMinus;
  throw std::invalid_argument("suite sign must be '+' or '-', got '" + s + "'");
}

SuiteBudgetError::SuiteBudgetError(std::size_t retained, std::size_t wanted,
                                   std::size_t attempts)
    : std::runtime_error("suite retry budget exhausted after " +
                         std::to_string(attempts) + " attempts: retained " +
                         std::to_string(retained) + " of " + std::to_string(wanted) +
                         " records (check mu and rho)"),
      retained_(retained) {}

RunTrace sample_partition(Environment& env, const Policy& policy, double mu,
                          int trials, std::uint64_t seed, ActionId initial_action) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw std::invalid_argument("mu must be in [0, 1]");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  std::mt19937_64 rng(seed);
  std::unordered_map<EncodedState, bool> mutated;  // assignment per state
  std::vector<double> rewards;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t episode_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    const EpisodeResult ep = run_episode(
        env, episode_seed,
        [&](const EncodedState& s, std::optional<ActionId> prev, std::uint64_t step) {
          auto it = mutated.find(s);
          if (it == mutated.end()) {
            it = mutated.emplace(s, unit_interval(rng()) < mu).first;
          }
          if (it->second) return ActionChoice{default_action(prev, initial_action), false};
          return ActionChoice{policy.act(s, step), true};
        });
    rewards.push_back(ep.total_reward);
  }

  RunTrace trace;
  for (const auto& [s, m] : mutated) {
    (m ? trace.partition.mutated : trace.partition.normal).insert(s);
  }
  trace.average_reward = mean_reward_of(rewards);
  return trace;
}

RunRecord sample_run(Environment& env, const Policy& policy, double mu, int trials,
                     std::uint64_t seed, ActionId initial_action) {
  RunTrace trace = sample_partition(env, policy, mu, trials, seed, initial_action);
  RunRecord r;
  r.states = mu < 0.5 ? std::move(trace.partition.mutated)
                      : std::move(trace.partition.normal);
  r.average_reward = trace.average_reward;
  return r;
}

bool is_success(double average_reward, double baseline_reward, double rho) {
  if (!(baseline_reward > 0.0)) {
    throw std::invalid_argument(
        "baseline reward must be positive for ratio success thresholds");
  }
  return average_reward >= rho * baseline_reward;
}

double mean_policy_reward(Environment& env, const Policy& policy, int episodes,
                          std::uint64_t seed) {
  if (episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  std::vector<double> rewards;
  for (int e = 0; e < episodes; ++e) {
    rewards.push_back(run_episode(env, derive_seed(seed, static_cast<std::uint64_t>(e)),
                         [&](const EncodedState& s, std::optional<ActionId>,
                             std::uint64_t step) {
                           return ActionChoice{policy.act(s, step), true};
                         })
                          .total_reward);
  }
  return mean_reward_of(rewards);
}

Suite build_suite(Environment& env, const Policy& policy, SuiteSign sign,
                  const SampleConfig& config, double rho_success,
                  double rho_failure, const SuiteOptions& options) {
  if (!(config.mu > 0.5 && config.mu <= 1.0)) {
    throw std::invalid_argument("build_suite: mu+ must be in (0.5, 1]");
  }
  if (config.suite_size < 0) throw std::invalid_argument("suite_size must be >= 0");

  Suite suite;
  suite.sign = sign;
  suite.config = config;
  suite.run_mu = sign == SuiteSign::kPlus ? config.mu : 1.0 - config.mu;
  if (config.suite_size == 0) {
    suite.baseline_reward = options.baseline_reward.value_or(0.0);
    return suite;
  }

  suite.baseline_reward = options.baseline_reward.has_value()
      ? *options.baseline_reward
      : mean_policy_reward(env, policy, std::max(30, options.baseline_episodes),
                           derive_seed(config.master_seed, kBaselineStream));

  const auto wanted = static_cast<std::size_t>(config.suite_size);
  const auto budget =
      static_cast<std::size_t>(std::ceil(options.retry_factor * config.suite_size));
  const std::uint64_t stream = derive_seed(
      config.master_seed, sign == SuiteSign::kPlus ? kPlusStream : kMinusStream);
  const ActionId initial = env.initial_action();

  while (suite.records.size() < wanted) {
    if (suite.attempts >= budget) {
      throw SuiteBudgetError(suite.records.size(), wanted, suite.attempts);
    }
    const std::uint64_t run_seed = derive_seed(stream, suite.attempts);
    ++suite.attempts;
    RunTrace trace = sample_partition(env, policy, suite.run_mu, config.trials,
                                      run_seed, initial);
    const bool succeeded =
        is_success(trace.average_reward, suite.baseline_reward, rho_success);
    if (options.on_attempt) options.on_attempt(trace, succeeded);

    RunRecord record;
    record.average_reward = trace.average_reward;
    record.succeeded = succeeded;
    if (sign == SuiteSign::kPlus) {
      if (!succeeded) continue;
      record.states = std::move(trace.partition.normal);
    } else {
      if (succeeded || trace.average_reward > rho_failure * suite.baseline_reward) continue;
      record.states = std::move(trace.partition.mutated);
    }
    suite.records.push_back(std::move(record));
  }
  return suite;
}

}  // namespace polclust
