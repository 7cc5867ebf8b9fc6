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

#ifndef POLCLUST_SAMPLER_HPP_
#define POLCLUST_SAMPLER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polclust/env.hpp"
#include "polclust/policy.hpp"
#include "polclust/state.hpp"

namespace polclust {

// S_M (mutated) and S_N (normal) for one sampled run. Assigned lazily: a
// state joins one of the two sets the first time the run meets it.
struct MutationPartition {
  StateSet mutated;
  StateSet normal;
};

enum class SuiteSign { kPlus, kMinus };

std::string to_string(SuiteSign sign);
SuiteSign suite_sign_from_string(const std::string& s);

struct SampleConfig {
  double mu = 0.8;  // interpreted as mu+ by build_suite
  int trials = 5;
  int suite_size = 500;
  std::uint64_t master_seed = 0;
};

struct RunRecord {
  StateSet states;
  double average_reward = 0.0;
  bool succeeded = false;
};

struct RunTrace {
  MutationPartition partition;
  double average_reward = 0.0;
};

struct Suite {
  SuiteSign sign = SuiteSign::kPlus;
  std::vector<RunRecord> records;
  SampleConfig config;
  double baseline_reward = 0.0;
  // Rate actually used for this suite's runs (mu+ or 1 - mu+).
  double run_mu = 0.0;
  std::size_t attempts = 0;

  double acceptance_rate() const {
    return attempts == 0 ? 0.0 : static_cast<double>(records.size()) / attempts;
  }
};

class SuiteBudgetError : public std::runtime_error {
 public:
  SuiteBudgetError(std::size_t retained, std::size_t wanted, std::size_t attempts);
  std::size_t retained() const { return retained_; }

 private:
  std::size_t retained_;
};

// One run of the sample-trajectory procedure: `trials` episodes sharing one
// lazily built partition. Each newly met state is mutated with probability
// `mu`; mutated states take the default action, normal states the policy's.
RunTrace sample_partition(Environment& env, const Policy& policy, double mu,
                          int trials, std::uint64_t seed, ActionId initial_action);

// Returns S_M when mu < 0.5 and S_N otherwise, with the mean episode
// reward. `succeeded` is left false; build_suite classifies runs.
RunRecord sample_run(Environment& env, const Policy& policy, double mu, int trials,
                     std::uint64_t seed, ActionId initial_action);

// average_reward >= rho * baseline_reward (inclusive).
bool is_success(double average_reward, double baseline_reward, double rho);

// Mean undiscounted reward of the unmodified policy.
double mean_policy_reward(Environment& env, const Policy& policy, int episodes,
                          std::uint64_t seed);

struct SuiteOptions {
  double retry_factor = 50.0;    // attempt budget = retry_factor * N
  int baseline_episodes = 30;    // at least 30
  // When set, used instead of recomputing the baseline.
  std::optional<double> baseline_reward;
  // Sees every attempted run, retained or not, with its success flag.
  std::function<void(const RunTrace&, bool succeeded)> on_attempt;
};

// Samples runs until `config.suite_size` records qualify. "+" keeps the S_N
// of successful runs at rate mu+; "-" keeps the S_M of runs at or below
// rho_failure * baseline at rate 1 - mu+. Run k uses a seed derived from
// (master_seed, sign, k).
Suite build_suite(Environment& env, const Policy& policy, SuiteSign sign,
                  const SampleConfig& config, double rho_success,
                  double rho_failure, const SuiteOptions& options = {});

}  // namespace polclust

#endif  // POLCLUST_SAMPLER_HPP_
