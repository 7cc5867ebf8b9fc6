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

#ifndef POLCLUST_ENV_HPP_
#define POLCLUST_ENV_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "polclust/state.hpp"

namespace polclust {

struct StepOutcome {
  EncodedState next_state;
  double reward = 0.0;
  bool done = false;
};

// Serialized as {"name", "action_count", "max_steps", "parameters"} plus an
// optional "initial_action" (the default action used before any action has
// been taken; index 0 when absent).
struct EnvSpec {
  std::string name;
  std::size_t action_count = 0;
  int max_steps = 1;
  nlohmann::json parameters = nlohmann::json::object();
  std::size_t initial_action = 0;

  nlohmann::json to_json() const;
  static EnvSpec from_json(const nlohmann::json& j);
};

class EpisodeFinishedError : public std::logic_error {
 public:
  EpisodeFinishedError()
      : std::logic_error("step() called on a finished episode; call reset()") {}
};

// Episodic MDP with encoded states. Rewards are accumulated undiscounted.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvSpec& spec() const = 0;
  virtual EncodedState reset(std::uint64_t seed) = 0;
  virtual StepOutcome step(ActionId action) = 0;
  virtual EncodedState current_state() const = 0;
  virtual bool done() const = 0;
  // Every state the agent can act in, sorted by token order.
  virtual std::vector<EncodedState> enumerate_states() const = 0;

  std::size_t action_count() const { return spec().action_count; }
  ActionId initial_action() const { return ActionId{spec().initial_action}; }
};

// Constructs an environment from its spec via the name registry
// ("chain", "gridcone").
std::unique_ptr<Environment> make_environment(const EnvSpec& spec);
std::vector<std::string> registered_environments();

// Mean of per-episode rewards, accumulated as offsets from the first value so
// that a constant sequence averages to exactly that constant.
inline double mean_reward_of(const std::vector<double>& rewards) {
  if (rewards.empty()) throw std::invalid_argument("mean of no rewards");
  double offset = 0.0;
  for (double r : rewards) offset += r - rewards.front();
  return rewards.front() + offset / static_cast<double>(rewards.size());
}

}  // namespace polclust

#endif  // POLCLUST_ENV_HPP_
