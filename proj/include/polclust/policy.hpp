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

#ifndef POLCLUST_POLICY_HPP_
#define POLCLUST_POLICY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "polclust/env.hpp"
#include "polclust/state.hpp"

namespace polclust {

class ChainEnv;
class GridConeEnv;

// Black-box policy. Any randomness must come from `seed`, so a given
// (state, seed) pair always yields the same action.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual ActionId act(const EncodedState& state, std::uint64_t seed) const = 0;
};

class UnknownStateError : public std::out_of_range {
 public:
  explicit UnknownStateError(const EncodedState& s)
      : std::out_of_range("policy has no action for state '" + s.token() +
                          "' (encoder/policy mismatch?)") {}
};

// Lookup table from state token to action index. Serialized as a JSON object
// {"<token>": <action index>, ...}.
class TabularPolicy final : public Policy {
 public:
  TabularPolicy() = default;
  explicit TabularPolicy(std::unordered_map<EncodedState, ActionId> table)
      : table_(std::move(table)) {}

  ActionId act(const EncodedState& state, std::uint64_t seed) const override;

  void set(const EncodedState& state, ActionId action) { table_[state] = action; }
  bool contains(const EncodedState& state) const { return table_.count(state) > 0; }
  std::size_t size() const { return table_.size(); }

  nlohmann::json to_json() const;
  static TabularPolicy from_json(const nlohmann::json& j, std::size_t action_count);

 private:
  std::unordered_map<EncodedState, ActionId> table_;
};

class UniformRandomPolicy final : public Policy {
 public:
  explicit UniformRandomPolicy(std::size_t action_count);
  ActionId act(const EncodedState& state, std::uint64_t seed) const override;

 private:
  std::size_t action_count_;
};

// Plays 0 everywhere except the key action on critical positions.
TabularPolicy chain_scripted_policy(const ChainEnv& env);
// Shortest-path policy from breadth-first search over (cell, heading) with
// ties resolved toward the lowest action index.
TabularPolicy gridcone_bfs_policy(const GridConeEnv& env);

// Resolves a policy reference: a built-in name ("scripted" for chain, "bfs"
// for gridcone, "random" for any environment) or a path to a JSON table.
std::unique_ptr<Policy> load_policy(const std::string& ref, const Environment& env);

inline ActionId policy_action(const Policy& policy, const EncodedState& state,
                              std::uint64_t seed) {
  return policy.act(state, seed);
}

// The mutation substitute: repeat the previous action, or `initial_action`
// before the first step.
inline ActionId default_action(std::optional<ActionId> prev_action,
                               ActionId initial_action) {
  return prev_action.value_or(initial_action);
}

// Acts like `base` on `restored` states and takes the default action
// everywhere else.
class PrunedPolicy {
 public:
  PrunedPolicy(const Policy& base, const StateSet& restored,
               ActionId initial_action);

  bool is_restored(const EncodedState& s) const { return restored_.count(s) > 0; }
  ActionId initial_action() const { return initial_action_; }
  const Policy& base() const { return *base_; }

 private:
  const Policy* base_;
  std::unordered_set<EncodedState> restored_;
  ActionId initial_action_;
};

ActionId pruned_action(const PrunedPolicy& pruned, const EncodedState& state,
                       std::optional<ActionId> prev_action, std::uint64_t seed);

// Per-step seed handed to the policy.
inline std::uint64_t step_seed(std::uint64_t episode_seed, std::size_t step) {
  return derive_seed(episode_seed, step);
}

struct ActionChoice {
  ActionId action;
  bool from_policy = false;
};

struct EpisodeResult {
  double total_reward = 0.0;
  std::size_t steps = 0;
  std::size_t policy_steps = 0;
};

// Runs one episode. `choose(state, prev_action, step_seed)` returns the
// action to take; `on_step(state, choice, outcome)` observes each step.
template <class Choose, class Observe>
EpisodeResult run_episode(Environment& env, std::uint64_t episode_seed,
                          Choose&& choose, Observe&& on_step) {
  EpisodeResult result;
  EncodedState state = env.reset(episode_seed);
  std::optional<ActionId> prev;
  while (!env.done()) {
    const ActionChoice choice = choose(state, prev, step_seed(episode_seed, result.steps));
    StepOutcome outcome = env.step(choice.action);
    on_step(state, choice, outcome);
    result.total_reward += outcome.reward;
    ++result.steps;
    if (choice.from_policy) ++result.policy_steps;
    prev = choice.action;
    state = std::move(outcome.next_state);
  }
  return result;
}

template <class Choose>
EpisodeResult run_episode(Environment& env, std::uint64_t episode_seed,
                          Choose&& choose) {
  return run_episode(env, episode_seed, std::forward<Choose>(choose),
                     [](const EncodedState&, const ActionChoice&, const StepOutcome&) {});
}

// Episode under the pruned policy.
EpisodeResult run_pruned_episode(Environment& env, const PrunedPolicy& pruned,
                                 std::uint64_t episode_seed);

}  // namespace polclust

#endif  // POLCLUST_POLICY_HPP_
