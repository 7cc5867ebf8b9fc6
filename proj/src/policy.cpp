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

#include "polclust/policy.hpp"

#include <deque>
#include <fstream>
#include <random>

#include "polclust/chain_env.hpp"
#include "polclust/gridcone_env.hpp"

namespace polclust {

ActionId TabularPolicy::act(const EncodedState& state, std::uint64_t) const {
  auto it = table_.find(state);
  if (it == table_.end()) throw UnknownStateError(state);
  return it->second;
}

nlohmann::json TabularPolicy::to_json() const {
  // nlohmann::json objects keep keys sorted, so the dump is stable.
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, a] : table_) j[s.token()] = a.index;
  return j;
}

TabularPolicy TabularPolicy::from_json(const nlohmann::json& j,
                                       std::size_t action_count) {
  if (!j.is_object()) {
    throw std::invalid_argument("tabular policy must be a JSON object");
  }
  TabularPolicy p;
  for (const auto& [token, action] : j.items()) {
    const auto index = action.get<std::size_t>();
    if (index >= action_count) {
      throw std::invalid_argument("tabular policy: action " +
                                  std::to_string(index) + " out of range for '" +
                                  token + "'");
    }
    p.set(EncodedState(token), ActionId{index});
  }
  return p;
}

UniformRandomPolicy::UniformRandomPolicy(std::size_t action_count)
    : action_count_(action_count) {
  if (action_count_ == 0) throw std::invalid_argument("no actions");
}

ActionId UniformRandomPolicy::act(const EncodedState& state,
                                  std::uint64_t seed) const {
  std::mt19937_64 rng(derive_seed(seed, std::hash<EncodedState>{}(state)));
  return ActionId{static_cast<std::size_t>(rng() % action_count_)};
}

TabularPolicy chain_scripted_policy(const ChainEnv& env) {
  TabularPolicy p;
  for (int i = 0; i < env.length(); ++i) {
    p.set(ChainEnv::encode(i), env.is_critical(i) ? env.key_action(i) : ActionId{0});
  }
  return p;
}

TabularPolicy gridcone_bfs_policy(const GridConeEnv& env) {
  // Backward BFS over poses: distance to the goal in steps.
  const int n = env.size();
  auto pose_index = [n](Cell c, int h) { return (c.y * n + c.x) * 4 + h; };
  std::vector<int> dist(static_cast<std::size_t>(n * n * 4), -1);
  std::deque<std::pair<Cell, int>> frontier;

  // Stepping forward into the goal finishes, so the "last" poses are those
  // facing the goal from an adjacent open cell.
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      Cell c{x, y};
      if (env.blocked(c) || c == env.goal()) continue;
      for (int h = 0; h < 4; ++h) {
        if (GridConeEnv::ahead(c, static_cast<Heading>(h)) == env.goal()) {
          dist[static_cast<std::size_t>(pose_index(c, h))] = 1;
          frontier.emplace_back(c, h);
        }
      }
    }
  }
  while (!frontier.empty()) {
    auto [c, h] = frontier.front();
    frontier.pop_front();
    const int d = dist[static_cast<std::size_t>(pose_index(c, h))];
    // Predecessors: a turn into heading h, or a forward move into c.
    std::vector<std::pair<Cell, int>> preds = {{c, (h + 1) % 4}, {c, (h + 3) % 4}};
    Cell behind = GridConeEnv::ahead(c, static_cast<Heading>((h + 2) % 4));
    if (!env.blocked(behind) && behind != env.goal()) preds.emplace_back(behind, h);
    for (auto [pc, ph] : preds) {
      auto idx = static_cast<std::size_t>(pose_index(pc, ph));
      if (dist[idx] < 0) {
        dist[idx] = d + 1;
        frontier.emplace_back(pc, ph);
      }
    }
  }

  TabularPolicy p;
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      Cell c{x, y};
      if (env.blocked(c) || c == env.goal()) continue;
      for (int h = 0; h < 4; ++h) {
        const auto heading = static_cast<Heading>(h);
        std::size_t best = GridConeEnv::kTurnLeft;
        int best_dist = -1;
        for (std::size_t a = 0; a < GridConeEnv::kActionCount; ++a) {
          int d;
          if (a == GridConeEnv::kForward) {
            Cell next = GridConeEnv::ahead(c, heading);
            if (next == env.goal()) {
              d = 0;
            } else if (env.blocked(next)) {
              continue;
            } else {
              d = dist[static_cast<std::size_t>(pose_index(next, h))];
            }
          } else {
            d = dist[static_cast<std::size_t>(
                pose_index(c, static_cast<int>(GridConeEnv::turned(heading, a))))];
          }
          if (d < 0) continue;
          if (best_dist < 0 || d < best_dist) {
            best_dist = d;
            best = a;
          }
        }
        p.set(GridConeEnv::encode(env.observe_from(c, heading)), ActionId{best});
      }
    }
  }
  return p;
}

std::unique_ptr<Policy> load_policy(const std::string& ref, const Environment& env) {
  if (ref == "random") {
    return std::make_unique<UniformRandomPolicy>(env.action_count());
  }
  if (ref == "scripted") {
    const auto* chain = dynamic_cast<const ChainEnv*>(&env);
    if (chain == nullptr) {
      throw std::invalid_argument("policy 'scripted' requires the chain environment");
    }
    return std::make_unique<TabularPolicy>(chain_scripted_policy(*chain));
  }
  if (ref == "bfs") {
    const auto* grid = dynamic_cast<const GridConeEnv*>(&env);
    if (grid == nullptr) {
      throw std::invalid_argument("policy 'bfs' requires the gridcone environment");
    }
    return std::make_unique<TabularPolicy>(gridcone_bfs_policy(*grid));
  }
  std::ifstream in(ref);
  if (!in) throw std::invalid_argument("cannot open policy file '" + ref + "'");
  return std::make_unique<TabularPolicy>(
      TabularPolicy::from_json(nlohmann::json::parse(in), env.action_count()));
}

PrunedPolicy::PrunedPolicy(const Policy& base, const StateSet& restored,
                           ActionId initial_action)
    : base_(&base),
      restored_(restored.begin(), restored.end()),
      initial_action_(initial_action) {}

ActionId pruned_action(const PrunedPolicy& pruned, const EncodedState& state,
                       std::optional<ActionId> prev_action, std::uint64_t seed) {
  if (pruned.is_restored(state)) return pruned.base().act(state, seed);
  return default_action(prev_action, pruned.initial_action());
}

EpisodeResult run_pruned_episode(Environment& env, const PrunedPolicy& pruned,
                                 std::uint64_t episode_seed) {
  return run_episode(env, episode_seed,
                     [&](const EncodedState& s, std::optional<ActionId> prev,
                         std::uint64_t seed) {
                       const bool restored = pruned.is_restored(s);
                       return ActionChoice{pruned_action(pruned, s, prev, seed),
                                           restored};
                     });
}

}  // namespace polclust
