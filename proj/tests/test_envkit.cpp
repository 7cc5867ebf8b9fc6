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

#include <random>
#include <set>

#include "doctest.h"
#include "oracles/grid_bfs.hpp"
#include "polclust/chain_env.hpp"
#include "polclust/env.hpp"
#include "polclust/gridcone_env.hpp"
#include "support.hpp"

using namespace polclust;

namespace {

struct Trace {
  std::vector<std::string> states;
  std::vector<double> rewards;
  std::vector<bool> dones;
};

Trace random_trace(Environment& env, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Trace t;
  t.states.push_back(env.reset(seed).token());
  while (!env.done()) {
    const auto out = env.step(ActionId{rng() % env.action_count()});
    t.states.push_back(out.next_state.token());
    t.rewards.push_back(out.reward);
    t.dones.push_back(out.done);
  }
  return t;
}

}  // namespace

TEST_CASE("gridcone reset puts the agent at the start facing east") {
  GridConeEnv env(GridConeEnv::default_spec());
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    env.reset(seed);
    const auto obs = env.observe();
    CHECK(obs.position == Cell{0, 0});
    CHECK(obs.heading == Heading::kEast);
  }
}

TEST_CASE("chain reset starts at position 0 and is repeatable") {
  ChainEnv env = test::default_chain();
  CHECK(env.reset(0).token() == "0");
  CHECK(env.position() == 0);
  const auto a = env.reset(7);
  const auto b = env.reset(7);
  CHECK(a == b);
}

TEST_CASE("gridcone forward into a wall keeps the cell") {
  GridConeEnv env(GridConeEnv::default_spec());
  env.reset(0);
  // (1,0) facing east has the wall (2,0) directly ahead.
  env.step(ActionId{GridConeEnv::kForward});
  REQUIRE(env.observe().position == Cell{1, 0});
  const auto out = env.step(ActionId{GridConeEnv::kForward});
  CHECK(env.observe().position == Cell{1, 0});
  CHECK(out.reward == 0.0);
  CHECK_FALSE(out.done);
}

TEST_CASE("gridcone goal reward follows the shortest path length") {
  GridConeEnv env(GridConeEnv::default_spec());
  const int shortest = oracle::grid_distance({0, 0, 0});
  REQUIRE(shortest > 0);
  // Walk any action sequence that realizes the oracle's distance.
  env.reset(0);
  oracle::GridPose pose{0, 0, 0};
  double reward = 0.0;
  bool done = false;
  while (!done) {
    const int d = oracle::grid_distance(pose);
    int chosen = -1;
    for (int a = 0; a < 3 && chosen < 0; ++a) {
      const auto next = oracle::grid_apply(pose, a);
      const bool at_goal = next.x == 4 && next.y == 0;
      if (at_goal || oracle::grid_distance(next) == d - 1) chosen = a;
    }
    REQUIRE(chosen >= 0);
    pose = oracle::grid_apply(pose, chosen);
    const auto out = env.step(ActionId{static_cast<std::size_t>(chosen)});
    reward = out.reward;
    done = out.done;
  }
  CHECK(env.observe().position == Cell{4, 0});
  CHECK(reward == doctest::Approx(1.0 - shortest / 100.0).epsilon(1e-15));
  CHECK(shortest == 14);
}

TEST_CASE("chain key action at a critical position advances; the last one pays 1") {
  ChainEnv env(ChainEnv::spec_with_critical(5, {1, 4}));
  env.reset(0);
  auto out = env.step(ActionId{0});
  CHECK(env.position() == 1);
  out = env.step(env.key_action(1));
  CHECK(env.position() == 2);
  CHECK(out.reward == 0.0);
  env.step(ActionId{2});
  env.step(ActionId{0});
  REQUIRE(env.position() == 4);
  out = env.step(env.key_action(4));
  CHECK(out.done);
  CHECK(out.reward == 1.0);
}

TEST_CASE("chain wrong action at a critical position ends with nothing") {
  ChainEnv env(ChainEnv::spec_with_critical(5, {1, 4}));
  env.reset(0);
  env.step(ActionId{0});
  const auto out = env.step(ActionId{0});
  CHECK(out.done);
  CHECK(out.reward == 0.0);
}

TEST_CASE("encoding") {
  CHECK(ChainEnv::encode(3).token() == "3");
  GridConeEnv env(GridConeEnv::default_spec());
  const auto a = GridConeEnv::encode(env.observe_from({1, 3}, Heading::kNorth));
  const auto b = GridConeEnv::encode(env.observe_from({1, 3}, Heading::kNorth));
  const auto c = GridConeEnv::encode(env.observe_from({1, 3}, Heading::kWest));
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("stepping a finished episode throws") {
  ChainEnv env(ChainEnv::spec_with_critical(3, {1}));
  env.reset(0);
  env.step(ActionId{0});
  env.step(ActionId{0});
  REQUIRE(env.done());
  CHECK_THROWS_AS(env.step(ActionId{0}), EpisodeFinishedError);
}

TEST_CASE("random-action episodes respect max_steps and the state bound") {
  ChainEnv chain = test::default_chain();
  GridConeEnv grid(GridConeEnv::default_spec());
  for (Environment* env : {static_cast<Environment*>(&chain), static_cast<Environment*>(&grid)}) {
    const auto universe = test::all_states(*env);
    const int max_steps = env->spec().max_steps;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      const Trace t = random_trace(*env, seed);
      REQUIRE(static_cast<int>(t.rewards.size()) <= max_steps);
      std::set<std::string> acted(t.states.begin(), t.states.end() - 1);
      REQUIRE(static_cast<int>(acted.size()) <= max_steps);
      REQUIRE(acted.size() <= universe.size());
      for (const auto& s : acted) REQUIRE(universe.count(EncodedState(s)) == 1);
    }
  }
}

TEST_CASE("same seed and actions reproduce the trace") {
  GridConeEnv grid(GridConeEnv::default_spec());
  ChainEnv chain = test::default_chain();
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Trace a = random_trace(grid, seed);
    const Trace b = random_trace(grid, seed);
    CHECK(a.states == b.states);
    CHECK(a.rewards == b.rewards);
    CHECK(a.dones == b.dones);
    const Trace c = random_trace(chain, seed);
    const Trace d = random_trace(chain, seed);
    CHECK(c.states == d.states);
  }
}

TEST_CASE("chain: repeating the previous action at a critical state caps reward at 0.1") {
  ChainEnv env = test::default_chain();
  const StateSet k = env.critical_states();
  std::mt19937_64 rng(5);
  int violated = 0;
  for (int ep = 0; ep < 10000; ++ep) {
    env.reset(ep);
    std::optional<ActionId> prev;
    bool took_default_at_k = false;
    double total = 0.0;
    while (!env.done()) {
      const EncodedState s = env.current_state();
      // Bias towards progressing so that critical states are reached often.
      ActionId a{rng() % 3};
      if (!env.is_critical(env.position()) && rng() % 4 != 0) a = prev.value_or(ActionId{0});
      if (env.is_critical(env.position()) && rng() % 2 == 0) a = env.key_action(env.position());
      if (k.count(s) && a == default_action(prev, env.initial_action())) took_default_at_k = true;
      total += env.step(a).reward;
      prev = a;
    }
    if (took_default_at_k && total > 0.1) ++violated;
  }
  CHECK(violated == 0);
}

TEST_CASE("env spec json and registry") {
  const EnvSpec spec = ChainEnv::default_spec(20, 2, 4);
  const EnvSpec back = EnvSpec::from_json(spec.to_json());
  CHECK(back.to_json() == spec.to_json());
  auto env = make_environment(back);
  CHECK(env->enumerate_states().size() == 20);
  EnvSpec bad = spec;
  bad.name = "nope";
  CHECK_THROWS_AS(make_environment(bad), std::invalid_argument);
  CHECK_THROWS(EnvSpec::from_json({{"name", "chain"}}));
}

TEST_CASE("chain critical layout") {
  ChainEnv env = test::default_chain();
  CHECK(env.critical_positions().size() == 3);
  CHECK(env.enumerate_states().size() == 50);
  // Keys alternate so that repeating the previous key never works.
  const auto& k = env.critical_positions();
  for (std::size_t i = 1; i < k.size(); ++i) {
    CHECK(env.key_action(k[i]) != env.key_action(k[i - 1]));
  }
  CHECK_THROWS(ChainEnv(ChainEnv::spec_with_critical(5, {5})));
}
