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

#ifndef POLCLUST_TESTS_SUPPORT_HPP_
#define POLCLUST_TESTS_SUPPORT_HPP_

#include <memory>
#include <string>
#include <vector>

#include "polclust/chain_env.hpp"
#include "polclust/gridcone_env.hpp"
#include "polclust/policy.hpp"
#include "polclust/state.hpp"

namespace test {

inline polclust::StateSet states_of(std::initializer_list<const char*> tokens) {
  polclust::StateSet out;
  for (const char* t : tokens) out.insert(polclust::EncodedState(t));
  return out;
}

inline polclust::StateSet all_states(const polclust::Environment& env) {
  const auto v = env.enumerate_states();
  return {v.begin(), v.end()};
}

// Chain of 50 with the planted set used throughout the tests.
inline polclust::ChainEnv default_chain() {
  return polclust::ChainEnv(polclust::ChainEnv::default_spec());
}

// Policy wrapper counting queries.
class CountingPolicy final : public polclust::Policy {
 public:
  explicit CountingPolicy(const polclust::Policy& inner) : inner_(inner) {}
  polclust::ActionId act(const polclust::EncodedState& s, std::uint64_t seed) const override {
    queried.push_back(s);
    return inner_.act(s, seed);
  }
  mutable std::vector<polclust::EncodedState> queried;

 private:
  const polclust::Policy& inner_;
};

// Forwards to an inner environment and records every state acted in.
class RecordingEnv final : public polclust::Environment {
 public:
  explicit RecordingEnv(polclust::Environment& inner) : inner_(inner) {}
  const polclust::EnvSpec& spec() const override { return inner_.spec(); }
  polclust::EncodedState reset(std::uint64_t seed) override { return inner_.reset(seed); }
  polclust::StepOutcome step(polclust::ActionId a) override {
    visited.insert(inner_.current_state());
    return inner_.step(a);
  }
  polclust::EncodedState current_state() const override { return inner_.current_state(); }
  bool done() const override { return inner_.done(); }
  std::vector<polclust::EncodedState> enumerate_states() const override {
    return inner_.enumerate_states();
  }

  polclust::StateSet visited;

 private:
  polclust::Environment& inner_;
};

}  // namespace test

#endif  // POLCLUST_TESTS_SUPPORT_HPP_
