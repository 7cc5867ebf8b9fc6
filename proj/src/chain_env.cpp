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

#include "polclust/chain_env.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace polclust {
namespace {

std::vector<int> place_critical(int length, int count, std::uint64_t seed) {
  if (count < 0 || count > length) {
    throw std::invalid_argument("chain: critical_count must be in [0, length]");
  }
  std::vector<int> positions(static_cast<std::size_t>(length));
  std::iota(positions.begin(), positions.end(), 0);
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `count` entries become the sample.
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, length - 1);
    std::swap(positions[static_cast<std::size_t>(i)],
              positions[static_cast<std::size_t>(pick(rng))]);
  }
  positions.resize(static_cast<std::size_t>(count));
  std::sort(positions.begin(), positions.end());
  return positions;
}

}  // namespace

ChainEnv::ChainEnv(EnvSpec spec) : spec_(std::move(spec)) {
  if (spec_.name != kName) {
    throw std::invalid_argument("ChainEnv: spec name must be 'chain'");
  }
  if (spec_.action_count != kActionCount) {
    throw std::invalid_argument("chain: action_count must be 3");
  }
  const auto& p = spec_.parameters;
  length_ = p.value("length", 50);
  if (length_ < 1) throw std::invalid_argument("chain: length must be >= 1");
  if (spec_.max_steps < length_) {
    throw std::invalid_argument("chain: max_steps must be >= length");
  }
  if (p.contains("critical")) {
    critical_ = p.at("critical").get<std::vector<int>>();
    std::sort(critical_.begin(), critical_.end());
    if (std::adjacent_find(critical_.begin(), critical_.end()) !=
        critical_.end()) {
      throw std::invalid_argument("chain: duplicate critical position");
    }
    for (int c : critical_) {
      if (c < 0 || c >= length_) {
        throw std::invalid_argument("chain: critical position out of range");
      }
    }
  } else {
    critical_ = place_critical(length_, p.value("critical_count", 3),
                               p.value("layout_seed", std::uint64_t{0}));
  }
  if (spec_.initial_action != 0) {
    // A nonzero initial action could block the scripted policy at a critical
    // position 0.
    throw std::invalid_argument("chain: initial_action must be 0");
  }
  key_of_position_.assign(static_cast<std::size_t>(length_), -1);
  for (std::size_t i = 0; i < critical_.size(); ++i) {
    key_of_position_[static_cast<std::size_t>(critical_[i])] =
        (i % 2 == 0) ? 1 : 2;
  }
}

EnvSpec ChainEnv::default_spec(int length, int critical_count,
                               std::uint64_t layout_seed) {
  EnvSpec s;
  s.name = kName;
  s.action_count = kActionCount;
  s.max_steps = length;
  s.parameters = {{"length", length},
                  {"critical_count", critical_count},
                  {"layout_seed", layout_seed}};
  return s;
}

EnvSpec ChainEnv::spec_with_critical(int length, std::vector<int> critical) {
  EnvSpec s;
  s.name = kName;
  s.action_count = kActionCount;
  s.max_steps = length;
  s.parameters = {{"length", length}, {"critical", std::move(critical)}};
  return s;
}

EncodedState ChainEnv::reset(std::uint64_t /*seed*/) {
  position_ = 0;
  steps_ = 0;
  done_ = false;
  last_action_ = spec_.initial_action;
  return encode(position_);
}

StepOutcome ChainEnv::step(ActionId action) {
  if (done_) throw EpisodeFinishedError();
  if (action.index >= kActionCount) {
    throw std::out_of_range("chain: action index out of range");
  }
  ++steps_;
  StepOutcome out;
  const int key = key_of_position_[static_cast<std::size_t>(position_)];
  const bool blocked = key >= 0 && (action.index != static_cast<std::size_t>(key) ||
                                    action.index == last_action_);
  last_action_ = action.index;
  if (blocked) {
    done_ = true;
  } else {
    ++position_;
    if (position_ == length_) {
      out.reward = 1.0;
      done_ = true;
    }
  }
  if (steps_ >= spec_.max_steps) done_ = true;
  out.next_state = encode(position_);
  out.done = done_;
  return out;
}

std::vector<EncodedState> ChainEnv::enumerate_states() const {
  std::vector<EncodedState> states;
  states.reserve(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) states.push_back(encode(i));
  return states;
}

bool ChainEnv::is_critical(int position) const {
  return position >= 0 && position < length_ &&
         key_of_position_[static_cast<std::size_t>(position)] >= 0;
}

ActionId ChainEnv::key_action(int position) const {
  if (!is_critical(position)) {
    throw std::invalid_argument("chain: position " + std::to_string(position) +
                                " is not critical");
  }
  return ActionId{
      static_cast<std::size_t>(key_of_position_[static_cast<std::size_t>(position)])};
}

StateSet ChainEnv::critical_states() const {
  StateSet out;
  for (int c : critical_) out.insert(encode(c));
  return out;
}

EncodedState ChainEnv::encode(int position) {
  return EncodedState(std::to_string(position));
}

}  // namespace polclust
