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

#ifndef POLCLUST_CHAIN_ENV_HPP_
#define POLCLUST_CHAIN_ENV_HPP_

#include <cstdint>
#include <vector>

#include "polclust/env.hpp"

namespace polclust {

// Corridor of `length` positions with a planted set K of critical positions.
//
// Three actions. Away from K every action advances by one position. At the
// i-th critical position only the key action advances, and only when it
// differs from the previous action (the initial action before the first
// step); anything else ends the episode with reward 0. Repeating the previous
// action at a state of K therefore always fails. Key actions alternate
// 1, 2, 1, ... along the corridor while the scripted policy plays 0
// elsewhere, so the scripted policy and its pruned variants never arrive at a
// critical position holding its key. Leaving the last position ends the
// episode with reward 1.
//
// Parameters: "length" (default 50), "critical" (explicit positions) or
// "critical_count" (default 3) placed by "layout_seed" (default 0).
class ChainEnv final : public Environment {
 public:
  static constexpr const char* kName = "chain";
  static constexpr std::size_t kActionCount = 3;

  explicit ChainEnv(EnvSpec spec);

  static EnvSpec default_spec(int length = 50, int critical_count = 3,
                              std::uint64_t layout_seed = 0);
  static EnvSpec spec_with_critical(int length, std::vector<int> critical);

  const EnvSpec& spec() const override { return spec_; }
  EncodedState reset(std::uint64_t seed) override;
  StepOutcome step(ActionId action) override;
  EncodedState current_state() const override { return encode(position_); }
  bool done() const override { return done_; }
  std::vector<EncodedState> enumerate_states() const override;

  int length() const { return length_; }
  int position() const { return position_; }
  const std::vector<int>& critical_positions() const { return critical_; }
  bool is_critical(int position) const;
  // Key action at a critical position.
  ActionId key_action(int position) const;
  StateSet critical_states() const;

  // Raw observation is the position index; the token is its decimal form.
  static EncodedState encode(int position);

 private:
  EnvSpec spec_;
  int length_ = 0;
  std::vector<int> critical_;       // sorted ascending
  std::vector<int> key_of_position_;  // -1 when not critical
  int position_ = 0;
  int steps_ = 0;
  bool done_ = true;
  std::size_t last_action_ = 0;
};

}  // namespace polclust

#endif  // POLCLUST_CHAIN_ENV_HPP_
