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

#include <stdexcept>

#include "polclust/chain_env.hpp"
#include "polclust/env.hpp"
#include "polclust/gridcone_env.hpp"

namespace polclust {

nlohmann::json EnvSpec::to_json() const {
  return {{"name", name},
          {"action_count", action_count},
          {"max_steps", max_steps},
          {"parameters", parameters},
          {"initial_action", initial_action}};
}

EnvSpec EnvSpec::from_json(const nlohmann::json& j) {
  EnvSpec s;
  s.name = j.at("name").get<std::string>();
  s.action_count = j.at("action_count").get<std::size_t>();
  s.max_steps = j.at("max_steps").get<int>();
  s.parameters = j.value("parameters", nlohmann::json::object());
  s.initial_action = j.value("initial_action", std::size_t{0});
  if (s.max_steps < 1) throw std::invalid_argument("EnvSpec: max_steps must be >= 1");
  if (s.initial_action >= s.action_count) {
    throw std::invalid_argument("EnvSpec: initial_action out of range");
  }
  return s;
}

std::unique_ptr<Environment> make_environment(const EnvSpec& spec) {
  if (spec.name == ChainEnv::kName) return std::make_unique<ChainEnv>(spec);
  if (spec.name == GridConeEnv::kName) return std::make_unique<GridConeEnv>(spec);
  throw std::invalid_argument("unknown environment '" + spec.name + "'");
}

std::vector<std::string> registered_environments() {
  return {ChainEnv::kName, GridConeEnv::kName};
}

}  // namespace polclust
