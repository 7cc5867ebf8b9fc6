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

#ifndef POLCLUST_CONFIG_HPP_
#define POLCLUST_CONFIG_HPP_

#include <cstdint>
#include <string>

#include "json.hpp"
#include "polclust/env.hpp"
#include "polclust/rankers.hpp"

namespace polclust {

// JSON form:
//   {"env": EnvSpec, "policy": name-or-path, "mu_plus", "suite_size", "trials",
//    "delta", "sigma", "eta", "rho_success", "rho_failure", "episodes",
//    "master_seed"}
// plus optional "retry_factor" and "sbfl_formula". Missing hyperparameters
// take their ledger defaults; "policy" defaults to the environment's
// built-in policy.
struct PipelineConfig {
  EnvSpec env;
  std::string policy;
  double mu_plus = 0.8;
  int suite_size = 500;
  int trials = 5;
  double delta = 10.0;
  int sigma = 10;
  double eta = 0.05;
  double rho_success = 0.9;
  double rho_failure = 0.5;
  int episodes = 30;
  std::uint64_t master_seed = 0;
  double retry_factor = 50.0;
  SbflFormula sbfl_formula = SbflFormula::kTarantula;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  nlohmann::json to_json() const;
  static PipelineConfig from_json(const nlohmann::json& j);
  static PipelineConfig load(const std::string& path);
};

std::string default_policy_for(const std::string& env_name);

}  // namespace polclust

#endif  // POLCLUST_CONFIG_HPP_
