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

#include "polclust/config.hpp"

#include <fstream>
#include <stdexcept>

#include "polclust/ledger.hpp"

namespace polclust {
namespace {

void check(const std::string& key, double value) {
  const ParamSpec& p = ledger_entry(key);
  if (!in_range(p, value)) {
    throw std::invalid_argument("config: " + key + "=" + std::to_string(value) +
                                " outside valid range " + format_range(p) +
                                (p.integer ? " (integer)" : ""));
  }
}

template <class T>
T read_param(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) return static_cast<T>(ledger_entry(key).default_value);
  if (!j.at(key).is_number()) {
    throw std::invalid_argument("config: " + key + " must be a number");
  }
  if constexpr (std::is_integral_v<T>) {
    const double v = j.at(key).get<double>();
    check(key, v);
    return static_cast<T>(v);
  } else {
    return j.at(key).get<T>();
  }
}

}  // namespace

std::string default_policy_for(const std::string& env_name) {
  if (env_name == "chain") return "scripted";
  if (env_name == "gridcone") return "bfs";
  return "random";
}

void PipelineConfig::validate() const {
  check("mu_plus", mu_plus);
  check("suite_size", suite_size);
  check("trials", trials);
  check("delta", delta);
  check("sigma", sigma);
  check("eta", eta);
  check("rho_success", rho_success);
  check("rho_failure", rho_failure);
  check("episodes", episodes);
  if (rho_failure > rho_success) {
    throw std::invalid_argument("config: rho_failure must not exceed rho_success");
  }
  if (!(retry_factor >= 1.0)) throw std::invalid_argument("config: retry_factor must be >= 1");
  if (policy.empty()) throw std::invalid_argument("config: policy is empty");
}

nlohmann::json PipelineConfig::to_json() const {
  return {{"env", env.to_json()},
          {"policy", policy},
          {"mu_plus", mu_plus},
          {"suite_size", suite_size},
          {"trials", trials},
          {"delta", delta},
          {"sigma", sigma},
          {"eta", eta},
          {"rho_success", rho_success},
          {"rho_failure", rho_failure},
          {"episodes", episodes},
          {"master_seed", master_seed},
          {"retry_factor", retry_factor},
          {"sbfl_formula", to_string(sbfl_formula)}};
}

PipelineConfig PipelineConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  if (!j.contains("env")) throw std::invalid_argument("config: missing \"env\"");
  PipelineConfig c;
  c.env = EnvSpec::from_json(j.at("env"));
  c.policy = j.value("policy", default_policy_for(c.env.name));
  c.mu_plus = read_param<double>(j, "mu_plus");
  c.suite_size = read_param<int>(j, "suite_size");
  c.trials = read_param<int>(j, "trials");
  c.delta = read_param<double>(j, "delta");
  c.sigma = read_param<int>(j, "sigma");
  c.eta = read_param<double>(j, "eta");
  c.rho_success = read_param<double>(j, "rho_success");
  c.rho_failure = read_param<double>(j, "rho_failure");
  c.episodes = read_param<int>(j, "episodes");
  c.master_seed = j.value("master_seed", std::uint64_t{0});
  c.retry_factor = j.value("retry_factor", 50.0);
  c.sbfl_formula = sbfl_formula_from_string(j.value("sbfl_formula", std::string("tarantula")));
  c.validate();
  return c;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config '" + path + "'");
  return from_json(nlohmann::json::parse(in));
}

}  // namespace polclust
