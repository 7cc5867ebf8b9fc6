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

#ifndef POLCLUST_LEDGER_HPP_
#define POLCLUST_LEDGER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace polclust {

// One tunable hyperparameter. Config validation and the generated
// documentation both read this table.
struct ParamSpec {
  std::string key;     // config key
  std::string symbol;  // notation used in the docs
  std::string description;
  double default_value = 0.0;
  double lower = 0.0;
  double upper = 0.0;  // +inf when unbounded
  bool lower_inclusive = true;
  bool upper_inclusive = true;
  bool integer = false;
  std::string source;
};

const std::vector<ParamSpec>& parameter_ledger();
// Throws std::out_of_range for unknown keys.
const ParamSpec& ledger_entry(std::string_view key);

bool in_range(const ParamSpec& p, double value);
// Interval notation, e.g. "(0.5, 1]" or "[1, inf)".
std::string format_range(const ParamSpec& p);

// Markdown table with one row per ledger entry.
std::string emit_ledger();
nlohmann::json ledger_json();

}  // namespace polclust

#endif  // POLCLUST_LEDGER_HPP_
