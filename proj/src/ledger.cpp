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

#include "polclust/ledger.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace polclust {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr const char* kNamed = "method-named, value invented";
constexpr const char* kArtifact = "implementation-defined, value invented";

std::string format_number(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

const std::vector<ParamSpec>& parameter_ledger() {
  static const std::vector<ParamSpec> ledger = {
      {"mu_plus", "mu+", "Mutation rate of the \"+\" suite; the \"-\" suite uses 1 - mu+.",
       0.8, 0.5, 1.0, false, true, false, kNamed},
      {"suite_size", "N", "Retained runs per suite.", 500, 1, kInf, true, false, true, kNamed},
      {"trials", "tau", "Episodes per sampled run sharing one mutation partition.", 5, 1,
       kInf, true, false, true, kNamed},
      {"delta", "delta", "Base of the IDF logarithm; smaller values downweight common states more.",
       10, 1, kInf, false, false, false, kNamed},
      {"sigma", "sigma", "Principal components (clusters) extracted per matrix.", 10, 1, kInf,
       true, false, true, kNamed},
      {"eta", "eta", "Fraction of the state vocabulary placed in each cluster.", 0.05, 0, 1,
       false, true, false, kNamed},
      {"rho_success", "rho_success",
       "A run succeeds when its mean reward is at least rho_success times the baseline.", 0.9,
       0, 1, false, true, false, kArtifact},
      {"rho_failure", "rho_failure",
       "A \"-\" suite run is kept when its mean reward is at most rho_failure times the baseline.",
       0.5, 0, 1, true, true, false, kArtifact},
      {"episodes", "episodes", "Evaluation episodes per pruned policy and curve point.", 30, 1,
       kInf, true, false, true, kArtifact},
  };
  return ledger;
}

const ParamSpec& ledger_entry(std::string_view key) {
  for (const auto& p : parameter_ledger()) {
    if (p.key == key) return p;
  }
  throw std::out_of_range("no ledger entry for '" + std::string(key) + "'");
}

bool in_range(const ParamSpec& p, double value) {
  if (std::isnan(value)) return false;
  if (p.integer && std::floor(value) != value) return false;
  const bool above = p.lower_inclusive ? value >= p.lower : value > p.lower;
  const bool below = p.upper_inclusive ? value <= p.upper : value < p.upper;
  return above && below;
}

std::string format_range(const ParamSpec& p) {
  return std::string(p.lower_inclusive ? "[" : "(") + format_number(p.lower) + ", " +
         format_number(p.upper) + (p.upper_inclusive ? "]" : ")");
}

std::string emit_ledger() {
  std::ostringstream os;
  os << "| Key | Symbol | Default | Valid range | Source | Meaning |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& p : parameter_ledger()) {
    os << "| `" << p.key << "` | " << p.symbol << " | " << format_number(p.default_value)
       << " | " << format_range(p) << " | " << p.source << " | " << p.description << " |\n";
  }
  return os.str();
}

nlohmann::json ledger_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : parameter_ledger()) {
    out.push_back({{"key", p.key},
                   {"symbol", p.symbol},
                   {"default", p.default_value},
                   {"range", format_range(p)},
                   {"integer", p.integer},
                   {"source", p.source},
                   {"description", p.description}});
  }
  return out;
}

}  // namespace polclust
