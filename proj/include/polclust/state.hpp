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

#ifndef POLCLUST_STATE_HPP_
#define POLCLUST_STATE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>

namespace polclust {

// Canonical identifier of an (abstracted) environment state. Tokens are
// compared in shortlex order (length first, then bytes), which keeps plain
// integer tokens such as "3" < "10" in numeric order.
class EncodedState {
 public:
  EncodedState() = default;
  explicit EncodedState(std::string token) : token_(std::move(token)) {}

  const std::string& token() const { return token_; }

  friend bool operator==(const EncodedState&, const EncodedState&) = default;
  friend std::strong_ordering operator<=>(const EncodedState& a,
                                          const EncodedState& b) {
    if (auto c = a.token_.size() <=> b.token_.size(); c != 0) return c;
    return a.token_.compare(b.token_) <=> 0;
  }

 private:
  std::string token_;
};

using StateSet = std::set<EncodedState>;

struct ActionId {
  std::size_t index = 0;
  friend auto operator<=>(const ActionId&, const ActionId&) = default;
};

// Mixes two 64-bit values into a fresh seed (splitmix64 finalizer). Used for
// every derived seed so that run k of a suite does not depend on how many
// runs came before it.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace polclust

template <>
struct std::hash<polclust::EncodedState> {
  std::size_t operator()(const polclust::EncodedState& s) const noexcept {
    return std::hash<std::string>{}(s.token());
  }
};

#endif  // POLCLUST_STATE_HPP_
