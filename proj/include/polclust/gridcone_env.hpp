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

#ifndef POLCLUST_GRIDCONE_ENV_HPP_
#define POLCLUST_GRIDCONE_ENV_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polclust/env.hpp"

namespace polclust {

enum class Heading : int { kEast = 0, kSouth = 1, kWest = 2, kNorth = 3 };

struct Cell {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Raw observation: agent pose plus what it sees in its view cone.
struct GridConeObservation {
  Cell position;
  Heading heading = Heading::kEast;
  // One character per cone cell ('.' floor, '#' wall or outside, 'G' goal),
  // ordered by distance ahead then left to right.
  std::string cone;
};

// Minigrid-like navigation task on a size x size floor surrounded by walls.
// The agent turns or moves forward; it sees a 2-deep, 3-wide cone ahead of
// it. Reaching the goal pays 1 - steps_taken / max_steps and ends the
// episode; running out of steps ends it with nothing.
//
// Parameters: "size" (default 5), "walls" ([[x, y], ...]; a fixed interior
// wall layout when absent), "goal" ([x, y], default [4, 0] on the default
// layout). The agent starts in the top-left cell facing east.
class GridConeEnv final : public Environment {
 public:
  static constexpr const char* kName = "gridcone";
  static constexpr std::size_t kTurnLeft = 0;
  static constexpr std::size_t kTurnRight = 1;
  static constexpr std::size_t kForward = 2;
  static constexpr std::size_t kActionCount = 3;

  explicit GridConeEnv(EnvSpec spec);

  static EnvSpec default_spec();

  const EnvSpec& spec() const override { return spec_; }
  EncodedState reset(std::uint64_t seed) override;
  StepOutcome step(ActionId action) override;
  EncodedState current_state() const override { return encode(observe()); }
  bool done() const override { return done_; }
  std::vector<EncodedState> enumerate_states() const override;

  GridConeObservation observe() const { return observe_from(position_, heading_); }
  GridConeObservation observe_from(Cell position, Heading heading) const;
  static EncodedState encode(const GridConeObservation& obs);

  int size() const { return size_; }
  Cell start() const { return start_; }
  Cell goal() const { return goal_; }
  bool blocked(Cell c) const;
  int steps_taken() const { return steps_; }

  static Cell ahead(Cell c, Heading h);
  static Heading turned(Heading h, std::size_t action);

 private:
  EnvSpec spec_;
  int size_ = 5;
  std::vector<char> walls_;  // row-major, size_ * size_
  Cell start_{0, 0};
  Cell goal_{};
  Cell position_{};
  Heading heading_ = Heading::kEast;
  int steps_ = 0;
  bool done_ = true;
};

}  // namespace polclust

#endif  // POLCLUST_GRIDCONE_ENV_HPP_
