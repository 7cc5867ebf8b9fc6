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

#include "polclust/gridcone_env.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace polclust {
namespace {

constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};
constexpr char kHeadingChar[4] = {'E', 'S', 'W', 'N'};

const std::vector<Cell>& default_walls() {
  static const std::vector<Cell> walls = {{2, 0}, {2, 1}, {2, 2}, {4, 2}};
  return walls;
}

}  // namespace

GridConeEnv::GridConeEnv(EnvSpec spec) : spec_(std::move(spec)) {
  if (spec_.name != kName) {
    throw std::invalid_argument("GridConeEnv: spec name must be 'gridcone'");
  }
  if (spec_.action_count != kActionCount) {
    throw std::invalid_argument("gridcone: action_count must be 3");
  }
  if (spec_.max_steps < 1) {
    throw std::invalid_argument("gridcone: max_steps must be >= 1");
  }
  if (spec_.initial_action >= kActionCount) {
    throw std::invalid_argument("gridcone: initial_action out of range");
  }
  const auto& p = spec_.parameters;
  size_ = p.value("size", 5);
  if (size_ < 2) throw std::invalid_argument("gridcone: size must be >= 2");
  walls_.assign(static_cast<std::size_t>(size_ * size_), 0);

  std::vector<Cell> walls;
  if (p.contains("walls")) {
    for (const auto& w : p.at("walls")) walls.push_back({w.at(0), w.at(1)});
    goal_ = {size_ - 1, size_ - 1};
  } else if (size_ == 5) {
    walls = default_walls();
    goal_ = {4, 0};
  } else {
    goal_ = {size_ - 1, size_ - 1};
  }
  if (p.contains("goal")) goal_ = {p.at("goal").at(0), p.at("goal").at(1)};

  auto inside = [&](Cell c) {
    return c.x >= 0 && c.y >= 0 && c.x < size_ && c.y < size_;
  };
  for (Cell w : walls) {
    if (!inside(w)) throw std::invalid_argument("gridcone: wall outside grid");
    walls_[static_cast<std::size_t>(w.y * size_ + w.x)] = 1;
  }
  if (!inside(goal_) || blocked(goal_) || blocked(start_) || goal_ == start_) {
    throw std::invalid_argument("gridcone: invalid start/goal placement");
  }

  // The goal must be reachable from the start.
  std::vector<char> seen(walls_.size(), 0);
  std::deque<Cell> frontier{start_};
  seen[static_cast<std::size_t>(start_.y * size_ + start_.x)] = 1;
  bool reached = false;
  while (!frontier.empty()) {
    Cell c = frontier.front();
    frontier.pop_front();
    if (c == goal_) reached = true;
    for (int h = 0; h < 4; ++h) {
      Cell n{c.x + kDx[h], c.y + kDy[h]};
      if (blocked(n)) continue;
      auto idx = static_cast<std::size_t>(n.y * size_ + n.x);
      if (!seen[idx]) {
        seen[idx] = 1;
        frontier.push_back(n);
      }
    }
  }
  if (!reached) throw std::invalid_argument("gridcone: goal unreachable");
}

EnvSpec GridConeEnv::default_spec() {
  EnvSpec s;
  s.name = kName;
  s.action_count = kActionCount;
  s.max_steps = 100;
  s.parameters = {{"size", 5}};
  return s;
}

bool GridConeEnv::blocked(Cell c) const {
  if (c.x < 0 || c.y < 0 || c.x >= size_ || c.y >= size_) return true;
  return walls_[static_cast<std::size_t>(c.y * size_ + c.x)] != 0;
}

Cell GridConeEnv::ahead(Cell c, Heading h) {
  const int i = static_cast<int>(h);
  return {c.x + kDx[i], c.y + kDy[i]};
}

Heading GridConeEnv::turned(Heading h, std::size_t action) {
  const int i = static_cast<int>(h);
  if (action == kTurnLeft) return static_cast<Heading>((i + 3) % 4);
  if (action == kTurnRight) return static_cast<Heading>((i + 1) % 4);
  return h;
}

EncodedState GridConeEnv::reset(std::uint64_t /*seed*/) {
  position_ = start_;
  heading_ = Heading::kEast;
  steps_ = 0;
  done_ = false;
  return current_state();
}

StepOutcome GridConeEnv::step(ActionId action) {
  if (done_) throw EpisodeFinishedError();
  if (action.index >= kActionCount) {
    throw std::out_of_range("gridcone: action index out of range");
  }
  ++steps_;
  StepOutcome out;
  if (action.index == kForward) {
    Cell next = ahead(position_, heading_);
    if (!blocked(next)) position_ = next;
    if (position_ == goal_) {
      out.reward = 1.0 - static_cast<double>(steps_) / spec_.max_steps;
      done_ = true;
    }
  } else {
    heading_ = turned(heading_, action.index);
  }
  if (steps_ >= spec_.max_steps) done_ = true;
  out.next_state = current_state();
  out.done = done_;
  return out;
}

GridConeObservation GridConeEnv::observe_from(Cell position,
                                              Heading heading) const {
  GridConeObservation obs{position, heading, {}};
  const int f = static_cast<int>(heading);
  const int r = (f + 1) % 4;
  for (int depth = 1; depth <= 2; ++depth) {
    for (int lateral = -1; lateral <= 1; ++lateral) {
      Cell c{position.x + depth * kDx[f] + lateral * kDx[r],
             position.y + depth * kDy[f] + lateral * kDy[r]};
      if (blocked(c)) {
        obs.cone.push_back('#');
      } else if (c == goal_) {
        obs.cone.push_back('G');
      } else {
        obs.cone.push_back('.');
      }
    }
  }
  return obs;
}

EncodedState GridConeEnv::encode(const GridConeObservation& obs) {
  std::string token = std::to_string(obs.position.x) + ":" +
                      std::to_string(obs.position.y) + ":" +
                      kHeadingChar[static_cast<int>(obs.heading)] + ":" +
                      obs.cone;
  return EncodedState(std::move(token));
}

std::vector<EncodedState> GridConeEnv::enumerate_states() const {
  std::vector<EncodedState> states;
  for (int y = 0; y < size_; ++y) {
    for (int x = 0; x < size_; ++x) {
      Cell c{x, y};
      if (blocked(c) || c == goal_) continue;
      for (int h = 0; h < 4; ++h) {
        states.push_back(encode(observe_from(c, static_cast<Heading>(h))));
      }
    }
  }
  std::sort(states.begin(), states.end());
  return states;
}

}  // namespace polclust
