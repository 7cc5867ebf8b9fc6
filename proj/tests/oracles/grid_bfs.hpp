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

#ifndef POLCLUST_TESTS_ORACLES_GRID_BFS_HPP_
#define POLCLUST_TESTS_ORACLES_GRID_BFS_HPP_

// Hand-rolled shortest paths on the fixed 5x5 layout: walls at (2,0),
// (2,1), (2,2), (4,2), goal (4,0), start (0,0) facing east. Headings are
// 0 east, 1 south, 2 west, 3 north; actions 0 left, 1 right, 2 forward.

#include <array>
#include <deque>

namespace oracle {

struct GridPose {
  int x;
  int y;
  int h;
};

inline bool grid_wall(int x, int y) {
  if (x < 0 || y < 0 || x >= 5 || y >= 5) return true;
  return (x == 2 && y <= 2) || (x == 4 && y == 2);
}

inline GridPose grid_apply(GridPose p, int action) {
  static constexpr int dx[4] = {1, 0, -1, 0};
  static constexpr int dy[4] = {0, 1, 0, -1};
  if (action == 0) return {p.x, p.y, (p.h + 3) % 4};
  if (action == 1) return {p.x, p.y, (p.h + 1) % 4};
  const int nx = p.x + dx[p.h];
  const int ny = p.y + dy[p.h];
  if (grid_wall(nx, ny)) return p;
  return {nx, ny, p.h};
}

// Minimum number of actions from every pose to standing on the goal; -1
// when unreachable. Forward search from each pose, no reverse model.
inline int grid_distance(GridPose from) {
  std::array<int, 5 * 5 * 4> dist;
  dist.fill(-1);
  auto id = [](GridPose p) { return (p.y * 5 + p.x) * 4 + p.h; };
  std::deque<GridPose> q{from};
  dist[id(from)] = 0;
  while (!q.empty()) {
    const GridPose p = q.front();
    q.pop_front();
    if (p.x == 4 && p.y == 0) return dist[id(p)];
    for (int a = 0; a < 3; ++a) {
      const GridPose n = grid_apply(p, a);
      if (dist[id(n)] < 0) {
        dist[id(n)] = dist[id(p)] + 1;
        q.push_back(n);
      }
    }
  }
  return -1;
}

}  // namespace oracle

#endif  // POLCLUST_TESTS_ORACLES_GRID_BFS_HPP_
