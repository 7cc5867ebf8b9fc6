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

#include "polclust/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace polclust {
namespace {

CurvePoint make_point(std::size_t k, std::size_t restored_count, std::size_t state_count,
                      double baseline, const Evaluation& ev) {
  CurvePoint p;
  p.k = k;
  p.fraction_states_restored =
      state_count == 0 ? 0.0 : static_cast<double>(restored_count) / state_count;
  p.fraction_policy_actions = ev.fraction_policy_actions;
  p.mean_reward = ev.mean_reward;
  p.pct_of_original = ev.mean_reward / baseline;
  p.std_error = ev.std_error;
  return p;
}

void require_baseline(double baseline) {
  if (!(baseline > 0.0)) {
    throw std::invalid_argument("baseline reward must be positive to express pct_of_original");
  }
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

Curve curve_for_clusters(const std::string& method, const std::vector<RankedCluster>& ranked,
                         std::size_t state_count, double baseline_reward,
                         const RolloutContext& ctx) {
  require_baseline(baseline_reward);
  if (ranked.empty()) throw std::invalid_argument("curve_for_clusters: no clusters");
  Curve curve{method, {}};
  StateSet restored;
  curve.points.push_back(make_point(0, 0, state_count, baseline_reward,
                                    evaluate_restored(ctx, restored)));
  for (std::size_t k = 1; k <= ranked.size(); ++k) {
    const std::size_t before = restored.size();
    restored.insert(ranked[k - 1].cluster.states.begin(), ranked[k - 1].cluster.states.end());
    if (restored.size() == before) continue;
    curve.points.push_back(make_point(k, restored.size(), state_count, baseline_reward,
                                      evaluate_restored(ctx, restored)));
  }
  return curve;
}

Curve curve_for_state_ranking(const std::string& method, const StateRanking& ranking,
                              std::size_t increment, double baseline_reward,
                              const RolloutContext& ctx) {
  require_baseline(baseline_reward);
  if (increment < 1) throw std::invalid_argument("increment must be >= 1");
  Curve curve{method, {}};
  const std::size_t n = ranking.size();
  for (std::size_t k = 0;; ++k) {
    const std::size_t count = std::min(k * increment, n);
    curve.points.push_back(make_point(k, count, n, baseline_reward,
                                      evaluate_restored(ctx, ranking.top(count))));
    if (count == n) break;
  }
  return curve;
}

double restoration_auc(const Curve& curve) {
  if (curve.points.empty()) return 0.0;
  double area = 0.0;
  double x0 = 0.0;
  double y0 = curve.points.front().pct_of_original;
  for (const auto& p : curve.points) {
    const double x1 = std::min(1.0, p.fraction_states_restored);
    area += 0.5 * (x1 - x0) * (y0 + p.pct_of_original);
    x0 = x1;
    y0 = p.pct_of_original;
  }
  if (x0 < 1.0) area += (1.0 - x0) * y0;
  return area;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 2) return 0.0;
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

SubsetResult brute_force_best_subset(const RolloutContext& ctx, std::size_t k,
                                     double max_combinations) {
  const std::vector<EncodedState> states = ctx.env.enumerate_states();
  const std::size_t n = states.size();
  if (k > n) throw std::invalid_argument("k exceeds the number of states");

  double combos = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    combos = combos * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  combos = std::round(combos);
  if (combos > max_combinations) {
    throw std::invalid_argument("brute force over C(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") = " +
                                std::to_string(static_cast<long long>(combos)) +
                                " subsets exceeds the guard");
  }

  // Combinations in lexicographic index order, which is token order.
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  SubsetResult best;
  bool have_best = false;
  while (true) {
    StateSet subset;
    for (std::size_t i : pick) subset.insert(states[i]);
    const double reward = evaluate_restored(ctx, subset).mean_reward;
    ++best.evaluated;
    if (!have_best || reward > best.mean_reward) {
      best.states = std::move(subset);
      best.mean_reward = reward;
      have_best = true;
    }
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

}  // namespace polclust
