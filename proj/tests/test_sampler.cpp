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

#include <algorithm>

#include "doctest.h"
#include "polclust/sampler.hpp"
#include "support.hpp"

using namespace polclust;

TEST_CASE("partition is disjoint and covers exactly the visited states") {
  ChainEnv chain = test::default_chain();
  GridConeEnv grid(GridConeEnv::default_spec());
  const TabularPolicy scripted = chain_scripted_policy(chain);
  const TabularPolicy bfs = gridcone_bfs_policy(grid);
  struct Case {
    Environment* env;
    const Policy* policy;
  };
  for (const Case& c : {Case{&chain, &scripted}, Case{&grid, &bfs}}) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      test::RecordingEnv rec(*c.env);
      const double mu = static_cast<double>(seed % 11) / 10.0;
      const RunTrace t = sample_partition(rec, *c.policy, mu, 3, seed, rec.initial_action());
      StateSet both;
      std::set_intersection(t.partition.mutated.begin(), t.partition.mutated.end(),
                            t.partition.normal.begin(), t.partition.normal.end(),
                            std::inserter(both, both.begin()));
      REQUIRE(both.empty());
      StateSet all = t.partition.mutated;
      all.insert(t.partition.normal.begin(), t.partition.normal.end());
      REQUIRE(all == rec.visited);
    }
  }
}

TEST_CASE("mu = 0 returns an empty mutated set and the base reward") {
  GridConeEnv grid(GridConeEnv::default_spec());
  const TabularPolicy bfs = gridcone_bfs_policy(grid);
  const RunRecord r = sample_run(grid, bfs, 0.0, 5, 3, grid.initial_action());
  CHECK(r.states.empty());
  CHECK(r.average_reward == mean_policy_reward(grid, bfs, 5, 123));
}

TEST_CASE("mu = 1 returns an empty normal set and only default actions") {
  GridConeEnv grid(GridConeEnv::default_spec());
  const TabularPolicy bfs = gridcone_bfs_policy(grid);
  test::CountingPolicy counting(bfs);
  const RunRecord r = sample_run(grid, counting, 1.0, 4, 3, grid.initial_action());
  CHECK(r.states.empty());
  CHECK(counting.queried.empty());
  const RunTrace t = sample_partition(grid, bfs, 1.0, 4, 3, grid.initial_action());
  CHECK(t.partition.normal.empty());
  CHECK_FALSE(t.partition.mutated.empty());
}

TEST_CASE("returned set follows the rate") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  const RunTrace t = sample_partition(chain, scripted, 0.3, 2, 17, chain.initial_action());
  CHECK(sample_run(chain, scripted, 0.3, 2, 17, chain.initial_action()).states ==
        t.partition.mutated);
  const RunTrace u = sample_partition(chain, scripted, 0.7, 2, 17, chain.initial_action());
  CHECK(sample_run(chain, scripted, 0.7, 2, 17, chain.initial_action()).states ==
        u.partition.normal);
}

TEST_CASE("assignment persists across the trials of one run") {
  // With mu = 0.5 on Chain, a state mutated in trial 1 must stay mutated;
  // the reward of every trial is then identical, since Chain is
  // deterministic and the partition fixes every action.
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const RunTrace one = sample_partition(chain, scripted, 0.5, 1, seed, chain.initial_action());
    const RunTrace five = sample_partition(chain, scripted, 0.5, 5, seed, chain.initial_action());
    REQUIRE(five.average_reward == one.average_reward);
    REQUIRE(five.partition.mutated == one.partition.mutated);
  }
}

TEST_CASE("mu = 0.3 mutates about 30% of first encounters") {
  // Pooled over all first encounters: each one is an independent Bernoulli
  // draw, while a per-run ratio is skewed by early termination.
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  std::size_t mutated = 0;
  std::size_t encountered = 0;
  for (int run = 0; run < 2000; ++run) {
    const RunTrace t = sample_partition(chain, scripted, 0.3, 5, derive_seed(77, run),
                                        chain.initial_action());
    mutated += t.partition.mutated.size();
    encountered += t.partition.mutated.size() + t.partition.normal.size();
  }
  const double fraction = static_cast<double>(mutated) / static_cast<double>(encountered);
  CHECK(fraction >= 0.25);
  CHECK(fraction <= 0.35);
}

TEST_CASE("is_success threshold") {
  CHECK(is_success(0.95, 1.0, 0.9));
  CHECK_FALSE(is_success(0.5, 1.0, 0.9));
  CHECK(is_success(0.9, 1.0, 0.9));
  CHECK_THROWS_AS(is_success(0.5, 0.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(is_success(0.5, -1.0, 0.9), std::invalid_argument);
}

TEST_CASE("chain suites contain or hit the planted set") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  const StateSet k = chain.critical_states();
  SampleConfig cfg{0.8, 5, 200, 4};
  SuiteOptions opts;
  opts.retry_factor = 200;

  const Suite plus = build_suite(chain, scripted, SuiteSign::kPlus, cfg, 0.9, 0.5, opts);
  CHECK(plus.records.size() == 200);
  CHECK(plus.run_mu == 0.8);
  for (const auto& r : plus.records) {
    CHECK(r.succeeded);
    CHECK(std::includes(r.states.begin(), r.states.end(), k.begin(), k.end()));
  }

  const Suite minus = build_suite(chain, scripted, SuiteSign::kMinus, cfg, 0.9, 0.5, opts);
  CHECK(minus.records.size() == 200);
  CHECK(minus.run_mu == doctest::Approx(0.2));
  for (const auto& r : minus.records) {
    CHECK_FALSE(r.succeeded);
    CHECK(r.average_reward <= 0.5);
    const bool hits = std::any_of(k.begin(), k.end(), [&](const auto& s) { return r.states.count(s); });
    CHECK(hits);
  }
  CHECK(minus.attempts >= 200);
  CHECK(minus.acceptance_rate() == doctest::Approx(200.0 / minus.attempts));
}

TEST_CASE("empty suite performs no sampling") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  test::CountingPolicy counting(scripted);
  const Suite s = build_suite(chain, counting, SuiteSign::kPlus, {0.8, 5, 0, 1}, 0.9, 0.5);
  CHECK(s.records.empty());
  CHECK(s.attempts == 0);
  CHECK(counting.queried.empty());
}

TEST_CASE("exhausted retry budget reports the retained count") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  SuiteOptions opts;
  opts.retry_factor = 2;
  try {
    build_suite(chain, scripted, SuiteSign::kPlus, {0.99, 1, 50, 1}, 0.9, 0.5, opts);
    FAIL("expected SuiteBudgetError");
  } catch (const SuiteBudgetError& e) {
    CHECK(e.retained() < 50);
    CHECK(std::string(e.what()).find("100 attempts") != std::string::npos);
  }
  CHECK_THROWS_AS(build_suite(chain, scripted, SuiteSign::kPlus, {0.5, 1, 5, 1}, 0.9, 0.5),
                  std::invalid_argument);
}

TEST_CASE("suites are reproducible record for record") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  const SampleConfig cfg{0.8, 3, 40, 21};
  const Suite a = build_suite(chain, scripted, SuiteSign::kMinus, cfg, 0.9, 0.5);
  const Suite b = build_suite(chain, scripted, SuiteSign::kMinus, cfg, 0.9, 0.5);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].states == b.records[i].states);
    CHECK(a.records[i].average_reward == b.records[i].average_reward);
  }
  CHECK(a.attempts == b.attempts);
  const Suite c = build_suite(chain, scripted, SuiteSign::kMinus, {0.8, 3, 40, 22}, 0.9, 0.5);
  bool differs = false;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    differs = differs || a.records[i].states != c.records[i].states;
  }
  CHECK(differs);
}

TEST_CASE("every attempt reaches the callback") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  std::size_t calls = 0;
  std::size_t successes = 0;
  SuiteOptions opts;
  opts.on_attempt = [&](const RunTrace&, bool ok) {
    ++calls;
    successes += ok ? 1 : 0;
  };
  const Suite s = build_suite(chain, scripted, SuiteSign::kMinus, {0.8, 2, 30, 5}, 0.9, 0.5, opts);
  CHECK(calls == s.attempts);
  CHECK(successes == s.attempts - s.records.size());
}
