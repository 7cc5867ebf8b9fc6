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

#include <random>

#include "doctest.h"
#include "polclust/extractor.hpp"
#include "polclust/harness.hpp"
#include "support.hpp"

using namespace polclust;

namespace {

Vocabulary numbered(int n) {
  std::vector<EncodedState> v;
  for (int i = 0; i < n; ++i) v.emplace_back(std::to_string(i));
  return Vocabulary(v);
}

PcaResult single_component(std::vector<double> coefficients) {
  PcaResult p;
  p.components.push_back(std::move(coefficients));
  p.eigenvalues.push_back(1.0);
  return p;
}

}  // namespace

TEST_CASE("cluster budget") {
  CHECK(cluster_budget(0.05, 50) == 3);
  CHECK(cluster_budget(0.1, 30) == 3);
  CHECK(cluster_budget(0.3, 10) == 3);
  CHECK(cluster_budget(1.0, 7) == 7);
  CHECK(cluster_budget(0.01, 5) == 1);
  CHECK_THROWS(cluster_budget(0.5, 0));
  CHECK_THROWS(cluster_budget(0.0, 5));
}

TEST_CASE("top-magnitude selection") {
  const auto c = extract_clusters(single_component({0.9, -0.8, 0.1, 0.05}), 0.5, numbered(4), 1);
  REQUIRE(c.size() == 1);
  CHECK(c[0].states == test::states_of({"0", "1"}));
  CHECK(c[0].component == 0);
  CHECK(c[0].source == MatrixSource::kMinus);
}

TEST_CASE("ties go to the lower token") {
  const auto c = extract_clusters(single_component({0.5, -0.5, 0.3}), 1.0 / 3.0, numbered(3), 1);
  CHECK(c[0].states == test::states_of({"0"}));
  const auto d = extract_clusters(single_component({-0.5, 0.3, 0.5}), 1.0 / 3.0, numbered(3), 1);
  CHECK(d[0].states == test::states_of({"0"}));
}

TEST_CASE("negating components does not change clusters") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 100; ++trial) {
    PcaResult p;
    for (int k = 0; k < 3; ++k) {
      std::vector<double> v(20);
      for (double& x : v) x = d(rng);
      p.components.push_back(v);
      p.eigenvalues.push_back(1.0);
    }
    PcaResult flipped = p;
    for (double& x : flipped.components[1]) x = -x;
    const auto a = extract_clusters(p, 0.2, numbered(20), 3, MatrixSource::kPlus);
    const auto b = extract_clusters(flipped, 0.2, numbered(20), 3, MatrixSource::kPlus);
    REQUIRE(a.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(a[k].states == b[k].states);
      CHECK(a[k].states.size() == 4);
      CHECK(a[k].component == k);
    }
  }
}

TEST_CASE("extract_clusters argument checks") {
  CHECK_THROWS(extract_clusters(single_component({1, 0}), 0.5, numbered(2), 2));
  CHECK_THROWS(extract_clusters(single_component({1, 0}), 0.0, numbered(2), 1));
  CHECK_THROWS(extract_clusters(single_component({1, 0, 0}), 0.5, numbered(2), 1));
}

TEST_CASE("source names") {
  for (MatrixSource s : {MatrixSource::kMinus, MatrixSource::kPlus, MatrixSource::kPlusMinus}) {
    CHECK(matrix_source_from_string(to_string(s)) == s);
  }
  CHECK(cluster_method_name(MatrixSource::kPlusMinus) == "cluster+-");
  CHECK_THROWS(matrix_source_from_string("*"));
}

TEST_CASE("cluster ranking on chain") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  RolloutContext ctx{chain, scripted, 30, 3};

  Cluster everything{test::all_states(chain), MatrixSource::kPlus, 4};
  Cluster off_path{test::states_of({"0", "1", "2"}), MatrixSource::kMinus, 0};
  Cluster twin_a{test::states_of({"5", "6"}), MatrixSource::kPlusMinus, 1};
  Cluster twin_b{test::states_of({"5", "6"}), MatrixSource::kMinus, 2};
  const auto ranked = rank_clusters({off_path, everything, twin_a, twin_b}, ctx);
  REQUIRE(ranked.size() == 4);
  CHECK(ranked[0].cluster.states == everything.states);
  CHECK(ranked[0].mean_reward == 1.0);
  CHECK(ranked[0].rank == 1);
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(ranked[i].mean_reward <= 0.1);
    CHECK(ranked[i].rank == i + 1);
    CHECK(ranked[i].mean_reward <= ranked[i - 1].mean_reward);
  }
  // Equal rewards: "-" before "+-", then component index.
  CHECK(ranked[1].cluster.source == MatrixSource::kMinus);
  CHECK(ranked[1].cluster.component == 0);
  CHECK(ranked[2].cluster.source == MatrixSource::kMinus);
  CHECK(ranked[2].cluster.component == 2);
  CHECK(ranked[3].cluster.source == MatrixSource::kPlusMinus);
}

TEST_CASE("clusters without planted states earn at most 0.1") {
  ChainEnv chain = test::default_chain();
  const TabularPolicy scripted = chain_scripted_policy(chain);
  RolloutContext ctx{chain, scripted, 5, 3};
  const StateSet k = chain.critical_states();
  StateSet rest;
  for (const auto& s : test::all_states(chain)) {
    if (!k.count(s)) rest.insert(s);
  }
  const auto ranked = rank_clusters({Cluster{rest, MatrixSource::kMinus, 0}}, ctx);
  CHECK(ranked[0].mean_reward <= 0.1);
}

TEST_CASE("centering a score matrix puts runs on the rows") {
  ScoreMatrix m;
  m.rows = numbered(2);
  m.columns = {{1.0, 4.0}, {3.0, 4.0}};
  m.column_meta = {{SuiteSign::kPlus, 0.0}, {SuiteSign::kPlus, 1.0}};
  const DataTable t = center_columns_to_observations(m);
  CHECK(t.rows == 2);
  CHECK(t.cols == 2);
  CHECK(t.values == std::vector<double>{-1, 0, 1, 0});
  ScoreMatrix one = m;
  one.columns.pop_back();
  one.column_meta.pop_back();
  CHECK_THROWS(center_columns_to_observations(one));
}
