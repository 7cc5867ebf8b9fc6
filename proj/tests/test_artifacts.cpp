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
#include <sstream>

#include "doctest.h"
#include "polclust/artifacts.hpp"
#include "polclust/config.hpp"
#include "support.hpp"

using namespace polclust;

TEST_CASE("curve csv header is exact") {
  std::ostringstream os;
  Curve c{"SBFL", {CurvePoint{0, 0.0, 0.0, 0.25, 0.5, 0.125}}};
  write_curves_csv(os, {c});
  CHECK(os.str() ==
        "method,k,fraction_states_restored,fraction_policy_actions,mean_reward,pct_of_original,"
        "stderr\nSBFL,0,0,0,0.25,0.5,0.125\n");
}

TEST_CASE("values print with twelve significant digits") {
  CHECK(format_value(1.0 / 3.0) == "0.333333333333");
  CHECK(format_value(0.0) == "0");
  CHECK(format_value(-2.5) == "-2.5");
}

TEST_CASE("matrix csv keeps every double") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  ScoreMatrix m;
  m.rows = Vocabulary({EncodedState("10"), EncodedState("2"), EncodedState("x:1")});
  for (int c = 0; c < 4; ++c) {
    m.columns.push_back({d(rng), 0.0, d(rng)});
    m.column_meta.push_back({c % 2 ? SuiteSign::kMinus : SuiteSign::kPlus, d(rng)});
  }
  std::stringstream ss;
  write_matrix_csv(ss, m);
  const ScoreMatrix back = read_matrix_csv(ss);
  CHECK(back.rows.states() == m.rows.states());
  CHECK(back.columns == m.columns);
  for (int c = 0; c < 4; ++c) {
    CHECK(back.column_meta[c].sign == m.column_meta[c].sign);
    CHECK(back.column_meta[c].normalized_reward == m.column_meta[c].normalized_reward);
  }
  std::istringstream bad("sign,normalized_reward,1\n+,0.5\n");
  CHECK_THROWS(read_matrix_csv(bad));
  std::istringstream unsorted("sign,normalized_reward,2,1\n");
  CHECK_THROWS(read_matrix_csv(unsorted));
}

TEST_CASE("suite jsonl layout") {
  Suite s;
  s.sign = SuiteSign::kMinus;
  s.config = {0.8, 5, 2, 9};
  s.baseline_reward = 1.0;
  s.run_mu = 1.0 - 0.8;
  s.attempts = 4;
  s.records.push_back({test::states_of({"3", "7"}), 0.0, false});
  s.records.push_back({test::states_of({"49"}), 0.2, false});
  std::stringstream ss;
  write_suite_jsonl(ss, s);
  std::string first;
  std::getline(ss, first);
  const auto header = nlohmann::json::parse(first);
  CHECK(header.at("sign") == "-");
  CHECK(header.at("baseline_reward") == 1.0);
  CHECK(header.at("config").at("suite_size") == 2);
  std::string line;
  std::getline(ss, line);
  const auto rec = nlohmann::json::parse(line);
  CHECK(rec.at("states") == nlohmann::json{"3", "7"});
  CHECK(rec.at("avg_reward") == 0.0);
  CHECK(rec.at("succeeded") == false);
  ss.clear();
  ss.seekg(0);
  const Suite back = read_suite_jsonl(ss);
  CHECK(back.records.size() == 2);
  CHECK(back.records[1].states == s.records[1].states);
  CHECK(back.attempts == 4);
  CHECK(back.run_mu == s.run_mu);
}

TEST_CASE("clusters json") {
  RankedCluster r;
  r.cluster = {test::states_of({"1", "2"}), MatrixSource::kPlusMinus, 3};
  r.mean_reward = 0.5;
  r.rank = 1;
  const auto j = ranked_clusters_to_json({r});
  CHECK(j[0].at("source") == "+-");
  CHECK(j[0].at("component") == 3);
  CHECK(j[0].at("states") == nlohmann::json{"1", "2"});
  CHECK(j[0].at("mean_reward") == 0.5);
  CHECK(j[0].at("rank") == 1);
  const auto back = ranked_clusters_from_json(j);
  CHECK(back[0].cluster.states == r.cluster.states);
  const auto unranked = clusters_to_json({r.cluster});
  CHECK(unranked[0].at("rank").is_null());
  CHECK(clusters_from_json(unranked)[0].component == 3);
  CHECK_THROWS(ranked_clusters_from_json(unranked));
}

TEST_CASE("ranking and spectra csv") {
  StateRanking r;
  r.entries = {{EncodedState("b"), 2.0}, {EncodedState("a"), 1.0}};
  std::stringstream ss;
  write_ranking_csv(ss, r);
  CHECK(ss.str() == "state,score,rank\nb,2,1\na,1,2\n");
  CHECK(read_ranking_csv(ss).entries == r.entries);

  SpectrumTable t;
  MutationPartition p;
  p.mutated = test::states_of({"a"});
  p.normal = test::states_of({"b"});
  t.add(p, false);
  t.add(p, true);
  std::stringstream sp;
  write_spectra_csv(sp, t);
  const SpectrumTable back = read_spectra_csv(sp);
  CHECK(back.entries() == t.entries());
  CHECK(back.run_count() == 2);
}

TEST_CASE("config defaults, validation and round trip") {
  const PipelineConfig c =
      PipelineConfig::from_json({{"env", ChainEnv::default_spec().to_json()}});
  CHECK(c.policy == "scripted");
  CHECK(c.mu_plus == 0.8);
  CHECK(c.suite_size == 500);
  CHECK(c.trials == 5);
  CHECK(c.delta == 10.0);
  CHECK(c.sigma == 10);
  CHECK(c.eta == 0.05);
  CHECK(c.rho_success == 0.9);
  CHECK(c.rho_failure == 0.5);
  CHECK(c.episodes == 30);
  CHECK(PipelineConfig::from_json(c.to_json()).to_json() == c.to_json());

  auto with = [&](const char* key, nlohmann::json v) {
    nlohmann::json j = c.to_json();
    j[key] = std::move(v);
    return j;
  };
  CHECK_THROWS_AS(PipelineConfig::from_json(with("mu_plus", 0.5)), std::invalid_argument);
  CHECK_NOTHROW(PipelineConfig::from_json(with("mu_plus", 1.0)));
  CHECK_THROWS_AS(PipelineConfig::from_json(with("delta", 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(PipelineConfig::from_json(with("suite_size", 2.5)), std::invalid_argument);
  CHECK_THROWS_AS(PipelineConfig::from_json(with("eta", 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(PipelineConfig::from_json(with("rho_failure", 0.95)), std::invalid_argument);
  CHECK_THROWS_AS(PipelineConfig::from_json(with("episodes", "many")), std::invalid_argument);
  CHECK_THROWS_AS(PipelineConfig::from_json(with("sbfl_formula", "x")), std::invalid_argument);
  CHECK_THROWS(PipelineConfig::from_json(nlohmann::json::object()));
  CHECK_THROWS(PipelineConfig::load("/nonexistent.json"));
  CHECK(default_policy_for("gridcone") == "bfs");
}
