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

#ifndef POLCLUST_ARTIFACTS_HPP_
#define POLCLUST_ARTIFACTS_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "polclust/extractor.hpp"
#include "polclust/harness.hpp"
#include "polclust/rankers.hpp"
#include "polclust/sampler.hpp"
#include "polclust/vectorizer.hpp"

namespace polclust {

// Exact header of curve CSV files.
inline constexpr const char* kCurveCsvHeader =
    "method,k,fraction_states_restored,fraction_policy_actions,mean_reward,pct_of_original,stderr";

// Twelve significant digits, as used in every CSV artifact.
std::string format_value(double v);
// Shortest form that reads back to the same double (matrix CSV cells).
std::string format_exact(double v);

// Suites: a header object {"sign", "config", "baseline_reward", ...} on the
// first line, then one {"states", "avg_reward", "succeeded"} per record.
void write_suite_jsonl(std::ostream& out, const Suite& suite);
Suite read_suite_jsonl(std::istream& in);

// Score matrices, one row per recorded run (the transpose of the
// state x run matrix): "sign,normalized_reward,<token>,<token>,...".
void write_matrix_csv(std::ostream& out, const ScoreMatrix& m);
ScoreMatrix read_matrix_csv(std::istream& in);

// Clusters: a JSON array of {"source", "component", "states", "mean_reward",
// "rank"}; the last two are null before ranking.
nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters);
nlohmann::json ranked_clusters_to_json(const std::vector<RankedCluster>& ranked);
std::vector<Cluster> clusters_from_json(const nlohmann::json& j);
std::vector<RankedCluster> ranked_clusters_from_json(const nlohmann::json& j);

// State rankings: "state,score,rank".
void write_ranking_csv(std::ostream& out, const StateRanking& r);
StateRanking read_ranking_csv(std::istream& in);

// Spectra: "state,a_ef,a_ep,a_nf,a_np" plus a leading run-count comment.
void write_spectra_csv(std::ostream& out, const SpectrumTable& t);
SpectrumTable read_spectra_csv(std::istream& in);

void write_curves_csv(std::ostream& out, const std::vector<Curve>& curves);

// File helpers; throw std::runtime_error on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace polclust

#endif  // POLCLUST_ARTIFACTS_HPP_
