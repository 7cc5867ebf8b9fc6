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

#ifndef POLCLUST_PIPELINE_HPP_
#define POLCLUST_PIPELINE_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "polclust/config.hpp"
#include "polclust/extractor.hpp"
#include "polclust/harness.hpp"
#include "polclust/rankers.hpp"
#include "polclust/sampler.hpp"
#include "polclust/vectorizer.hpp"

namespace polclust {

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& cause)
      : std::runtime_error("stage '" + stage + "' failed: " + cause), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// Environment and policy built from a config.
struct Experiment {
  std::unique_ptr<Environment> env;
  std::unique_ptr<Policy> policy;

  static Experiment from_config(const PipelineConfig& config);
  // Evaluation context shared by cluster ranking and every curve.
  RolloutContext evaluation_context(const PipelineConfig& config) const;
};

// Per-purpose seeds, all derived from master_seed.
std::uint64_t baseline_seed(std::uint64_t master_seed);
std::uint64_t evaluation_seed(std::uint64_t master_seed);
std::uint64_t freqvis_seed(std::uint64_t master_seed);
std::uint64_t rand_seed(std::uint64_t master_seed);

struct SampleStage {
  double baseline_reward = 0.0;
  Suite plus;
  Suite minus;
  SpectrumTable spectra;  // over every attempted run of both suites
};

struct MatrixSet {
  Vocabulary vocab;
  ScoreMatrix minus;
  ScoreMatrix plus;
  ScoreMatrix plus_minus;

  const ScoreMatrix& get(MatrixSource s) const;
};

struct ExtractStage {
  std::map<MatrixSource, PcaResult> pca;
  std::vector<Cluster> clusters;  // "-" then "+" then "+-", component order
};

struct RankStage {
  std::vector<RankedCluster> ranked;  // ranked within each source
  StateRanking sbfl;
  StateRanking freqvis;
  StateRanking rand;

  std::vector<RankedCluster> for_source(MatrixSource s) const;
};

struct CurveStage {
  std::vector<Curve> curves;  // cluster-, cluster+, cluster+-, SBFL, FreqVis, Rand
  std::map<std::string, double> auc;
};

struct ReportBundle {
  PipelineConfig config;
  SampleStage sample;
  MatrixSet matrices;
  ExtractStage extract;
  RankStage rank;
  CurveStage curves;
};

inline constexpr MatrixSource kAllSources[] = {MatrixSource::kMinus, MatrixSource::kPlus,
                                               MatrixSource::kPlusMinus};

SampleStage run_sample_stage(const PipelineConfig& config, Experiment& exp);
MatrixSet run_vectorize_stage(const PipelineConfig& config, const Suite& plus,
                              const Suite& minus);
ExtractStage run_extract_stage(const PipelineConfig& config, const MatrixSet& matrices);
RankStage run_rank_stage(const PipelineConfig& config, const std::vector<Cluster>& clusters,
                         const SpectrumTable& spectra, const Vocabulary& vocab,
                         Experiment& exp);
CurveStage run_curve_stage(const PipelineConfig& config, const RankStage& rank,
                           const Vocabulary& vocab, double baseline_reward, Experiment& exp);

// Sample, vectorize, extract, rank and build all six curves. Errors are
// rethrown as PipelineError naming the failing stage.
ReportBundle run_pipeline(const PipelineConfig& config);

nlohmann::json report_json(const ReportBundle& bundle);

// Artifact file names inside an output directory.
namespace artifact {
inline constexpr const char* kSuitePlus = "suite_plus.jsonl";
inline constexpr const char* kSuiteMinus = "suite_minus.jsonl";
inline constexpr const char* kSpectra = "spectra.csv";
inline constexpr const char* kMatrixMinus = "matrix_minus.csv";
inline constexpr const char* kMatrixPlus = "matrix_plus.csv";
inline constexpr const char* kMatrixPlusMinus = "matrix_plusminus.csv";
inline constexpr const char* kClusters = "clusters.json";
inline constexpr const char* kRankingSbfl = "ranking_sbfl.csv";
inline constexpr const char* kRankingFreqVis = "ranking_freqvis.csv";
inline constexpr const char* kRankingRand = "ranking_rand.csv";
inline constexpr const char* kCurves = "curves.csv";
inline constexpr const char* kReport = "report.json";
const char* matrix_file(MatrixSource s);
}  // namespace artifact

void write_sample_artifacts(const SampleStage& stage, const std::filesystem::path& dir);
void write_matrix_artifacts(const MatrixSet& matrices, const std::filesystem::path& dir);
void write_clusters_artifact(const std::vector<Cluster>& clusters,
                             const std::filesystem::path& dir);
void write_rank_artifacts(const RankStage& rank, const std::filesystem::path& dir);
void write_curve_artifacts(const CurveStage& curves, const std::filesystem::path& dir);
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);

SampleStage read_sample_artifacts(const std::filesystem::path& dir);
MatrixSet read_matrix_artifacts(const std::filesystem::path& dir);
RankStage read_rank_artifacts(const std::filesystem::path& dir);

}  // namespace polclust

#endif  // POLCLUST_PIPELINE_HPP_
