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

// Command line front end. Every stage reads its inputs from and writes its
// outputs to the --out directory, so the stages can be chained by hand or
// run all at once with `pipeline`.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "polclust/artifacts.hpp"
#include "polclust/chain_env.hpp"
#include "polclust/harness.hpp"
#include "polclust/ledger.hpp"
#include "polclust/pipeline.hpp"

namespace fs = std::filesystem;
using namespace polclust;

namespace {

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out = "polclust_out";
};

PipelineConfig load_config(const GlobalOptions& g) {
  PipelineConfig c;
  if (g.config_path.empty()) {
    c = PipelineConfig::from_json({{"env", ChainEnv::default_spec().to_json()}});
  } else {
    c = PipelineConfig::load(g.config_path);
  }
  if (g.seed) c.master_seed = *g.seed;
  return c;
}

void print_written(const fs::path& dir, std::initializer_list<const char*> files) {
  for (const char* f : files) std::cout << "wrote " << (dir / f).string() << '\n';
}

void cmd_sample(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  Experiment exp = Experiment::from_config(c);
  const SampleStage s = run_sample_stage(c, exp);
  write_sample_artifacts(s, g.out);
  std::cout << "baseline_reward " << format_value(s.baseline_reward) << '\n'
            << "suite + retained " << s.plus.records.size() << " of " << s.plus.attempts
            << " attempts\n"
            << "suite - retained " << s.minus.records.size() << " of " << s.minus.attempts
            << " attempts\n";
  print_written(g.out, {artifact::kSuitePlus, artifact::kSuiteMinus, artifact::kSpectra});
}

void cmd_vectorize(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  const SampleStage s = read_sample_artifacts(g.out);
  const MatrixSet m = run_vectorize_stage(c, s.plus, s.minus);
  write_matrix_artifacts(m, g.out);
  std::cout << "vocabulary " << m.vocab.size() << " states\n";
  print_written(g.out, {artifact::kMatrixMinus, artifact::kMatrixPlus, artifact::kMatrixPlusMinus});
}

void cmd_extract(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  const MatrixSet m = read_matrix_artifacts(g.out);
  const ExtractStage e = run_extract_stage(c, m);
  write_clusters_artifact(e.clusters, g.out);
  std::cout << e.clusters.size() << " clusters of "
            << cluster_budget(c.eta, m.vocab.size()) << " states\n";
  print_written(g.out, {artifact::kClusters});
}

void cmd_rank(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  Experiment exp = Experiment::from_config(c);
  const SampleStage s = read_sample_artifacts(g.out);
  const MatrixSet m = read_matrix_artifacts(g.out);
  const auto clusters = clusters_from_json(
      nlohmann::json::parse(read_text_file(fs::path(g.out) / artifact::kClusters)));
  const RankStage r = run_rank_stage(c, clusters, s.spectra, m.vocab, exp);
  write_rank_artifacts(r, g.out);
  print_written(g.out, {artifact::kClusters, artifact::kRankingSbfl, artifact::kRankingFreqVis,
                        artifact::kRankingRand});
}

void cmd_curve(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  Experiment exp = Experiment::from_config(c);
  const SampleStage s = read_sample_artifacts(g.out);
  const MatrixSet m = read_matrix_artifacts(g.out);
  const RankStage r = read_rank_artifacts(g.out);
  const CurveStage curves = run_curve_stage(c, r, m.vocab, s.baseline_reward, exp);
  write_curve_artifacts(curves, g.out);
  for (const auto& [method, auc] : curves.auc) {
    std::cout << "auc " << method << ' ' << format_value(auc) << '\n';
  }
  print_written(g.out, {artifact::kCurves});
}

void cmd_oracle(const GlobalOptions& g, std::size_t k, std::optional<int> episodes) {
  PipelineConfig c = load_config(g);
  if (episodes) c.episodes = *episodes;
  Experiment exp = Experiment::from_config(c);
  const SubsetResult best = brute_force_best_subset(exp.evaluation_context(c), k);
  nlohmann::json states = nlohmann::json::array();
  for (const auto& st : best.states) states.push_back(st.token());
  const nlohmann::json j = {{"k", k},
                            {"episodes", c.episodes},
                            {"states", states},
                            {"mean_reward", best.mean_reward},
                            {"subsets_evaluated", best.evaluated}};
  fs::create_directories(g.out);
  write_text_file(fs::path(g.out) / "oracle.json", j.dump(2) + "\n");
  std::cout << j.dump() << '\n';
}

void cmd_pipeline(const GlobalOptions& g) {
  const PipelineConfig c = load_config(g);
  const ReportBundle b = run_pipeline(c);
  write_bundle(b, g.out);
  for (const auto& [method, auc] : b.curves.auc) {
    std::cout << "auc " << method << ' ' << format_value(auc) << '\n';
  }
  std::cout << "artifacts in " << g.out << '\n';
}

void cmd_ledger(bool as_json) {
  if (as_json) {
    std::cout << ledger_json().dump(2) << '\n';
  } else {
    std::cout << emit_ledger();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polclust: rank clusters of policy decisions by reward contribution"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON config file (default: Chain defaults)")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", g.seed, "Override master_seed");
  app.add_option("--out", g.out, "Artifact directory")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Sample the + and - suites and SBFL spectra");
  auto* vectorize = app.add_subcommand("vectorize", "Build score matrices from the suites");
  auto* extract = app.add_subcommand("extract", "Extract PCA clusters from the matrices");
  auto* rank = app.add_subcommand("rank", "Rank clusters and build SBFL/FreqVis/Rand rankings");
  auto* curve = app.add_subcommand("curve", "Build restoration curves from the rankings");
  auto* oracle = app.add_subcommand("oracle", "Exhaustive best k-subset of restored states");
  std::size_t oracle_k = 1;
  std::optional<int> oracle_episodes;
  oracle->add_option("--k", oracle_k, "Subset size")->required();
  oracle->add_option("--episodes", oracle_episodes, "Evaluation episodes per subset");
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage and write a report");
  auto* ledger = app.add_subcommand("ledger", "Print the hyperparameter table");
  bool ledger_json_flag = false;
  ledger->add_flag("--json", ledger_json_flag, "Emit JSON instead of markdown");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sample) cmd_sample(g);
    if (*vectorize) cmd_vectorize(g);
    if (*extract) cmd_extract(g);
    if (*rank) cmd_rank(g);
    if (*curve) cmd_curve(g);
    if (*oracle) cmd_oracle(g, oracle_k, oracle_episodes);
    if (*pipeline) cmd_pipeline(g);
    if (*ledger) cmd_ledger(ledger_json_flag);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
