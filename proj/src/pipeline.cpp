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

#include "polclust/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "polclust/artifacts.hpp"

namespace polclust {
namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, e.what());
  }
}

std::filesystem::path in_dir(const std::filesystem::path& dir, const char* file) {
  return dir / file;
}

template <class Writer>
void write_with(const std::filesystem::path& path, Writer&& writer) {
  std::ostringstream os;
  writer(os);
  write_text_file(path, os.str());
}

template <class Reader>
auto read_with(const std::filesystem::path& path, Reader&& reader) {
  std::istringstream is(read_text_file(path));
  return reader(is);
}

}  // namespace

Experiment Experiment::from_config(const PipelineConfig& config) {
  Experiment e;
  e.env = make_environment(config.env);
  e.policy = load_policy(config.policy, *e.env);
  return e;
}

RolloutContext Experiment::evaluation_context(const PipelineConfig& config) const {
  return RolloutContext{*env, *policy, config.episodes, evaluation_seed(config.master_seed)};
}

std::uint64_t baseline_seed(std::uint64_t m) { return derive_seed(m, 0xba5e); }
std::uint64_t evaluation_seed(std::uint64_t m) { return derive_seed(m, 0xe7a1); }
std::uint64_t freqvis_seed(std::uint64_t m) { return derive_seed(m, 0xf4e9); }
std::uint64_t rand_seed(std::uint64_t m) { return derive_seed(m, 0x7a4d); }

const ScoreMatrix& MatrixSet::get(MatrixSource s) const {
  switch (s) {
    case MatrixSource::kMinus: return minus;
    case MatrixSource::kPlus: return plus;
    case MatrixSource::kPlusMinus: return plus_minus;
  }
  throw std::logic_error("unknown matrix source");
}

std::vector<RankedCluster> RankStage::for_source(MatrixSource s) const {
  std::vector<RankedCluster> out;
  for (const auto& r : ranked) {
    if (r.cluster.source == s) out.push_back(r);
  }
  return out;
}

SampleStage run_sample_stage(const PipelineConfig& config, Experiment& exp) {
  SampleStage out;
  out.baseline_reward = mean_policy_reward(*exp.env, *exp.policy,
                                           std::max(30, config.episodes),
                                           baseline_seed(config.master_seed));
  SampleConfig sc{config.mu_plus, config.trials, config.suite_size, config.master_seed};
  SuiteOptions opts;
  opts.retry_factor = config.retry_factor;
  opts.baseline_reward = out.baseline_reward;
  opts.on_attempt = [&out](const RunTrace& t, bool succeeded) {
    out.spectra.add(t.partition, succeeded);
  };
  out.plus = build_suite(*exp.env, *exp.policy, SuiteSign::kPlus, sc, config.rho_success,
                         config.rho_failure, opts);
  out.minus = build_suite(*exp.env, *exp.policy, SuiteSign::kMinus, sc, config.rho_success,
                          config.rho_failure, opts);
  return out;
}

MatrixSet run_vectorize_stage(const PipelineConfig& config, const Suite& plus,
                              const Suite& minus) {
  MatrixSet m;
  m.vocab = Vocabulary::from_suites(plus, minus);
  m.minus = vectorize_suite(minus, m.vocab, config.delta);
  m.plus = vectorize_suite(plus, m.vocab, config.delta);
  m.plus_minus = concatenate_columns(m.plus, m.minus);
  return m;
}

ExtractStage run_extract_stage(const PipelineConfig& config, const MatrixSet& matrices) {
  ExtractStage out;
  for (MatrixSource source : kAllSources) {
    const DataTable centered = center_columns_to_observations(matrices.get(source));
    const std::size_t sigma = std::min<std::size_t>(
        static_cast<std::size_t>(config.sigma), std::min(centered.cols, centered.rows - 1));
    PcaResult pca = principal_components(centered, sigma);
    auto clusters = extract_clusters(pca, config.eta, matrices.vocab, sigma, source);
    out.clusters.insert(out.clusters.end(), clusters.begin(), clusters.end());
    out.pca.emplace(source, std::move(pca));
  }
  return out;
}

RankStage run_rank_stage(const PipelineConfig& config, const std::vector<Cluster>& clusters,
                         const SpectrumTable& spectra, const Vocabulary& vocab,
                         Experiment& exp) {
  RankStage out;
  const RolloutContext ctx = exp.evaluation_context(config);
  for (MatrixSource source : kAllSources) {
    std::vector<Cluster> group;
    for (const auto& c : clusters) {
      if (c.source == source) group.push_back(c);
    }
    auto ranked = rank_clusters(group, ctx);
    out.ranked.insert(out.ranked.end(), ranked.begin(), ranked.end());
  }
  out.sbfl = sbfl_rank(spectra, vocab, config.sbfl_formula);
  out.freqvis = freqvis_rank(RolloutContext{*exp.env, *exp.policy, config.episodes,
                                            freqvis_seed(config.master_seed)},
                             vocab);
  out.rand = rand_rank(vocab, rand_seed(config.master_seed));
  return out;
}

CurveStage run_curve_stage(const PipelineConfig& config, const RankStage& rank,
                           const Vocabulary& vocab, double baseline_reward, Experiment& exp) {
  CurveStage out;
  const RolloutContext ctx = exp.evaluation_context(config);
  for (MatrixSource source : kAllSources) {
    const auto ranked = rank.for_source(source);
    if (ranked.empty()) continue;
    out.curves.push_back(curve_for_clusters(cluster_method_name(source), ranked, vocab.size(),
                                            baseline_reward, ctx));
  }
  const std::size_t increment = std::max<std::size_t>(1, cluster_budget(config.eta, vocab.size()));
  out.curves.push_back(curve_for_state_ranking("SBFL", rank.sbfl, increment, baseline_reward, ctx));
  out.curves.push_back(
      curve_for_state_ranking("FreqVis", rank.freqvis, increment, baseline_reward, ctx));
  out.curves.push_back(curve_for_state_ranking("Rand", rank.rand, increment, baseline_reward, ctx));
  for (const auto& c : out.curves) out.auc[c.method] = restoration_auc(c);
  return out;
}

ReportBundle run_pipeline(const PipelineConfig& config) {
  stage("validate", [&] {
    config.validate();
    return 0;
  });
  ReportBundle b;
  b.config = config;
  Experiment exp = stage("setup", [&] { return Experiment::from_config(config); });
  b.sample = stage("sample", [&] { return run_sample_stage(config, exp); });
  b.matrices = stage("vectorize", [&] {
    return run_vectorize_stage(config, b.sample.plus, b.sample.minus);
  });
  b.extract = stage("extract", [&] { return run_extract_stage(config, b.matrices); });
  b.rank = stage("rank", [&] {
    return run_rank_stage(config, b.extract.clusters, b.sample.spectra, b.matrices.vocab, exp);
  });
  b.curves = stage("curve", [&] {
    return run_curve_stage(config, b.rank, b.matrices.vocab, b.sample.baseline_reward, exp);
  });
  return b;
}

nlohmann::json report_json(const ReportBundle& b) {
  nlohmann::json suites = nlohmann::json::object();
  for (const Suite* s : {&b.sample.plus, &b.sample.minus}) {
    suites[to_string(s->sign)] = {{"run_mu", s->run_mu},
                                  {"attempts", s->attempts},
                                  {"retained", s->records.size()},
                                  {"acceptance_rate", s->acceptance_rate()}};
  }
  nlohmann::json pca = nlohmann::json::object();
  for (const auto& [source, result] : b.extract.pca) {
    pca[to_string(source)] = {{"eigenvalues", result.eigenvalues}};
  }
  return {{"config", b.config.to_json()},
          {"baseline_reward", b.sample.baseline_reward},
          {"suites", suites},
          {"vocabulary_size", b.matrices.vocab.size()},
          {"cluster_size", cluster_budget(b.config.eta, b.matrices.vocab.size())},
          {"pca", pca},
          {"clusters", ranked_clusters_to_json(b.rank.ranked)},
          {"auc", b.curves.auc}};
}

namespace artifact {
const char* matrix_file(MatrixSource s) {
  switch (s) {
    case MatrixSource::kMinus: return kMatrixMinus;
    case MatrixSource::kPlus: return kMatrixPlus;
    case MatrixSource::kPlusMinus: return kMatrixPlusMinus;
  }
  return "";
}
}  // namespace artifact

void write_sample_artifacts(const SampleStage& stage, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_with(in_dir(dir, artifact::kSuitePlus),
             [&](std::ostream& os) { write_suite_jsonl(os, stage.plus); });
  write_with(in_dir(dir, artifact::kSuiteMinus),
             [&](std::ostream& os) { write_suite_jsonl(os, stage.minus); });
  write_with(in_dir(dir, artifact::kSpectra),
             [&](std::ostream& os) { write_spectra_csv(os, stage.spectra); });
}

void write_matrix_artifacts(const MatrixSet& m, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (MatrixSource s : kAllSources) {
    write_with(in_dir(dir, artifact::matrix_file(s)),
               [&](std::ostream& os) { write_matrix_csv(os, m.get(s)); });
  }
}

void write_clusters_artifact(const std::vector<Cluster>& clusters,
                             const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(in_dir(dir, artifact::kClusters), clusters_to_json(clusters).dump(2) + "\n");
}

void write_rank_artifacts(const RankStage& rank, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_text_file(in_dir(dir, artifact::kClusters),
                  ranked_clusters_to_json(rank.ranked).dump(2) + "\n");
  write_with(in_dir(dir, artifact::kRankingSbfl),
             [&](std::ostream& os) { write_ranking_csv(os, rank.sbfl); });
  write_with(in_dir(dir, artifact::kRankingFreqVis),
             [&](std::ostream& os) { write_ranking_csv(os, rank.freqvis); });
  write_with(in_dir(dir, artifact::kRankingRand),
             [&](std::ostream& os) { write_ranking_csv(os, rank.rand); });
}

void write_curve_artifacts(const CurveStage& curves, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_with(in_dir(dir, artifact::kCurves),
             [&](std::ostream& os) { write_curves_csv(os, curves.curves); });
}

void write_bundle(const ReportBundle& b, const std::filesystem::path& dir) {
  write_sample_artifacts(b.sample, dir);
  write_matrix_artifacts(b.matrices, dir);
  write_rank_artifacts(b.rank, dir);
  write_curve_artifacts(b.curves, dir);
  write_text_file(in_dir(dir, artifact::kReport), report_json(b).dump(2) + "\n");
}

SampleStage read_sample_artifacts(const std::filesystem::path& dir) {
  SampleStage s;
  s.plus = read_with(in_dir(dir, artifact::kSuitePlus),
                     [](std::istream& is) { return read_suite_jsonl(is); });
  s.minus = read_with(in_dir(dir, artifact::kSuiteMinus),
                      [](std::istream& is) { return read_suite_jsonl(is); });
  s.spectra = read_with(in_dir(dir, artifact::kSpectra),
                        [](std::istream& is) { return read_spectra_csv(is); });
  s.baseline_reward = s.plus.baseline_reward;
  return s;
}

MatrixSet read_matrix_artifacts(const std::filesystem::path& dir) {
  MatrixSet m;
  m.minus = read_with(in_dir(dir, artifact::kMatrixMinus),
                      [](std::istream& is) { return read_matrix_csv(is); });
  m.plus = read_with(in_dir(dir, artifact::kMatrixPlus),
                     [](std::istream& is) { return read_matrix_csv(is); });
  m.plus_minus = read_with(in_dir(dir, artifact::kMatrixPlusMinus),
                           [](std::istream& is) { return read_matrix_csv(is); });
  m.vocab = m.minus.rows;
  return m;
}

RankStage read_rank_artifacts(const std::filesystem::path& dir) {
  RankStage r;
  r.ranked = ranked_clusters_from_json(nlohmann::json::parse(read_text_file(in_dir(dir, artifact::kClusters))));
  r.sbfl = read_with(in_dir(dir, artifact::kRankingSbfl),
                     [](std::istream& is) { return read_ranking_csv(is); });
  r.freqvis = read_with(in_dir(dir, artifact::kRankingFreqVis),
                        [](std::istream& is) { return read_ranking_csv(is); });
  r.rand = read_with(in_dir(dir, artifact::kRankingRand),
                     [](std::istream& is) { return read_ranking_csv(is); });
  return r;
}

}  // namespace polclust
