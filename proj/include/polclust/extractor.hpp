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

#ifndef POLCLUST_EXTRACTOR_HPP_
#define POLCLUST_EXTRACTOR_HPP_

#include <string>
#include <vector>

#include "polclust/evaluation.hpp"
#include "polclust/vectorizer.hpp"

namespace polclust {

// Dense observations x features table, row-major.
struct DataTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  DataTable() = default;
  DataTable(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

// Subtracts each feature's mean. Constant features become exactly zero.
// Requires at least two observations.
DataTable center_columns(DataTable data);

// Observations are the matrix columns (recorded runs), features are states.
DataTable center_columns_to_observations(const ScoreMatrix& matrix);

struct PcaResult {
  std::vector<std::vector<double>> components;  // each of length #features
  std::vector<double> eigenvalues;              // non-increasing, >= 0
};

// Top-`sigma` eigenpairs of the sample covariance of centered data. Uses the
// Gram matrix when there are fewer observations than features. Each
// component's largest-magnitude coefficient is made positive (lowest index
// on ties); equal eigenvalues are ordered by that coefficient's index.
// Throws ConvergenceError when a pair's residual exceeds tol * lambda_max.
PcaResult principal_components(const DataTable& centered, std::size_t sigma,
                               double tol = 1e-10, int max_iterations = 10000);

enum class MatrixSource { kMinus = 0, kPlus = 1, kPlusMinus = 2 };

std::string to_string(MatrixSource source);
MatrixSource matrix_source_from_string(const std::string& s);
// Method label used in curves and reports: "cluster-", "cluster+", "cluster+-".
std::string cluster_method_name(MatrixSource source);

struct Cluster {
  StateSet states;
  MatrixSource source = MatrixSource::kMinus;
  std::size_t component = 0;
};

struct RankedCluster {
  Cluster cluster;
  double mean_reward = 0.0;
  double std_error = 0.0;
  std::size_t rank = 0;  // 1-based
};

// ceil(eta * n), guarding against floating error when eta * n is integral.
std::size_t cluster_budget(double eta, std::size_t n);

// For each of the first `sigma` components, the cluster_budget(eta, |S|)
// states with the largest |coefficient|; ties go to the lower token.
std::vector<Cluster> extract_clusters(const PcaResult& pca, double eta,
                                      const Vocabulary& vocab, std::size_t sigma,
                                      MatrixSource source = MatrixSource::kMinus);

// Evaluates each cluster as the restored set of a pruned policy and sorts by
// mean reward, ties by (source, component).
std::vector<RankedCluster> rank_clusters(const std::vector<Cluster>& clusters,
                                         const RolloutContext& ctx);

}  // namespace polclust

#endif  // POLCLUST_EXTRACTOR_HPP_
