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

#include "polclust/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "polclust/eigen_solver.hpp"

namespace polclust {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Index of the largest |coefficient|, lowest index on ties.
std::size_t dominant_index(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  return best;
}

// (1 / (n - 1)) X^T X v without forming the covariance.
std::vector<double> covariance_times(const DataTable& x, std::span<const double> v) {
  std::vector<double> xv(x.rows, 0.0);
  for (std::size_t r = 0; r < x.rows; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < x.cols; ++c) s += x(r, c) * v[c];
    xv[r] = s;
  }
  std::vector<double> out(x.cols, 0.0);
  for (std::size_t r = 0; r < x.rows; ++r) {
    for (std::size_t c = 0; c < x.cols; ++c) out[c] += x(r, c) * xv[r];
  }
  const double scale = 1.0 / static_cast<double>(x.rows - 1);
  for (double& o : out) o *= scale;
  return out;
}

// Deterministic unit vector orthogonal to `basis`: the first standard basis
// vector that survives two Gram-Schmidt passes.
std::vector<double> complete_basis(const std::vector<std::vector<double>>& basis,
                                   std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<double> v(dim, 0.0);
    v[i] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double proj = dot(v, b);
        for (std::size_t k = 0; k < dim; ++k) v[k] -= proj * b[k];
      }
    }
    const double len = norm(v);
    if (len > 0.5) {
      for (double& x : v) x /= len;
      return v;
    }
  }
  throw std::logic_error("complete_basis: basis already spans the space");
}

}  // namespace

DataTable center_columns(DataTable data) {
  if (data.rows < 2) {
    throw std::invalid_argument("centering needs at least 2 observations");
  }
  for (std::size_t c = 0; c < data.cols; ++c) {
    bool constant = true;
    double sum = 0.0;
    for (std::size_t r = 0; r < data.rows; ++r) {
      sum += data(r, c);
      constant = constant && data(r, c) == data(0, c);
    }
    const double mean = sum / static_cast<double>(data.rows);
    for (std::size_t r = 0; r < data.rows; ++r) {
      data(r, c) = constant ? 0.0 : data(r, c) - mean;
    }
  }
  return data;
}

DataTable center_columns_to_observations(const ScoreMatrix& matrix) {
  DataTable t(matrix.column_count(), matrix.row_count());
  for (std::size_t obs = 0; obs < t.rows; ++obs) {
    for (std::size_t f = 0; f < t.cols; ++f) t(obs, f) = matrix.at(f, obs);
  }
  return center_columns(std::move(t));
}

PcaResult principal_components(const DataTable& x, std::size_t sigma, double tol,
                               int max_iterations) {
  const std::size_t n = x.rows;
  const std::size_t p = x.cols;
  if (n < 2) throw std::invalid_argument("PCA needs at least 2 observations");
  if (!(tol > 0.0)) throw std::invalid_argument("PCA tolerance must be positive");
  if (sigma == 0) throw std::invalid_argument("sigma must be >= 1");
  if (sigma > std::min(p, n - 1)) {
    throw std::invalid_argument("sigma=" + std::to_string(sigma) +
                                " exceeds min(#features, #observations - 1)");
  }
  const double inv = 1.0 / static_cast<double>(n - 1);

  std::vector<double> values;
  std::vector<std::optional<std::vector<double>>> vectors;
  if (n < p) {
    // Gram route: X X^T u = (n-1) lambda u  =>  v = X^T u / sqrt((n-1) lambda).
    std::vector<double> gram(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        double s = 0.0;
        for (std::size_t c = 0; c < p; ++c) s += x(i, c) * x(j, c);
        gram[i * n + j] = gram[j * n + i] = s * inv;
      }
    }
    SymmetricEigen eig = symmetric_eigen(gram, n, max_iterations);
    const double top = std::max(eig.values.empty() ? 0.0 : eig.values[0], 0.0);
    for (std::size_t k = 0; k < sigma; ++k) {
      const double lambda = std::max(eig.values[k], 0.0);
      values.push_back(lambda);
      if (lambda <= 1e-12 * top || lambda == 0.0) {
        vectors.emplace_back(std::nullopt);
        continue;
      }
      std::vector<double> v(p, 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < p; ++c) v[c] += x(r, c) * eig.vectors[k][r];
      }
      const double len = norm(v);
      for (double& e : v) e /= len;
      vectors.emplace_back(std::move(v));
    }
  } else {
    std::vector<double> cov(p * p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i; j < p; ++j) {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) s += x(r, i) * x(r, j);
        cov[i * p + j] = cov[j * p + i] = s * inv;
      }
    }
    SymmetricEigen eig = symmetric_eigen(cov, p, max_iterations);
    for (std::size_t k = 0; k < sigma; ++k) {
      values.push_back(std::max(eig.values[k], 0.0));
      vectors.emplace_back(std::move(eig.vectors[k]));
    }
  }

  PcaResult out;
  std::vector<std::vector<double>> accepted;
  for (const auto& v : vectors) {
    if (v) accepted.push_back(*v);
  }
  for (std::size_t k = 0; k < sigma; ++k) {
    if (!vectors[k]) {
      vectors[k] = complete_basis(accepted, p);
      accepted.push_back(*vectors[k]);
    }
    auto& v = *vectors[k];
    if (v[dominant_index(v)] < 0) {
      for (double& e : v) e = -e;
    }
  }

  // Descending eigenvalue; near-equal eigenvalues ordered by dominant index.
  std::vector<std::size_t> order(sigma);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  const double lambda_max = sigma > 0 ? values[order[0]] : 0.0;
  const double tie = 1e-12 * std::max(lambda_max, 1e-300);
  for (std::size_t start = 0; start < sigma;) {
    std::size_t end = start + 1;
    while (end < sigma && values[order[start]] - values[order[end]] <= tie) ++end;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::size_t a, std::size_t b) {
                       return dominant_index(*vectors[a]) < dominant_index(*vectors[b]);
                     });
    start = end;
  }

  for (std::size_t k : order) {
    const auto& v = *vectors[k];
    const std::vector<double> cv = covariance_times(x, v);
    double residual = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      const double d = cv[i] - values[k] * v[i];
      residual += d * d;
    }
    residual = std::sqrt(residual);
    if (residual > tol * lambda_max) {
      throw ConvergenceError("principal_components: eigenpair residual above tolerance",
                             residual);
    }
    out.components.push_back(v);
    out.eigenvalues.push_back(values[k]);
  }
  return out;
}

std::string to_string(MatrixSource source) {
  switch (source) {
    case MatrixSource::kMinus: return "-";
    case MatrixSource::kPlus: return "+";
    case MatrixSource::kPlusMinus: return "+-";
  }
  return "?";
}

MatrixSource matrix_source_from_string(const std::string& s) {
  if (s == "-") return MatrixSource::kMinus;
  if (s == "+") return MatrixSource::kPlus;
  if (s == "+-") return MatrixSource::kPlusMinus;
  throw std::invalid_argument("matrix source must be '-', '+' or '+-', got '" + s + "'");
}

std::string cluster_method_name(MatrixSource source) {
  return "cluster" + to_string(source);
}

std::size_t cluster_budget(double eta, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cluster budget of an empty vocabulary");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must be in (0, 1]");
  const double exact = eta * static_cast<double>(n);
  const double nearest = std::round(exact);
  if (std::abs(exact - nearest) <= 1e-9 * std::max(1.0, exact)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(exact));
}

std::vector<Cluster> extract_clusters(const PcaResult& pca, double eta,
                                      const Vocabulary& vocab, std::size_t sigma,
                                      MatrixSource source) {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must be in (0, 1]");
  const std::size_t budget = cluster_budget(eta, vocab.size());
  if (budget == 0) throw std::invalid_argument("cluster size ceil(eta * |S|) is 0");
  if (sigma > pca.components.size()) {
    throw std::invalid_argument("sigma exceeds the number of computed components");
  }

  std::vector<Cluster> clusters;
  for (std::size_t k = 0; k < sigma; ++k) {
    const auto& coef = pca.components[k];
    if (coef.size() != vocab.size()) {
      throw std::invalid_argument("component length does not match the vocabulary");
    }
    std::vector<std::size_t> idx(coef.size());
    std::iota(idx.begin(), idx.end(), 0);
    // Vocabulary order is token order, so the index breaks ties.
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(budget),
                      idx.end(), [&](std::size_t a, std::size_t b) {
                        const double fa = std::abs(coef[a]);
                        const double fb = std::abs(coef[b]);
                        return fa != fb ? fa > fb : a < b;
                      });
    Cluster c;
    c.source = source;
    c.component = k;
    for (std::size_t i = 0; i < budget; ++i) c.states.insert(vocab.at(idx[i]));
    clusters.push_back(std::move(c));
  }
  return clusters;
}

std::vector<RankedCluster> rank_clusters(const std::vector<Cluster>& clusters,
                                         const RolloutContext& ctx) {
  std::vector<RankedCluster> ranked;
  ranked.reserve(clusters.size());
  for (const auto& c : clusters) {
    const Evaluation ev = evaluate_restored(ctx, c.states);
    ranked.push_back({c, ev.mean_reward, ev.std_error, 0});
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedCluster& a, const RankedCluster& b) {
                     if (a.mean_reward != b.mean_reward) return a.mean_reward > b.mean_reward;
                     if (a.cluster.source != b.cluster.source) {
                       return a.cluster.source < b.cluster.source;
                     }
                     return a.cluster.component < b.cluster.component;
                   });
  for (std::size_t i = 0; i < ranked.size(); ++i) ranked[i].rank = i + 1;
  return ranked;
}

}  // namespace polclust
