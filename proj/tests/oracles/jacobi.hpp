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

#ifndef POLCLUST_TESTS_ORACLES_JACOBI_HPP_
#define POLCLUST_TESTS_ORACLES_JACOBI_HPP_

// Cyclic Jacobi eigensolver and a covariance-route PCA built on it. Test
// code only; shares nothing with the library's solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

struct Eigen {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

// a: dense symmetric n x n, row-major. Sorted by decreasing eigenvalue.
inline Eigen jacobi_eigen(std::vector<double> a, std::size_t n, int max_sweeps = 100) {
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [n](std::vector<double>& m, std::size_t r, std::size_t c) -> double& {
    return m[r * n + c];
  };
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        total += at(a, i, j) * at(a, i, j);
        if (i != j) off += at(a, i, j) * at(a, i, j);
      }
    }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return at(a, i, i) > at(a, j, j); });
  Eigen out;
  for (std::size_t k : order) {
    out.values.push_back(at(a, k, k));
    std::vector<double> vec(n);
    for (std::size_t r = 0; r < n; ++r) vec[r] = at(v, r, k);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

// Largest |entry| made positive; lowest index wins ties.
inline void normalize_sign(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (v[best] < 0) {
    for (double& x : v) x = -x;
  }
}

// PCA through the explicit p x p sample covariance of row-major data
// (rows = observations). Data is centered here.
inline Eigen covariance_pca(std::vector<double> x, std::size_t rows, std::size_t cols) {
  if (rows < 2) throw std::invalid_argument("need two observations");
  for (std::size_t c = 0; c < cols; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < rows; ++r) mean += x[r * cols + c];
    mean /= static_cast<double>(rows);
    for (std::size_t r = 0; r < rows; ++r) x[r * cols + c] -= mean;
  }
  std::vector<double> cov(cols * cols, 0.0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < rows; ++r) s += x[r * cols + i] * x[r * cols + j];
      cov[i * cols + j] = s / static_cast<double>(rows - 1);
    }
  }
  Eigen e = jacobi_eigen(std::move(cov), cols);
  for (auto& v : e.vectors) normalize_sign(v);
  return e;
}

}  // namespace oracle

#endif  // POLCLUST_TESTS_ORACLES_JACOBI_HPP_
