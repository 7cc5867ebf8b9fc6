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

#ifndef POLCLUST_EIGEN_SOLVER_HPP_
#define POLCLUST_EIGEN_SOLVER_HPP_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polclust {

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (achieved residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

struct SymmetricEigen {
  std::vector<double> values;                 // non-increasing
  std::vector<std::vector<double>> vectors;   // vectors[k] pairs with values[k]
};

// Full eigendecomposition of a dense symmetric n x n matrix given row-major.
// Householder reduction to tridiagonal form followed by the implicit QL
// method; `max_iterations` bounds the total number of QL sweeps.
SymmetricEigen symmetric_eigen(std::span<const double> matrix, std::size_t n,
                               int max_iterations = 10000);

}  // namespace polclust

#endif  // POLCLUST_EIGEN_SOLVER_HPP_
