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

#ifndef POLCLUST_VECTORIZER_HPP_
#define POLCLUST_VECTORIZER_HPP_

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polclust/sampler.hpp"
#include "polclust/state.hpp"

namespace polclust {

// Ordered state vocabulary shared by every matrix of one pipeline run.
class Vocabulary {
 public:
  Vocabulary() = default;
  // Sorts and deduplicates.
  explicit Vocabulary(std::vector<EncodedState> states);

  static Vocabulary from_suites(const Suite& a, const Suite& b);

  std::size_t size() const { return states_.size(); }
  const std::vector<EncodedState>& states() const { return states_; }
  const EncodedState& at(std::size_t i) const { return states_.at(i); }
  // Throws std::out_of_range for states outside the vocabulary.
  std::size_t index_of(const EncodedState& s) const;
  bool contains(const EncodedState& s) const { return index_.count(s) > 0; }

 private:
  std::vector<EncodedState> states_;
  std::unordered_map<EncodedState, std::size_t> index_;
};

struct ColumnMeta {
  SuiteSign sign = SuiteSign::kPlus;
  double normalized_reward = 0.0;
};

// TF-IDF scores: one column per retained run, one row per vocabulary state.
struct ScoreMatrix {
  Vocabulary rows;
  std::vector<std::vector<double>> columns;  // columns[c][row]
  std::vector<ColumnMeta> column_meta;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }
  double at(std::size_t row, std::size_t column) const { return columns[column][row]; }
};

// (r - min) / (max - min); all 0.5 when max == min.
std::vector<double> minmax_normalize(std::span<const double> rewards);

// D(t) * (R(D)^2 - T(C)), with T(C) = 1 for the "-" suite and 0 for "+".
double tf(bool present, double normalized_reward, int suite_flag);

// 1 / log_delta(document_frequency + delta).
double idf(std::size_t document_frequency, double delta);

inline int suite_flag(SuiteSign sign) { return sign == SuiteSign::kMinus ? 1 : 0; }

// Document frequency and reward normalization are both computed within the
// suite itself.
ScoreMatrix vectorize_suite(const Suite& suite, const Vocabulary& vocab, double delta);

// Columns of `a` followed by columns of `b`, unchanged.
ScoreMatrix concatenate_columns(const ScoreMatrix& a, const ScoreMatrix& b);

// Textbook forms kept for reference: term frequency count / |D| and
// log(|C| / (C(t) + 1)).
double classic_tf(std::size_t term_count, std::size_t document_length);
double classic_idf(std::size_t corpus_size, std::size_t document_frequency);

}  // namespace polclust

#endif  // POLCLUST_VECTORIZER_HPP_
