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

#include "polclust/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polclust {

Vocabulary::Vocabulary(std::vector<EncodedState> states) : states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  states_.erase(std::unique(states_.begin(), states_.end()), states_.end());
  index_.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

Vocabulary Vocabulary::from_suites(const Suite& a, const Suite& b) {
  StateSet all;
  for (const Suite* s : {&a, &b}) {
    for (const auto& r : s->records) all.insert(r.states.begin(), r.states.end());
  }
  return Vocabulary(std::vector<EncodedState>(all.begin(), all.end()));
}

std::size_t Vocabulary::index_of(const EncodedState& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw std::out_of_range("state '" + s.token() + "' is not in the vocabulary");
  }
  return it->second;
}

std::vector<double> minmax_normalize(std::span<const double> rewards) {
  if (rewards.empty()) throw std::invalid_argument("minmax_normalize: empty input");
  const auto [lo, hi] = std::minmax_element(rewards.begin(), rewards.end());
  const double min = *lo;
  const double range = *hi - *lo;
  std::vector<double> out(rewards.size(), 0.5);
  if (range > 0.0) {
    for (std::size_t i = 0; i < rewards.size(); ++i) out[i] = (rewards[i] - min) / range;
  }
  return out;
}

double tf(bool present, double normalized_reward, int suite_flag) {
  if (!present) return 0.0;
  return normalized_reward * normalized_reward - suite_flag;
}

double idf(std::size_t document_frequency, double delta) {
  if (!(delta > 1.0)) throw std::invalid_argument("idf: delta must be > 1");
  const double c = static_cast<double>(document_frequency);
  return std::log(delta) / std::log(c + delta);
}

ScoreMatrix vectorize_suite(const Suite& suite, const Vocabulary& vocab, double delta) {
  if (!(delta > 1.0)) throw std::invalid_argument("vectorize_suite: delta must be > 1");
  ScoreMatrix m;
  m.rows = vocab;
  if (suite.records.empty()) return m;

  std::vector<std::size_t> df(vocab.size(), 0);
  std::vector<std::vector<std::size_t>> present(suite.records.size());
  for (std::size_t c = 0; c < suite.records.size(); ++c) {
    for (const auto& s : suite.records[c].states) {
      const std::size_t row = vocab.index_of(s);
      present[c].push_back(row);
      ++df[row];
    }
  }

  std::vector<double> rewards;
  rewards.reserve(suite.records.size());
  for (const auto& r : suite.records) rewards.push_back(r.average_reward);
  const std::vector<double> normalized = minmax_normalize(rewards);

  const int flag = suite_flag(suite.sign);
  m.columns.assign(suite.records.size(), std::vector<double>(vocab.size(), 0.0));
  for (std::size_t c = 0; c < suite.records.size(); ++c) {
    const double term = tf(true, normalized[c], flag);
    for (std::size_t row : present[c]) m.columns[c][row] = term * idf(df[row], delta);
    m.column_meta.push_back({suite.sign, normalized[c]});
  }
  return m;
}

ScoreMatrix concatenate_columns(const ScoreMatrix& a, const ScoreMatrix& b) {
  if (a.rows.states() != b.rows.states()) {
    throw std::invalid_argument("concatenate_columns: vocabularies differ");
  }
  ScoreMatrix m = a;
  m.columns.insert(m.columns.end(), b.columns.begin(), b.columns.end());
  m.column_meta.insert(m.column_meta.end(), b.column_meta.begin(), b.column_meta.end());
  return m;
}

double classic_tf(std::size_t term_count, std::size_t document_length) {
  if (document_length == 0) throw std::invalid_argument("classic_tf: empty document");
  return static_cast<double>(term_count) / static_cast<double>(document_length);
}

double classic_idf(std::size_t corpus_size, std::size_t document_frequency) {
  return std::log(static_cast<double>(corpus_size) /
                  static_cast<double>(document_frequency + 1));
}

}  // namespace polclust
