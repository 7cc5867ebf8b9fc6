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

#ifndef POLCLUST_RANKERS_HPP_
#define POLCLUST_RANKERS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polclust/evaluation.hpp"
#include "polclust/sampler.hpp"
#include "polclust/vectorizer.hpp"

namespace polclust {

// Per-state outcome counts over sampled runs. "Executed" means the state was
// mutated in that run; "failed" means the run was not a success.
struct Spectrum {
  std::size_t a_ef = 0;  // mutated, failed
  std::size_t a_ep = 0;  // mutated, passed
  std::size_t a_nf = 0;  // normal, failed
  std::size_t a_np = 0;  // normal, passed

  std::size_t total() const { return a_ef + a_ep + a_nf + a_np; }
  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

class SpectrumTable {
 public:
  void add(const MutationPartition& partition, bool succeeded);
  void merge(const SpectrumTable& other);
  // Used when loading persisted spectra.
  void set(const EncodedState& s, const Spectrum& counts) { entries_[s] = counts; }
  void set_run_count(std::size_t runs) { runs_ = runs; }

  // Zero counts for states never encountered.
  Spectrum at(const EncodedState& s) const;
  const std::map<EncodedState, Spectrum>& entries() const { return entries_; }
  std::size_t run_count() const { return runs_; }

 private:
  std::map<EncodedState, Spectrum> entries_;
  std::size_t runs_ = 0;
};

struct SampledRun {
  MutationPartition partition;
  bool succeeded = false;
};

SpectrumTable build_spectra(const std::vector<SampledRun>& runs);

enum class SbflFormula { kTarantula, kOchiai };

SbflFormula sbfl_formula_from_string(const std::string& s);
std::string to_string(SbflFormula f);

// Both formulas treat every 0/0 sub-expression and every zero denominator
// as 0, so scores are total and lie in [0, 1].
double sbfl_score(const Spectrum& s, SbflFormula formula = SbflFormula::kTarantula);

// Every vocabulary state exactly once, non-increasing score, ties by token.
struct StateRanking {
  std::vector<std::pair<EncodedState, double>> entries;

  std::size_t size() const { return entries.size(); }
  StateSet top(std::size_t k) const;
};

// Builds a ranking over `vocab` from arbitrary scores (missing states get 0).
StateRanking make_ranking(const Vocabulary& vocab,
                          const std::unordered_map<EncodedState, double>& scores);

StateRanking sbfl_rank(const SpectrumTable& spectra, const Vocabulary& vocab,
                       SbflFormula formula = SbflFormula::kTarantula);

// Visit counts of the unmodified policy over seeded episodes.
StateRanking freqvis_rank(const RolloutContext& ctx, const Vocabulary& vocab);

// Uniform random permutation, fixed by `seed`. Scores are |S| - position.
StateRanking rand_rank(const Vocabulary& vocab, std::uint64_t seed);

}  // namespace polclust

#endif  // POLCLUST_RANKERS_HPP_
