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

#include "polclust/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace polclust {
namespace {

double ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

}  // namespace

void SpectrumTable::add(const MutationPartition& partition, bool succeeded) {
  for (const auto& s : partition.mutated) {
    auto& e = entries_[s];
    ++(succeeded ? e.a_ep : e.a_ef);
  }
  for (const auto& s : partition.normal) {
    auto& e = entries_[s];
    ++(succeeded ? e.a_np : e.a_nf);
  }
  ++runs_;
}

void SpectrumTable::merge(const SpectrumTable& other) {
  for (const auto& [s, o] : other.entries_) {
    auto& e = entries_[s];
    e.a_ef += o.a_ef;
    e.a_ep += o.a_ep;
    e.a_nf += o.a_nf;
    e.a_np += o.a_np;
  }
  runs_ += other.runs_;
}

Spectrum SpectrumTable::at(const EncodedState& s) const {
  auto it = entries_.find(s);
  return it == entries_.end() ? Spectrum{} : it->second;
}

SpectrumTable build_spectra(const std::vector<SampledRun>& runs) {
  SpectrumTable t;
  for (const auto& r : runs) t.add(r.partition, r.succeeded);
  return t;
}

SbflFormula sbfl_formula_from_string(const std::string& s) {
  if (s == "tarantula") return SbflFormula::kTarantula;
  if (s == "ochiai") return SbflFormula::kOchiai;
  throw std::invalid_argument("unknown SBFL formula '" + s + "'");
}

std::string to_string(SbflFormula f) {
  return f == SbflFormula::kTarantula ? "tarantula" : "ochiai";
}

double sbfl_score(const Spectrum& s, SbflFormula formula) {
  const auto ef = static_cast<double>(s.a_ef);
  const auto ep = static_cast<double>(s.a_ep);
  const auto nf = static_cast<double>(s.a_nf);
  const auto np = static_cast<double>(s.a_np);
  if (formula == SbflFormula::kTarantula) {
    const double fail_rate = ratio(ef, ef + nf);
    const double pass_rate = ratio(ep, ep + np);
    return ratio(fail_rate, fail_rate + pass_rate);
  }
  return ratio(ef, std::sqrt((ef + nf) * (ef + ep)));
}

StateSet StateRanking::top(std::size_t k) const {
  StateSet out;
  for (std::size_t i = 0; i < std::min(k, entries.size()); ++i) out.insert(entries[i].first);
  return out;
}

StateRanking make_ranking(const Vocabulary& vocab,
                          const std::unordered_map<EncodedState, double>& scores) {
  StateRanking r;
  r.entries.reserve(vocab.size());
  for (const auto& s : vocab.states()) {
    auto it = scores.find(s);
    r.entries.emplace_back(s, it == scores.end() ? 0.0 : it->second);
  }
  // Vocabulary is already in token order; a stable sort keeps it for ties.
  std::stable_sort(r.entries.begin(), r.entries.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return r;
}

StateRanking sbfl_rank(const SpectrumTable& spectra, const Vocabulary& vocab,
                       SbflFormula formula) {
  std::unordered_map<EncodedState, double> scores;
  for (const auto& s : vocab.states()) scores[s] = sbfl_score(spectra.at(s), formula);
  return make_ranking(vocab, scores);
}

StateRanking freqvis_rank(const RolloutContext& ctx, const Vocabulary& vocab) {
  if (ctx.episodes < 1) throw std::invalid_argument("episodes must be >= 1");
  std::unordered_map<EncodedState, double> visits;
  for (int e = 0; e < ctx.episodes; ++e) {
    run_episode(
        ctx.env, derive_seed(ctx.seed, static_cast<std::uint64_t>(e)),
        [&](const EncodedState& s, std::optional<ActionId>, std::uint64_t step) {
          return ActionChoice{ctx.policy.act(s, step), true};
        },
        [&](const EncodedState& s, const ActionChoice&, const StepOutcome&) {
          visits[s] += 1.0;
        });
  }
  return make_ranking(vocab, visits);
}

StateRanking rand_rank(const Vocabulary& vocab, std::uint64_t seed) {
  std::vector<EncodedState> order = vocab.states();
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  StateRanking r;
  const double n = static_cast<double>(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    r.entries.emplace_back(order[i], n - static_cast<double>(i));
  }
  return r;
}

}  // namespace polclust
