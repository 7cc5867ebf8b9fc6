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

#include "polclust/artifacts.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polclust {
namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed number '" + s + "'");
  return v;
}

std::size_t parse_count(const std::string& s) {
  std::size_t used = 0;
  const unsigned long long v = std::stoull(s, &used);
  if (used != s.size()) throw std::invalid_argument("malformed count '" + s + "'");
  return static_cast<std::size_t>(v);
}

nlohmann::json states_json(const StateSet& states) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : states) arr.push_back(s.token());
  return arr;
}

StateSet states_from_json(const nlohmann::json& j) {
  StateSet out;
  for (const auto& t : j) out.insert(EncodedState(t.get<std::string>()));
  return out;
}

nlohmann::json cluster_json(const Cluster& c) {
  return {{"source", to_string(c.source)},
          {"component", c.component},
          {"states", states_json(c.states)}};
}

Cluster cluster_from_json(const nlohmann::json& j) {
  Cluster c;
  c.source = matrix_source_from_string(j.at("source").get<std::string>());
  c.component = j.at("component").get<std::size_t>();
  c.states = states_from_json(j.at("states"));
  return c;
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_exact(double v) {
  char buf[64];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

void write_suite_jsonl(std::ostream& out, const Suite& suite) {
  const nlohmann::json header = {
      {"sign", to_string(suite.sign)},
      {"config",
       {{"mu", suite.config.mu},
        {"trials", suite.config.trials},
        {"suite_size", suite.config.suite_size},
        {"master_seed", suite.config.master_seed}}},
      {"baseline_reward", suite.baseline_reward},
      {"run_mu", suite.run_mu},
      {"attempts", suite.attempts},
      {"acceptance_rate", suite.acceptance_rate()}};
  out << header.dump() << '\n';
  for (const auto& r : suite.records) {
    const nlohmann::json line = {{"states", states_json(r.states)},
                                 {"avg_reward", r.average_reward},
                                 {"succeeded", r.succeeded}};
    out << line.dump() << '\n';
  }
}

Suite read_suite_jsonl(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("suite file is empty");
  const auto header = nlohmann::json::parse(line);
  Suite s;
  s.sign = suite_sign_from_string(header.at("sign").get<std::string>());
  const auto& cfg = header.at("config");
  s.config.mu = cfg.at("mu").get<double>();
  s.config.trials = cfg.at("trials").get<int>();
  s.config.suite_size = cfg.at("suite_size").get<int>();
  s.config.master_seed = cfg.at("master_seed").get<std::uint64_t>();
  s.baseline_reward = header.at("baseline_reward").get<double>();
  s.run_mu = header.value("run_mu", s.sign == SuiteSign::kPlus ? s.config.mu : 1.0 - s.config.mu);
  s.attempts = header.value("attempts", std::size_t{0});
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    RunRecord r;
    r.states = states_from_json(j.at("states"));
    r.average_reward = j.at("avg_reward").get<double>();
    r.succeeded = j.at("succeeded").get<bool>();
    s.records.push_back(std::move(r));
  }
  return s;
}

void write_matrix_csv(std::ostream& out, const ScoreMatrix& m) {
  out << "sign,normalized_reward";
  for (const auto& s : m.rows.states()) out << ',' << s.token();
  out << '\n';
  for (std::size_t c = 0; c < m.column_count(); ++c) {
    out << to_string(m.column_meta[c].sign) << ','
        << format_exact(m.column_meta[c].normalized_reward);
    for (double v : m.columns[c]) out << ',' << format_exact(v);
    out << '\n';
  }
}

ScoreMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("matrix file is empty");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "sign" || header[1] != "normalized_reward") {
    throw std::invalid_argument("matrix CSV: unexpected header");
  }
  std::vector<EncodedState> tokens;
  for (std::size_t i = 2; i < header.size(); ++i) tokens.emplace_back(header[i]);
  ScoreMatrix m;
  m.rows = Vocabulary(tokens);
  if (m.rows.size() != tokens.size() || m.rows.states() != tokens) {
    throw std::invalid_argument("matrix CSV: header tokens must be sorted and unique");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != header.size()) {
      throw std::invalid_argument("matrix CSV: row width does not match header");
    }
    m.column_meta.push_back({suite_sign_from_string(fields[0]), parse_double(fields[1])});
    std::vector<double> col;
    col.reserve(tokens.size());
    for (std::size_t i = 2; i < fields.size(); ++i) col.push_back(parse_double(fields[i]));
    m.columns.push_back(std::move(col));
  }
  return m;
}

nlohmann::json clusters_to_json(const std::vector<Cluster>& clusters) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : clusters) {
    auto j = cluster_json(c);
    j["mean_reward"] = nullptr;
    j["rank"] = nullptr;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json ranked_clusters_to_json(const std::vector<RankedCluster>& ranked) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : ranked) {
    auto j = cluster_json(r.cluster);
    j["mean_reward"] = r.mean_reward;
    j["rank"] = r.rank;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<Cluster> clusters_from_json(const nlohmann::json& j) {
  std::vector<Cluster> out;
  for (const auto& c : j) out.push_back(cluster_from_json(c));
  return out;
}

std::vector<RankedCluster> ranked_clusters_from_json(const nlohmann::json& j) {
  std::vector<RankedCluster> out;
  for (const auto& c : j) {
    if (c.at("rank").is_null()) {
      throw std::invalid_argument("cluster file has unranked entries; run 'rank' first");
    }
    RankedCluster r;
    r.cluster = cluster_from_json(c);
    r.mean_reward = c.at("mean_reward").get<double>();
    r.rank = c.at("rank").get<std::size_t>();
    out.push_back(std::move(r));
  }
  return out;
}

void write_ranking_csv(std::ostream& out, const StateRanking& r) {
  out << "state,score,rank\n";
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    out << r.entries[i].first.token() << ',' << format_value(r.entries[i].second) << ','
        << (i + 1) << '\n';
  }
}

StateRanking read_ranking_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "state,score,rank") {
    throw std::invalid_argument("ranking CSV: unexpected header");
  }
  StateRanking r;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 3) throw std::invalid_argument("ranking CSV: expected 3 fields");
    r.entries.emplace_back(EncodedState(f[0]), parse_double(f[1]));
  }
  return r;
}

void write_spectra_csv(std::ostream& out, const SpectrumTable& t) {
  out << "# runs=" << t.run_count() << '\n';
  out << "state,a_ef,a_ep,a_nf,a_np\n";
  for (const auto& [s, e] : t.entries()) {
    out << s.token() << ',' << e.a_ef << ',' << e.a_ep << ',' << e.a_nf << ',' << e.a_np << '\n';
  }
}

SpectrumTable read_spectra_csv(std::istream& in) {
  SpectrumTable t;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# runs=", 0) != 0) {
    throw std::invalid_argument("spectra CSV: missing run count");
  }
  t.set_run_count(parse_count(line.substr(7)));
  if (!std::getline(in, line) || line != "state,a_ef,a_ep,a_nf,a_np") {
    throw std::invalid_argument("spectra CSV: unexpected header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw std::invalid_argument("spectra CSV: expected 5 fields");
    t.set(EncodedState(f[0]),
          Spectrum{parse_count(f[1]), parse_count(f[2]), parse_count(f[3]), parse_count(f[4])});
  }
  return t;
}

void write_curves_csv(std::ostream& out, const std::vector<Curve>& curves) {
  out << kCurveCsvHeader << '\n';
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      out << c.method << ',' << p.k << ',' << format_value(p.fraction_states_restored) << ','
          << format_value(p.fraction_policy_actions) << ',' << format_value(p.mean_reward)
          << ',' << format_value(p.pct_of_original) << ',' << format_value(p.std_error)
          << '\n';
    }
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace polclust
