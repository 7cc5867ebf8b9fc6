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

// Python bindings. Configs and specs cross the boundary as JSON text; the
// pure-Python wrapper in polclust/__init__.py converts dicts.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>

#include "polclust/artifacts.hpp"
#include "polclust/chain_env.hpp"
#include "polclust/eigen_solver.hpp"
#include "polclust/gridcone_env.hpp"
#include "polclust/ledger.hpp"
#include "polclust/pipeline.hpp"

namespace py = pybind11;
using namespace polclust;

namespace {

PipelineConfig parse_config(const std::string& text) {
  return PipelineConfig::from_json(nlohmann::json::parse(text));
}

StateSet to_states(const std::vector<std::string>& tokens) {
  StateSet out;
  for (const auto& t : tokens) out.insert(EncodedState(t));
  return out;
}

std::vector<std::string> to_tokens(const StateSet& states) {
  std::vector<std::string> out;
  for (const auto& s : states) out.push_back(s.token());
  return out;
}

py::array_t<double> matrix_array(const ScoreMatrix& m) {
  py::array_t<double> a({m.rows.size(), m.columns.size()});
  auto v = a.mutable_unchecked<2>();
  for (std::size_t c = 0; c < m.columns.size(); ++c) {
    for (std::size_t r = 0; r < m.rows.size(); ++r) v(r, c) = m.columns[c][r];
  }
  return a;
}

// Owns the environment and policy behind a RolloutContext.
class Session {
 public:
  explicit Session(const std::string& config_json)
      : config_(parse_config(config_json)), exp_(Experiment::from_config(config_)) {}

  py::dict sample_partition(double mu, int trials, std::uint64_t seed) {
    const RunTrace t = polclust::sample_partition(*exp_.env, *exp_.policy, mu, trials, seed,
                                                  exp_.env->initial_action());
    py::dict d;
    d["mutated"] = to_tokens(t.partition.mutated);
    d["normal"] = to_tokens(t.partition.normal);
    d["average_reward"] = t.average_reward;
    return d;
  }

  py::dict evaluate(const std::vector<std::string>& restored) {
    const Evaluation e = evaluate_restored(exp_.evaluation_context(config_), to_states(restored));
    py::dict d;
    d["mean_reward"] = e.mean_reward;
    d["fraction_policy_actions"] = e.fraction_policy_actions;
    d["stderr"] = e.std_error;
    return d;
  }

  double baseline_reward() {
    return mean_policy_reward(*exp_.env, *exp_.policy, std::max(30, config_.episodes),
                              baseline_seed(config_.master_seed));
  }

  std::vector<std::string> states() const {
    std::vector<std::string> out;
    for (const auto& s : exp_.env->enumerate_states()) out.push_back(s.token());
    return out;
  }

  py::dict oracle(std::size_t k, int episodes) {
    RolloutContext ctx = exp_.evaluation_context(config_);
    ctx.episodes = episodes;
    const SubsetResult r = brute_force_best_subset(ctx, k);
    py::dict d;
    d["states"] = to_tokens(r.states);
    d["mean_reward"] = r.mean_reward;
    d["subsets_evaluated"] = r.evaluated;
    return d;
  }

 private:
  PipelineConfig config_;
  Experiment exp_;
};

py::dict bundle_dict(const ReportBundle& b) {
  py::dict d;
  d["report"] = report_json(b).dump();
  py::dict matrices;
  for (MatrixSource s : kAllSources) matrices[py::str(to_string(s))] = matrix_array(b.matrices.get(s));
  d["matrices"] = matrices;
  std::vector<std::string> vocab;
  for (const auto& s : b.matrices.vocab.states()) vocab.push_back(s.token());
  d["vocabulary"] = vocab;
  py::list curves;
  for (const auto& c : b.curves.curves) {
    py::dict cd;
    cd["method"] = c.method;
    py::list points;
    for (const auto& p : c.points) {
      points.append(py::make_tuple(p.k, p.fraction_states_restored, p.fraction_policy_actions,
                                   p.mean_reward, p.pct_of_original, p.std_error));
    }
    cd["points"] = points;
    curves.append(cd);
  }
  d["curves"] = curves;
  return d;
}

}  // namespace

PYBIND11_MODULE(_polclust, m) {
  m.doc() = "Native core of polclust";

  py::register_exception<SuiteBudgetError>(m, "SuiteBudgetError", PyExc_RuntimeError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<PipelineError>(m, "PipelineError", PyExc_RuntimeError);

  m.def("default_env_spec", [](const std::string& name) {
    if (name == ChainEnv::kName) return ChainEnv::default_spec().to_json().dump();
    if (name == GridConeEnv::kName) return GridConeEnv::default_spec().to_json().dump();
    throw std::invalid_argument("unknown environment '" + name + "'");
  });
  m.def("normalize_config", [](const std::string& text) { return parse_config(text).to_json().dump(); },
        "Validates a config and fills in defaults.");

  m.def(
      "run_pipeline",
      [](const std::string& text, const std::string& out_dir) {
        ReportBundle b;
        {
          py::gil_scoped_release release;
          b = run_pipeline(parse_config(text));
          if (!out_dir.empty()) write_bundle(b, std::filesystem::path(out_dir));
        }
        return bundle_dict(b);
      },
      py::arg("config_json"), py::arg("out_dir") = "");

  py::class_<Session>(m, "Session")
      .def(py::init<const std::string&>())
      .def("sample_partition", &Session::sample_partition, py::arg("mu"), py::arg("trials"),
           py::arg("seed"))
      .def("evaluate", &Session::evaluate, py::arg("restored"))
      .def("baseline_reward", &Session::baseline_reward)
      .def("states", &Session::states)
      .def("oracle", &Session::oracle, py::arg("k"), py::arg("episodes") = 1);

  m.def("tf", &tf, py::arg("present"), py::arg("normalized_reward"), py::arg("suite_flag"));
  m.def("idf", &idf, py::arg("document_frequency"), py::arg("delta"));
  m.def("minmax_normalize",
        [](const std::vector<double>& v) { return minmax_normalize(v); });
  m.def(
      "vectorize_suite",
      [](const std::vector<std::vector<std::string>>& records, const std::vector<double>& rewards,
         const std::string& sign, const std::vector<std::string>& vocabulary, double delta) {
        if (records.size() != rewards.size()) {
          throw std::invalid_argument("records and rewards differ in length");
        }
        Suite s;
        s.sign = suite_sign_from_string(sign);
        for (std::size_t i = 0; i < records.size(); ++i) {
          s.records.push_back({to_states(records[i]), rewards[i], s.sign == SuiteSign::kPlus});
        }
        std::vector<EncodedState> tokens;
        for (const auto& t : vocabulary) tokens.emplace_back(t);
        return matrix_array(vectorize_suite(s, Vocabulary(tokens), delta));
      },
      py::arg("records"), py::arg("rewards"), py::arg("sign"), py::arg("vocabulary"),
      py::arg("delta") = 10.0);

  m.def(
      "principal_components",
      [](py::array_t<double, py::array::c_style | py::array::forcecast> data, std::size_t sigma,
         bool center) {
        if (data.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
        DataTable t(static_cast<std::size_t>(data.shape(0)), static_cast<std::size_t>(data.shape(1)));
        std::copy(data.data(), data.data() + data.size(), t.values.begin());
        if (center) t = center_columns(std::move(t));
        const PcaResult r = principal_components(t, sigma);
        py::array_t<double> comps({r.components.size(), t.cols});
        auto v = comps.mutable_unchecked<2>();
        for (std::size_t k = 0; k < r.components.size(); ++k) {
          for (std::size_t i = 0; i < t.cols; ++i) v(k, i) = r.components[k][i];
        }
        return py::make_tuple(py::array_t<double>(r.eigenvalues.size(), r.eigenvalues.data()), comps);
      },
      py::arg("data"), py::arg("sigma"), py::arg("center") = true,
      "Returns (eigenvalues, components) with one component per row.");

  m.def(
      "sbfl_score",
      [](std::size_t ef, std::size_t ep, std::size_t nf, std::size_t np, const std::string& formula) {
        return sbfl_score(Spectrum{ef, ep, nf, np}, sbfl_formula_from_string(formula));
      },
      py::arg("a_ef"), py::arg("a_ep"), py::arg("a_nf"), py::arg("a_np"),
      py::arg("formula") = "tarantula");

  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) {
    return spearman(x, y);
  });
  m.def(
      "restoration_auc",
      [](const std::vector<double>& fractions, const std::vector<double>& pct) {
        if (fractions.size() != pct.size()) throw std::invalid_argument("length mismatch");
        Curve c;
        for (std::size_t i = 0; i < fractions.size(); ++i) {
          CurvePoint p;
          p.fraction_states_restored = fractions[i];
          p.pct_of_original = pct[i];
          c.points.push_back(p);
        }
        return restoration_auc(c);
      },
      py::arg("fraction_states_restored"), py::arg("pct_of_original"));
  m.def("cluster_budget", &cluster_budget, py::arg("eta"), py::arg("n"));

  m.def("emit_ledger", &emit_ledger);
  m.def("ledger_json", [] { return ledger_json().dump(); });
  m.attr("CURVE_CSV_HEADER") = std::string(kCurveCsvHeader);
}
