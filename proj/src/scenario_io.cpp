// Copyright 2026 The govgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sstream>
#include <string>

#include "govgame/error.hpp"
#include "govgame/scenario.hpp"
#include "json_util.hpp"

namespace govgame {
namespace {

using json_util::Json;
namespace ju = json_util;

Index parse_row(const Json& v, const std::string& path) {
  const std::string s = ju::to_str(v, path);
  if (s == "yes") return kYes;
  if (s == "no") return kNo;
  ju::fail(path, "expected \"yes\" or \"no\"");
}

Index parse_col(const Json& v, const std::string& path) {
  const std::string s = ju::to_str(v, path);
  if (s == "upgraded") return kUpgraded;
  if (s == "original") return kOriginal;
  ju::fail(path, "expected \"upgraded\" or \"original\"");
}

template <typename F>
auto wrap_validation(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    ju::fail(path, e.what());
  }
}

ExpectedOutcome read_expected(const Json& obj, const std::string& path) {
  if (!obj.is_object()) ju::fail(path, "expected an object");
  ju::reject_unknown(obj, {"equilibria", "majority_chain"}, path);
  ExpectedOutcome out;
  if (const auto it = obj.find("equilibria"); it != obj.end()) {
    const std::string eq_path = ju::child(path, "equilibria");
    if (!it->is_array()) ju::fail(eq_path, "expected an array");
    std::vector<ExpectedEquilibrium> eqs;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const Json& e = (*it)[i];
      const std::string p = ju::index(eq_path, i);
      if (!e.is_object()) ju::fail(p, "expected an object");
      ju::reject_unknown(e, {"row", "col", "payoff_v", "payoff_c"}, p);
      eqs.push_back({parse_row(ju::require(e, "row", p), ju::child(p, "row")),
                     parse_col(ju::require(e, "col", p), ju::child(p, "col")),
                     ju::to_rational(ju::require(e, "payoff_v", p), ju::child(p, "payoff_v")),
                     ju::to_rational(ju::require(e, "payoff_c", p), ju::child(p, "payoff_c"))});
    }
    out.equilibria = std::move(eqs);
  }
  if (const auto it = obj.find("majority_chain"); it != obj.end()) {
    const std::string p = ju::child(path, "majority_chain");
    const std::string s = ju::to_str(*it, p);
    out.majority_chain = wrap_validation(p, [&] { return parse_chain(s); });
  }
  return out;
}

Scenario read_scenario(const Json& obj, const std::string& path) {
  if (!obj.is_object()) ju::fail(path, "expected an object");
  ju::reject_unknown(obj,
                     {"name", "mode", "beta", "gamma", "gamma_prime", "k", "n", "s_v", "s_c",
                      "tie_break", "expected"},
                     path);
  Scenario s;
  s.name = ju::to_str(ju::require(obj, "name", path), ju::child(path, "name"));
  GovernanceParams& p = s.params;
  {
    const std::string mp = ju::child(path, "mode");
    const std::string m = ju::to_str(ju::require(obj, "mode", path), mp);
    p.mode = wrap_validation(mp, [&] { return parse_mode(m); });
  }
  p.beta = ju::to_rational(ju::require(obj, "beta", path), ju::child(path, "beta"));
  p.gamma = ju::to_rational(ju::require(obj, "gamma", path), ju::child(path, "gamma"));
  if (const auto it = obj.find("gamma_prime"); it != obj.end()) {
    p.gamma_prime = ju::to_rational(*it, ju::child(path, "gamma_prime"));
  }
  p.k = ju::to_integer(ju::require(obj, "k", path), ju::child(path, "k"));
  p.n = ju::to_integer(ju::require(obj, "n", path), ju::child(path, "n"));
  if (const auto it = obj.find("s_v"); it != obj.end()) {
    p.s_v = ju::to_rational(*it, ju::child(path, "s_v"));
  }
  if (const auto it = obj.find("s_c"); it != obj.end()) {
    p.s_c = ju::to_rational(*it, ju::child(path, "s_c"));
  }
  if (const auto it = obj.find("tie_break"); it != obj.end()) {
    const std::string tp = ju::child(path, "tie_break");
    const std::string t = ju::to_str(*it, tp);
    p.tie_break = wrap_validation(tp, [&] { return parse_tie_break(t); });
  }
  if (const auto it = obj.find("expected"); it != obj.end()) {
    s.expected = read_expected(*it, ju::child(path, "expected"));
  }
  return s;
}

Json params_json(const GovernanceParams& p) {
  Json j;
  j["mode"] = std::string(to_string(p.mode));
  j["beta"] = p.beta.to_string();
  j["gamma"] = p.gamma.to_string();
  if (p.gamma_prime) j["gamma_prime"] = p.gamma_prime->to_string();
  j["k"] = p.k;
  j["n"] = p.n;
  j["s_v"] = p.s_v.to_string();
  j["s_c"] = p.s_c.to_string();
  if (p.tie_break) j["tie_break"] = std::string(to_string(*p.tie_break));
  return j;
}

std::string chain_key(Chain c) {
  switch (c) {
    case Chain::Upgraded:
      return "upgraded";
    case Chain::Original:
      return "original";
    case Chain::Split5050:
      return "split";
  }
  return "?";
}

Json strategy_json(const RationalStrategy& s) {
  Json a = Json::array();
  for (Index i = 0; i < s.size(); ++i) a.push_back(s[i].to_string());
  return a;
}

Json surplus_json(const SurplusReport& r) {
  Json j;
  j["s_yes"] = r.s_yes.to_string();
  j["s_no"] = r.s_no.to_string();
  j["s_u"] = r.s_u.to_string();
  j["s_o"] = r.s_o.to_string();
  j["surplus_v"] = r.surplus_v.to_string();
  j["surplus_c"] = r.surplus_c.to_string();
  j["total"] = r.total.to_string();
  return j;
}

Json prediction_json(const PredictionResult& p) {
  Json j;
  j["regime"] = std::string(to_string(p.regime));
  j["majority_chain"] = std::string(to_string(p.majority_chain));
  j["fork_risk"] = std::string(to_string(p.fork_risk));
  j["surplus"] = surplus_json(p.surplus);
  j["notes"] = p.notes;
  return j;
}

Json check_json(const ExpectationCheck& c) {
  Json j;
  j["status"] = std::string(to_string(c.status));
  j["details"] = c.details;
  return j;
}

Json result_json(const ScenarioResult& r) {
  Json j;
  j["name"] = r.name;
  j["params"] = params_json(r.params);
  j["degenerate_game"] = r.degenerate_game;
  Json eqs = Json::array();
  for (std::size_t i = 0; i < r.equilibria.size(); ++i) {
    const auto& eq = r.equilibria[i];
    Json e;
    e["index"] = i + 1;
    e["kind"] = eq.kind == EquilibriumKind::Pure ? "pure" : "mixed";
    e["sigma1"] = strategy_json(eq.profile.sigma1);
    e["sigma2"] = strategy_json(eq.profile.sigma2);
    e["payoff_v"] = eq.payoffs.first.to_string();
    e["payoff_c"] = eq.payoffs.second.to_string();
    eqs.push_back(std::move(e));
  }
  j["equilibria"] = std::move(eqs);
  j["pure_equilibrium_count"] = r.pure_equilibria.size();
  j["prediction"] = prediction_json(r.prediction);
  j["notes"] = r.notes;
  j["expectation_check"] = check_json(r.expectation_check);
  return j;
}

}  // namespace

std::vector<Scenario> load_scenarios(std::string_view text) {
  const Json doc = ju::parse_document(text);
  if (!doc.is_object()) throw ParseError("scenario file must be a JSON object");
  ju::reject_unknown(doc, {"scenarios"}, "");
  const Json& list = ju::require(doc, "scenarios", "");
  if (!list.is_array()) ju::fail("scenarios", "expected an array");

  std::vector<Scenario> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(read_scenario(list[i], ju::index("scenarios", i)));
  }
  std::string problems;
  for (std::size_t i = 0; i < out.size(); ++i) {
    try {
      validate(out[i].params);
    } catch (const ValidationError& e) {
      if (!problems.empty()) problems += "\n";
      problems += ju::index("scenarios", i) + " ('" + out[i].name + "'): " + e.what();
    }
  }
  if (!problems.empty()) throw ValidationError(problems);
  return out;
}

std::string serialize_scenarios(const std::vector<Scenario>& scenarios) {
  Json list = Json::array();
  for (const auto& s : scenarios) {
    Json j;
    j["name"] = s.name;
    const Json params = params_json(s.params);
    for (const auto& item : params.items()) j[item.key()] = item.value();
    if (s.expected) {
      Json e = Json::object();
      if (s.expected->equilibria) {
        Json eqs = Json::array();
        for (const auto& eq : *s.expected->equilibria) {
          Json x;
          x["row"] = eq.row == kYes ? "yes" : "no";
          x["col"] = eq.col == kUpgraded ? "upgraded" : "original";
          x["payoff_v"] = eq.payoff_v.to_string();
          x["payoff_c"] = eq.payoff_c.to_string();
          eqs.push_back(std::move(x));
        }
        e["equilibria"] = std::move(eqs);
      }
      if (s.expected->majority_chain) e["majority_chain"] = chain_key(*s.expected->majority_chain);
      j["expected"] = std::move(e);
    }
    list.push_back(std::move(j));
  }
  Json doc;
  doc["scenarios"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string results_to_json(const std::vector<ScenarioResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) arr.push_back(result_json(r));
  return arr.dump(2) + "\n";
}

std::string results_to_csv(const std::vector<ScenarioResult>& results) {
  std::ostringstream os;
  os << "simulation,beta,gamma,equilibrium_index,yes,no,upgraded,original,v_payoff,c_payoff\n";
  for (std::size_t s = 0; s < results.size(); ++s) {
    const auto& r = results[s];
    for (std::size_t i = 0; i < r.equilibria.size(); ++i) {
      const auto& eq = r.equilibria[i];
      os << s + 1 << ',' << r.params.beta << ',' << r.params.gamma << ',' << i + 1 << ','
         << eq.profile.sigma1[kYes] << ',' << eq.profile.sigma1[kNo] << ','
         << eq.profile.sigma2[kUpgraded] << ',' << eq.profile.sigma2[kOriginal] << ','
         << eq.payoffs.first << ',' << eq.payoffs.second << '\n';
    }
  }
  return os.str();
}

std::string case_study_to_json(const CaseStudyResult& report) {
  Json j;
  j["result"] = result_json(report.result);
  j["gamma"] = report.gamma.to_string();
  j["gamma_assumed"] = report.gamma_assumed;
  Json obs;
  obs["majority_chain"] = std::string(to_string(report.observation.majority_chain));
  obs["hard_fork"] = report.observation.hard_fork;
  obs["description"] = report.observation.description;
  j["observation"] = std::move(obs);
  j["comparison"] = check_json(report.comparison);
  return j.dump(2) + "\n";
}

std::string prediction_to_json(const GovernanceParams& params, const PredictionResult& p) {
  Json j;
  j["params"] = params_json(params);
  const Json body = prediction_json(p);
  for (const auto& item : body.items()) j[item.key()] = item.value();
  return j.dump(2) + "\n";
}

}  // namespace govgame
