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

#include "govgame/scenario.hpp"

#include <future>
#include <string>
#include <utility>

#include "govgame/equilibria.hpp"
#include "govgame/error.hpp"

namespace govgame {
namespace {

std::string describe(Index row, Index col, const Rational& v, const Rational& c) {
  return std::string("(") + (row == kYes ? "Yes" : "No") + ", " +
         (col == kUpgraded ? "Upgraded" : "Original") + ", " + v.to_string() + ", " +
         c.to_string() + ")";
}

std::string describe(const RationalEquilibrium& eq) {
  if (const auto cell = eq.profile.as_pure()) {
    return describe(cell->row, cell->col, eq.payoffs.first, eq.payoffs.second);
  }
  std::string s = "(mixed [";
  for (Index i = 0; i < eq.profile.sigma1.size(); ++i) {
    s += (i ? ", " : "") + eq.profile.sigma1[i].to_string();
  }
  s += "] vs [";
  for (Index j = 0; j < eq.profile.sigma2.size(); ++j) {
    s += (j ? ", " : "") + eq.profile.sigma2[j].to_string();
  }
  return s + "], " + eq.payoffs.first.to_string() + ", " + eq.payoffs.second.to_string() + ")";
}

// argmax of (x, 1 - x): +1, -1, or 0 on a tie.
int lean(const Rational& x) {
  const Rational half(1, 2);
  return x > half ? 1 : (x < half ? -1 : 0);
}

ExpectationCheck check_expected(const ExpectedOutcome& expected, const ScenarioResult& r) {
  ExpectationCheck check;
  if (expected.equilibria) {
    const auto& want = *expected.equilibria;
    if (want.size() != r.equilibria.size()) {
      check.details.push_back("equilibrium count: expected " + std::to_string(want.size()) +
                              ", got " + std::to_string(r.equilibria.size()));
    }
    std::vector<bool> used(r.equilibria.size(), false);
    for (const auto& w : want) {
      bool found = false;
      for (std::size_t i = 0; i < r.equilibria.size() && !found; ++i) {
        if (used[i]) continue;
        const auto cell = r.equilibria[i].profile.as_pure();
        if (cell && cell->row == w.row && cell->col == w.col &&
            r.equilibria[i].payoffs.first == w.payoff_v &&
            r.equilibria[i].payoffs.second == w.payoff_c) {
          used[i] = true;
          found = true;
        }
      }
      if (!found) {
        check.details.push_back("missing equilibrium " +
                                describe(w.row, w.col, w.payoff_v, w.payoff_c));
      }
    }
    for (std::size_t i = 0; i < r.equilibria.size(); ++i) {
      if (!used[i]) check.details.push_back("unexpected equilibrium " + describe(r.equilibria[i]));
    }
  }
  if (expected.majority_chain && *expected.majority_chain != r.prediction.majority_chain) {
    check.details.push_back("majority_chain: expected " +
                            std::string(to_string(*expected.majority_chain)) + ", got " +
                            std::string(to_string(r.prediction.majority_chain)));
  }
  check.status = check.details.empty() ? CheckStatus::Match : CheckStatus::Mismatch;
  return check;
}

ExpectedEquilibrium expect(Index row, Index col, std::string_view v, std::string_view c) {
  return {row, col, Rational::parse(v), Rational::parse(c)};
}

Scenario table_row(int number, std::string_view beta, std::string_view gamma,
                   std::vector<ExpectedEquilibrium> equilibria) {
  Scenario s;
  s.name = "Simulation " + std::to_string(number);
  s.params.beta = Rational::parse(beta);
  s.params.gamma = Rational::parse(gamma);
  s.params.mode = GovernanceMode::OffChain;
  s.expected = ExpectedOutcome{std::move(equilibria), std::nullopt};
  return s;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Match:
      return "Match";
    case CheckStatus::Mismatch:
      return "Mismatch";
    case CheckStatus::NotChecked:
      return "NotChecked";
  }
  return "?";
}

ScenarioResult run_scenario(const Scenario& scenario) {
  ScenarioResult r;
  r.name = scenario.name;
  r.params = scenario.params;
  try {
    validate(scenario.params);
    const auto [payoff_v, payoff_c] =
        cumulative_payoffs(scenario.params.k, scenario.params.n, scenario.params.s_v,
                           scenario.params.s_c);
    const BimatrixGame game =
        build_governance_game(scenario.params.beta, scenario.params.gamma, payoff_v, payoff_c);
    r.pure_equilibria = enumerate_pure_equilibria(game);
    r.equilibria = enumerate_mixed_equilibria(game);
    r.degenerate_game = !r.equilibria.empty() && r.equilibria.front().degenerate_game;
    r.prediction = predict_outcome(scenario.params);
  } catch (const ValidationError& e) {
    throw ValidationError("scenario '" + scenario.name + "': " + e.what());
  }

  std::size_t mixed_only = 0;
  for (const auto& eq : r.equilibria) mixed_only += eq.kind == EquilibriumKind::Mixed ? 1 : 0;
  if (mixed_only > 0) {
    r.notes.push_back("support enumeration found " + std::to_string(mixed_only) +
                      " equilibria beyond the pure ones");
  }
  if (r.degenerate_game) {
    r.notes.push_back("degenerate game: equilibria form a continuum; extreme points listed");
  }
  const int vote = lean(scenario.params.beta);
  const int community = lean(scenario.params.gamma);
  if (vote != 0 && community != 0 && vote != community) {
    r.notes.emplace_back(kIndependentCommunityNote);
  }
  r.expectation_check =
      scenario.expected ? check_expected(*scenario.expected, r) : ExpectationCheck{};
  return r;
}

std::vector<ScenarioResult> run_scenarios(const std::vector<Scenario>& scenarios) {
  std::vector<std::future<ScenarioResult>> pending;
  pending.reserve(scenarios.size());
  for (const auto& s : scenarios) {
    pending.push_back(std::async(std::launch::async, [&s] { return run_scenario(s); }));
  }
  std::vector<ScenarioResult> out;
  out.reserve(scenarios.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::vector<Scenario> table1_scenarios() {
  return {
      table_row(1, "1", "1", {expect(kYes, kUpgraded, "1", "1")}),
      table_row(2, "0", "0", {expect(kNo, kOriginal, "1", "1")}),
      table_row(3, "1", "0", {expect(kYes, kOriginal, "1", "1")}),
      table_row(4, "0", "1", {expect(kNo, kUpgraded, "1", "1")}),
      table_row(5, "1/2", "1/2",
                {expect(kYes, kUpgraded, "1/2", "1/2"), expect(kYes, kOriginal, "1/2", "1/2"),
                 expect(kNo, kUpgraded, "1/2", "1/2"), expect(kNo, kOriginal, "1/2", "1/2")}),
      table_row(6, "3/5", "7/10", {expect(kYes, kUpgraded, "3/5", "7/10")}),
      table_row(7, "1/5", "2/5", {expect(kNo, kOriginal, "4/5", "3/5")}),
      table_row(8, "7/10", "1/5", {expect(kYes, kOriginal, "7/10", "4/5")}),
      table_row(9, "7/20", "18/25", {expect(kNo, kUpgraded, "13/20", "18/25")}),
  };
}

std::vector<ScenarioResult> run_table1_suite() { return run_scenarios(table1_scenarios()); }

CaseStudyResult run_ethereum_case_study(const CaseStudyOptions& options) {
  CaseStudyResult report;
  report.gamma_assumed = !options.gamma.has_value();
  report.gamma = options.gamma.value_or(kEthereumAssumedGamma);

  Scenario s;
  s.name = "Ethereum DAO fork (2016)";
  s.params.mode = GovernanceMode::OffChain;
  s.params.beta = options.beta.value_or(kEthereumBeta);
  s.params.gamma = report.gamma;
  report.result = run_scenario(s);
  if (report.gamma_assumed) {
    report.result.notes.push_back("gamma = " + report.gamma.to_string() +
                                  " is assumed (no measured value exists), not data");
  }

  const PredictionResult& p = report.result.prediction;
  auto& check = report.comparison;
  if (p.majority_chain != report.observation.majority_chain) {
    check.details.push_back("majority_chain: observed " +
                            std::string(to_string(report.observation.majority_chain)) +
                            ", predicted " + std::string(to_string(p.majority_chain)));
  }
  const bool predicts_fork = p.fork_risk != ForkRisk::None;
  if (predicts_fork != report.observation.hard_fork) {
    check.details.push_back(std::string("fork_risk: observed ") +
                            (report.observation.hard_fork ? "a hard fork" : "no hard fork") +
                            ", predicted " + std::string(to_string(p.fork_risk)));
  }
  check.status = check.details.empty() ? CheckStatus::Match : CheckStatus::Mismatch;
  report.result.expectation_check = check;
  return report;
}

}  // namespace govgame
