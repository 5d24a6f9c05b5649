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

#ifndef GOVGAME_SCENARIO_HPP_
#define GOVGAME_SCENARIO_HPP_

// End-to-end runs of the governance game: build the 2x2 game, enumerate its
// equilibria, predict the outcome and compare against recorded expectations.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "govgame/game.hpp"
#include "govgame/governance.hpp"

namespace govgame {

struct ExpectedEquilibrium {
  Index row = kYes;       // kYes or kNo
  Index col = kUpgraded;  // kUpgraded or kOriginal
  Rational payoff_v;
  Rational payoff_c;
  friend bool operator==(const ExpectedEquilibrium&, const ExpectedEquilibrium&) = default;
};

struct ExpectedOutcome {
  std::optional<std::vector<ExpectedEquilibrium>> equilibria;
  std::optional<Chain> majority_chain;
  friend bool operator==(const ExpectedOutcome&, const ExpectedOutcome&) = default;
};

struct Scenario {
  std::string name;
  GovernanceParams params;
  std::optional<ExpectedOutcome> expected;
  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class CheckStatus { Match, Mismatch, NotChecked };

struct ExpectationCheck {
  CheckStatus status = CheckStatus::NotChecked;
  std::vector<std::string> details;  // one line per mismatching field
};

struct ScenarioResult {
  std::string name;
  GovernanceParams params;
  // Extreme equilibria from support enumeration, canonical order.
  std::vector<RationalEquilibrium> equilibria;
  std::vector<RationalEquilibrium> pure_equilibria;
  bool degenerate_game = false;
  PredictionResult prediction;
  std::vector<std::string> notes;
  ExpectationCheck expectation_check;
};

// Note attached when the community's preferred chain contradicts the vote.
inline constexpr std::string_view kIndependentCommunityNote =
    "community decided independently of the voting outcome";

// Throws ValidationError prefixed with the scenario name on invalid params.
ScenarioResult run_scenario(const Scenario& scenario);

// Runs scenarios concurrently; results keep the input order.
std::vector<ScenarioResult> run_scenarios(const std::vector<Scenario>& scenarios);

// The nine reference simulations with S(V) = S(C) = 1 and their recorded
// equilibria (exact fraction strings).
std::vector<Scenario> table1_scenarios();
std::vector<ScenarioResult> run_table1_suite();

// Static record of what happened after the DAO-fork vote.
struct HistoricalObservation {
  Chain majority_chain = Chain::Upgraded;
  bool hard_fork = true;
  std::string description = "ETH/ETC split occurred; majority moved to upgraded chain";
};

struct CaseStudyOptions {
  std::optional<Rational> beta;   // default 27/50 (54% of mining pools voted yes)
  std::optional<Rational> gamma;  // default 7/10, an assumption rather than data
};

struct CaseStudyResult {
  ScenarioResult result;
  Rational gamma;
  bool gamma_assumed = true;
  HistoricalObservation observation;
  // Prediction vs. observation: majority chain, and a fork iff fork risk is not None.
  ExpectationCheck comparison;
};

inline const Rational kEthereumBeta = Rational(27, 50);
inline const Rational kEthereumAssumedGamma = Rational(7, 10);

CaseStudyResult run_ethereum_case_study(const CaseStudyOptions& options = {});

// Scenario file: {"scenarios": [{"name", "mode", "beta", "gamma", "gamma_prime"?,
// "k", "n", "s_v"?, "s_c"?, "tie_break"?, "expected"?}, ...]}. Rationals may be
// numbers or "p/q" strings. Unknown fields are rejected. Throws ParseError
// with a line or field location, or ValidationError listing every scenario
// whose parameters violate an invariant.
std::vector<Scenario> load_scenarios(std::string_view text);
std::string serialize_scenarios(const std::vector<Scenario>& scenarios);

// Full-fidelity JSON array of results, rationals as "p/q" strings.
std::string results_to_json(const std::vector<ScenarioResult>& results);
// One line per equilibrium: simulation, beta, gamma, equilibrium_index, yes,
// no, upgraded, original, v_payoff, c_payoff.
std::string results_to_csv(const std::vector<ScenarioResult>& results);
std::string case_study_to_json(const CaseStudyResult& report);
std::string prediction_to_json(const GovernanceParams& params, const PredictionResult& prediction);

std::string_view to_string(CheckStatus s);

}  // namespace govgame

#endif  // GOVGAME_SCENARIO_HPP_
