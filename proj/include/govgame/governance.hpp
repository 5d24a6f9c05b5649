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

#ifndef GOVGAME_GOVERNANCE_HPP_
#define GOVGAME_GOVERNANCE_HPP_

// Protocol-upgrade governance as a voters-vs-community game: the 2x2 payoff
// matrix, the per-regime surplus formulas and the majority/fork predictor.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "govgame/game.hpp"
#include "govgame/rational.hpp"

namespace govgame {

enum class GovernanceMode { NoGovernance, OffChain, OnChain };
enum class TieBreak { Accept, Reject };
enum class Regime { UnanimousAccept, MajorityAccept, MajorityReject, Tie };
enum class Chain { Upgraded, Original, Split5050 };
// Ordinal: None < Reduced < Present < High.
enum class ForkRisk { None, Reduced, Present, High };

// Row/column indices of the governance game.
inline constexpr Index kYes = 0;
inline constexpr Index kNo = 1;
inline constexpr Index kUpgraded = 0;
inline constexpr Index kOriginal = 1;

struct GovernanceParams {
  Rational beta;   // share of voters voting Yes
  Rational gamma;  // share of the community moving to the upgraded chain
  // Share after an on-chain testnet round; only read in on-chain mode.
  std::optional<Rational> gamma_prime;
  std::int64_t k = 1;  // voters
  std::int64_t n = 1;  // community members, voters included
  Rational s_v = 1;    // payoff unit per voter
  Rational s_c = 1;    // payoff unit per community member
  GovernanceMode mode = GovernanceMode::OffChain;
  // Forces a side when beta is exactly 1/2; without it a tie stays a tie.
  std::optional<TieBreak> tie_break;

  friend bool operator==(const GovernanceParams&, const GovernanceParams&) = default;
};

// Throws ValidationError on a violated invariant. Returns warnings for
// suspicious but legal input (for example gamma_prime <= gamma).
std::vector<std::string> validate(const GovernanceParams& params);

struct SurplusReport {
  Rational s_yes;      // beta k s_v
  Rational s_no;       // (1 - beta) k s_v
  Rational s_u;        // community payoff mass on the upgraded chain
  Rational s_o;        // community payoff mass on the original chain
  Rational surplus_v;  // S(V)
  Rational surplus_c;  // S(C)
  Rational total;      // S

  friend bool operator==(const SurplusReport&, const SurplusReport&) = default;
};

struct PredictionResult {
  Regime regime = Regime::Tie;
  Chain majority_chain = Chain::Split5050;
  ForkRisk fork_risk = ForkRisk::None;
  SurplusReport surplus;
  std::vector<std::string> notes;
};

// Rows (Yes, No), columns (Upgraded, Original). Voter payoffs depend only on
// the row (beta or 1 - beta times payoff_v), community payoffs only on the
// column (gamma or 1 - gamma times payoff_c).
BimatrixGame build_governance_game(const Rational& beta, const Rational& gamma,
                                   const Rational& payoff_v, const Rational& payoff_c);

// (k s_v, n s_c): cumulative payoffs of homogeneous voters and community.
std::pair<Rational, Rational> cumulative_payoffs(std::int64_t k, std::int64_t n,
                                                 const Rational& s_v, const Rational& s_c);

struct ChainSplit {
  Rational upgraded;  // S_U
  Rational original;  // S_O
};

// Community payoff mass per chain when members choose individually.
ChainSplit no_governance_split(const Rational& gamma, std::int64_t n, const Rational& s_c);

// Classification by the vote alone (plus gamma for unanimity). beta = 1/2 is
// always Tie here; see effective_regime for the tie-break.
Regime classify_regime(const GovernanceParams& params);

// classify_regime with params.tie_break applied to a Tie.
Regime effective_regime(const GovernanceParams& params);

// S(V). Accept regimes: (2 beta - 1) k s_v. Majority reject: (1 - 2 beta) k s_v,
// i.e. S_No - S_Yes, which is positive; on-chain the reject branch instead
// keeps the signed S_Yes - S_No = (2 beta - 1) k s_v < 0 so that it can be
// summed with the post-testnet community surplus. Tie: 0.
Rational voter_surplus(const GovernanceParams& params);

// S(C). Unanimous: n s_c. Majority accept: (2 gamma - 1) n s_c. Off-chain
// (and no-governance) reject: (1 - 2 gamma) n s_c. On-chain reject:
// (2 gamma' - 1) n s_c; gamma_prime is required there. Tie: (2 gamma - 1) n s_c.
Rational community_surplus(const GovernanceParams& params);

// S = S(V) + S(C) under the regime's pairing of the two formulas.
Rational total_surplus(const GovernanceParams& params);

SurplusReport surplus_report(const GovernanceParams& params);

// Regime, destination chain of the majority and ordinal fork risk.
PredictionResult predict_outcome(const GovernanceParams& params);

// One cell of an off-/on-chain evaluation matrix. (voter, community) payoff
// pair; unreachable cells carry zero mass.
struct EvaluationCell {
  std::string id;  // "A1", "B2", ...
  Rational voter;
  Rational community;
  bool reachable = true;
  std::string annotation;
};

// Three rows (unanimous accept, majority accept, majority reject) by two
// columns (upgraded, original), scaled by S(V) = k s_v and S(C) = n s_c. The
// reject row uses gamma_prime in on-chain mode (gamma if absent).
struct EvaluationMatrix {
  GovernanceMode mode = GovernanceMode::OffChain;
  std::array<std::array<EvaluationCell, 2>, 3> cells;

  // The given row as a 1x2 game (voters fixed, community chooses a chain).
  BimatrixGame row_game(std::size_t row) const;
};

EvaluationMatrix build_evaluation_matrix(const GovernanceParams& params);

std::string_view to_string(GovernanceMode m);
std::string_view to_string(Regime r);
std::string_view to_string(Chain c);
std::string_view to_string(ForkRisk f);
std::string_view to_string(TieBreak t);

// Inverse of the to_string overloads ("none" | "off_chain" | "on_chain" for modes,
// "upgraded" | "original" | "split" for chains, "accept" | "reject" for tie breaks).
// Throw ValidationError on unknown names.
GovernanceMode parse_mode(std::string_view s);
Chain parse_chain(std::string_view s);
TieBreak parse_tie_break(std::string_view s);

}  // namespace govgame

#endif  // GOVGAME_GOVERNANCE_HPP_
