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

#include "govgame/governance.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "govgame/error.hpp"

namespace govgame {
namespace {

const Rational kHalf = Rational(1, 2);

void check_unit_interval(const Rational& x, const char* name) {
  if (x < 0 || x > 1) throw ValidationError(std::string(name) + " out of [0,1]");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// gamma' defaults to gamma outside the on-chain reject branch.
const Rational& gamma_prime_or_gamma(const GovernanceParams& p) {
  return p.gamma_prime ? *p.gamma_prime : p.gamma;
}

bool on_chain_reject(const GovernanceParams& p, Regime regime) {
  return p.mode == GovernanceMode::OnChain && regime == Regime::MajorityReject;
}

const Rational& require_gamma_prime(const GovernanceParams& p) {
  if (!p.gamma_prime) {
    throw ValidationError("gamma_prime is required for an on-chain majority reject");
  }
  return *p.gamma_prime;
}

ForkRisk mode_risk(GovernanceMode mode) {
  switch (mode) {
    case GovernanceMode::NoGovernance:
      return ForkRisk::High;
    case GovernanceMode::OffChain:
      return ForkRisk::Present;
    case GovernanceMode::OnChain:
      return ForkRisk::Reduced;
  }
  return ForkRisk::High;
}

}  // namespace

std::vector<std::string> validate(const GovernanceParams& p) {
  check_unit_interval(p.beta, "beta");
  check_unit_interval(p.gamma, "gamma");
  if (p.gamma_prime) check_unit_interval(*p.gamma_prime, "gamma_prime");
  if (p.k < 1) throw ValidationError("k must be a positive integer");
  if (p.n < 1) throw ValidationError("n must be a positive integer");
  if (p.k > p.n) throw ValidationError("k must not exceed n");
  if (p.s_v <= 0) throw ValidationError("s_v must be positive");
  if (p.s_c <= 0) throw ValidationError("s_c must be positive");

  std::vector<std::string> warnings;
  if (p.gamma_prime) {
    if (p.mode != GovernanceMode::OnChain) {
      warnings.push_back("gamma_prime is ignored outside on-chain governance");
    } else if (*p.gamma_prime <= p.gamma) {
      warnings.push_back("gamma_prime <= gamma: the testnet round did not win over more members");
    }
  }
  if (p.tie_break && p.beta != kHalf) {
    warnings.push_back("tie_break is ignored because beta != 1/2");
  }
  return warnings;
}

BimatrixGame build_governance_game(const Rational& beta, const Rational& gamma,
                                   const Rational& payoff_v, const Rational& payoff_c) {
  check_unit_interval(beta, "beta");
  check_unit_interval(gamma, "gamma");
  if (payoff_v <= 0) throw ValidationError("voter payoff scale must be positive");
  if (payoff_c <= 0) throw ValidationError("community payoff scale must be positive");

  const Rational yes_v = beta * payoff_v;
  const Rational no_v = (1 - beta) * payoff_v;
  const Rational up_c = gamma * payoff_c;
  const Rational orig_c = (1 - gamma) * payoff_c;
  RationalMatrix voters = make_matrix({{yes_v, yes_v}, {no_v, no_v}});
  RationalMatrix community = make_matrix({{up_c, orig_c}, {up_c, orig_c}});
  return BimatrixGame(std::move(voters), std::move(community), {"Yes", "No"},
                      {"Upgraded", "Original"});
}

std::pair<Rational, Rational> cumulative_payoffs(std::int64_t k, std::int64_t n,
                                                 const Rational& s_v, const Rational& s_c) {
  if (k < 1 || n < 1) throw ValidationError("k and n must be positive integers");
  if (s_v <= 0 || s_c <= 0) throw ValidationError("s_v and s_c must be positive");
  return {Rational(static_cast<long long>(k)) * s_v, Rational(static_cast<long long>(n)) * s_c};
}

ChainSplit no_governance_split(const Rational& gamma, std::int64_t n, const Rational& s_c) {
  check_unit_interval(gamma, "gamma");
  if (n < 1) throw ValidationError("n must be a positive integer");
  if (s_c <= 0) throw ValidationError("s_c must be positive");
  const Rational mass = Rational(static_cast<long long>(n)) * s_c;
  return {gamma * mass, (1 - gamma) * mass};
}

Regime classify_regime(const GovernanceParams& p) {
  if (p.beta == 1 && p.gamma == 1) return Regime::UnanimousAccept;
  if (p.beta > kHalf) return Regime::MajorityAccept;
  if (p.beta < kHalf) return Regime::MajorityReject;
  return Regime::Tie;
}

Regime effective_regime(const GovernanceParams& p) {
  const Regime r = classify_regime(p);
  if (r != Regime::Tie || !p.tie_break) return r;
  return *p.tie_break == TieBreak::Accept ? Regime::MajorityAccept : Regime::MajorityReject;
}

Rational voter_surplus(const GovernanceParams& p) {
  const Rational mass = Rational(static_cast<long long>(p.k)) * p.s_v;
  switch (const Regime regime = effective_regime(p)) {
    case Regime::UnanimousAccept:
    case Regime::MajorityAccept:
      return (2 * p.beta - 1) * mass;
    case Regime::MajorityReject:
      if (on_chain_reject(p, regime)) return (2 * p.beta - 1) * mass;
      return (1 - 2 * p.beta) * mass;
    case Regime::Tie:
      return 0;
  }
  return 0;
}

Rational community_surplus(const GovernanceParams& p) {
  const Rational mass = Rational(static_cast<long long>(p.n)) * p.s_c;
  switch (const Regime regime = effective_regime(p)) {
    case Regime::UnanimousAccept:
      return mass;
    case Regime::MajorityAccept:
    case Regime::Tie:
      return (2 * p.gamma - 1) * mass;
    case Regime::MajorityReject:
      if (on_chain_reject(p, regime)) return (2 * require_gamma_prime(p) - 1) * mass;
      return (1 - 2 * p.gamma) * mass;
  }
  return 0;
}

Rational total_surplus(const GovernanceParams& p) {
  return voter_surplus(p) + community_surplus(p);
}

SurplusReport surplus_report(const GovernanceParams& p) {
  const auto [voter_mass, community_mass] = cumulative_payoffs(p.k, p.n, p.s_v, p.s_c);
  const Regime regime = effective_regime(p);
  const Rational& split_gamma = on_chain_reject(p, regime) ? require_gamma_prime(p) : p.gamma;
  const ChainSplit split = no_governance_split(split_gamma, p.n, p.s_c);
  (void)community_mass;

  SurplusReport r;
  r.s_yes = p.beta * voter_mass;
  r.s_no = (1 - p.beta) * voter_mass;
  r.s_u = split.upgraded;
  r.s_o = split.original;
  r.surplus_v = voter_surplus(p);
  r.surplus_c = community_surplus(p);
  r.total = r.surplus_v + r.surplus_c;
  return r;
}

PredictionResult predict_outcome(const GovernanceParams& p) {
  PredictionResult out;
  out.notes = validate(p);
  out.regime = effective_regime(p);
  out.surplus = surplus_report(p);

  const Regime raw = classify_regime(p);
  if (raw == Regime::MajorityAccept && p.beta == 1) {
    out.notes.push_back("unanimous vote but gamma < 1: part of the community stays behind");
  }
  if (raw == Regime::Tie && p.tie_break) {
    out.notes.push_back(std::string("tied vote broken as ") + std::string(to_string(*p.tie_break)));
  }

  if (out.regime == Regime::UnanimousAccept) {
    out.majority_chain = Chain::Upgraded;
    out.fork_risk = ForkRisk::None;
    return out;
  }
  out.fork_risk = mode_risk(p.mode);
  if (p.mode == GovernanceMode::NoGovernance) {
    // Members choose individually; the vote carries no weight, tied or not.
    out.majority_chain = p.gamma > kHalf   ? Chain::Upgraded
                         : p.gamma < kHalf ? Chain::Original
                                           : Chain::Split5050;
    return out;
  }
  if (out.regime == Regime::Tie) {
    out.majority_chain = Chain::Split5050;
    out.notes.push_back(
        "tied vote (beta = 1/2): the majority rule does not pick a side; pass a tie-break to "
        "force accept or reject");
    return out;
  }
  if (out.regime == Regime::MajorityAccept) {
    out.majority_chain = Chain::Upgraded;
    return out;
  }
  if (p.mode == GovernanceMode::OffChain) {
    out.majority_chain = Chain::Original;
    return out;
  }
  // On-chain reject: the testnet round may have shifted the community.
  const int s = out.surplus.total.sign();
  out.majority_chain = s > 0 ? Chain::Upgraded : (s < 0 ? Chain::Original : Chain::Split5050);
  if (s == 0) out.notes.push_back("total surplus is zero: the community is evenly balanced");
  return out;
}

BimatrixGame EvaluationMatrix::row_game(std::size_t row) const {
  const auto& r = cells.at(row);
  return BimatrixGame(make_matrix({{r[0].voter, r[1].voter}}),
                      make_matrix({{r[0].community, r[1].community}}), {"V"},
                      {"Upgraded", "Original"});
}

EvaluationMatrix build_evaluation_matrix(const GovernanceParams& p) {
  const auto [sv, sc] = cumulative_payoffs(p.k, p.n, p.s_v, p.s_c);
  const Rational& b = p.beta;
  const Rational& g = p.gamma;
  const Rational& g_reject = p.mode == GovernanceMode::OnChain ? gamma_prime_or_gamma(p) : g;

  EvaluationMatrix m;
  m.mode = p.mode;
  m.cells[0][0] = {"A1", sv, sc, true, "unanimous accept: no hard fork"};
  m.cells[0][1] = {"A2", 0, 0, false, "unreachable: nobody stays on the original chain"};
  m.cells[1][0] = {"B1", b * sv, g * sc, true, "majority accept, upgraded chain"};
  m.cells[1][1] = {"B2", (1 - b) * sv, (1 - g) * sc, true, "majority accept, original chain"};
  m.cells[2][0] = {"C1", b * sv, g_reject * sc, true, "majority reject, upgraded chain"};
  m.cells[2][1] = {"C2", (1 - b) * sv, (1 - g_reject) * sc, true,
                   "majority reject, original chain"};
  return m;
}

std::string_view to_string(GovernanceMode m) {
  switch (m) {
    case GovernanceMode::NoGovernance:
      return "none";
    case GovernanceMode::OffChain:
      return "off_chain";
    case GovernanceMode::OnChain:
      return "on_chain";
  }
  return "?";
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::UnanimousAccept:
      return "UnanimousAccept";
    case Regime::MajorityAccept:
      return "MajorityAccept";
    case Regime::MajorityReject:
      return "MajorityReject";
    case Regime::Tie:
      return "Tie";
  }
  return "?";
}

std::string_view to_string(Chain c) {
  switch (c) {
    case Chain::Upgraded:
      return "Upgraded";
    case Chain::Original:
      return "Original";
    case Chain::Split5050:
      return "Split5050";
  }
  return "?";
}

std::string_view to_string(ForkRisk f) {
  switch (f) {
    case ForkRisk::None:
      return "None";
    case ForkRisk::Reduced:
      return "Reduced";
    case ForkRisk::Present:
      return "Present";
    case ForkRisk::High:
      return "High";
  }
  return "?";
}

std::string_view to_string(TieBreak t) { return t == TieBreak::Accept ? "accept" : "reject"; }

GovernanceMode parse_mode(std::string_view s) {
  const std::string v = lower(s);
  if (v == "none") return GovernanceMode::NoGovernance;
  if (v == "off_chain") return GovernanceMode::OffChain;
  if (v == "on_chain") return GovernanceMode::OnChain;
  throw ValidationError("unknown governance mode '" + std::string(s) +
                        "' (expected none, off_chain or on_chain)");
}

Chain parse_chain(std::string_view s) {
  const std::string v = lower(s);
  if (v == "upgraded") return Chain::Upgraded;
  if (v == "original") return Chain::Original;
  if (v == "split" || v == "split5050") return Chain::Split5050;
  throw ValidationError("unknown chain '" + std::string(s) +
                        "' (expected upgraded, original or split)");
}

TieBreak parse_tie_break(std::string_view s) {
  const std::string v = lower(s);
  if (v == "accept") return TieBreak::Accept;
  if (v == "reject") return TieBreak::Reject;
  throw ValidationError("unknown tie break '" + std::string(s) + "' (expected accept or reject)");
}

}  // namespace govgame
