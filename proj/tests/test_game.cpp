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

#include "govgame/game.hpp"

#include "doctest.h"
#include "govgame/governance.hpp"
#include "govgame/linear_system.hpp"
#include "oracles.hpp"

using namespace govgame;

namespace {

Rational r(std::string_view s) { return Rational::parse(s); }

RationalProfile pure(const BimatrixGame& g, Index row, Index col) {
  return RationalProfile::pure(g, {row, col});
}

BimatrixGame zero_game(Index rows, Index cols) {
  return BimatrixGame(RationalMatrix::Zero(rows, cols), RationalMatrix::Zero(rows, cols));
}

}  // namespace

TEST_CASE("game construction checks shapes and labels") {
  CHECK_THROWS_AS(BimatrixGame(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(2, 3)),
                  ValidationError);
  CHECK_THROWS_AS(BimatrixGame(RationalMatrix::Zero(0, 2), RationalMatrix::Zero(0, 2)),
                  ValidationError);
  CHECK_THROWS_AS(BimatrixGame(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(2, 2), {"a"}),
                  ValidationError);
  const BimatrixGame g = zero_game(2, 3);
  CHECK(g.row_labels() == std::vector<std::string>{"R1", "R2"});
  CHECK(g.col_labels() == std::vector<std::string>{"C1", "C2", "C3"});
}

TEST_CASE("mixed strategy invariants") {
  CHECK_NOTHROW(RationalStrategy({r("1/3"), r("2/3")}));
  CHECK_THROWS_WITH_AS(RationalStrategy({r("1/2"), r("1/3")}), "mixed strategy entries must sum to 1",
                       ValidationError);
  CHECK_THROWS_AS(RationalStrategy({r("3/2"), r("-1/2")}), ValidationError);
  const auto e = RationalStrategy::pure(3, 1);
  CHECK(e.pure_index() == 1);
  CHECK(RationalStrategy::uniform(4)[2] == r("1/4"));
  CHECK(RationalStrategy({r("1/2"), 0, r("1/2")}).support() == std::vector<Index>{0, 2});
}

TEST_CASE("expected_payoff") {
  SUBCASE("unanimous governance game at (Yes, Upgraded) pays (1, 1)") {
    const auto g = build_governance_game(1, 1, 1, 1);
    CHECK(expected_payoff(g, pure(g, kYes, kUpgraded)) == std::pair<Rational, Rational>{1, 1});
  }
  SUBCASE("pure profile reads the cell") {
    oracle::RandomRationals gen(11);
    const auto g = gen.game(3, 4);
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 4; ++j) {
        const auto [u1, u2] = expected_payoff(g, pure(g, i, j));
        CHECK(u1 == g.payoff1()(i, j));
        CHECK(u2 == g.payoff2()(i, j));
      }
    }
  }
  SUBCASE("uniform mix in the beta=3/5, gamma=7/10 game") {
    const auto g = build_governance_game(r("3/5"), r("7/10"), 1, 1);
    const std::vector<Rational> half{r("1/2"), r("1/2")};
    const auto frozen = std::pair<Rational, Rational>{r("1/2"), r("1/2")};
    REQUIRE(oracle::expected_payoff(g, half, half) == frozen);
    const RationalProfile uniform{RationalStrategy::uniform(2), RationalStrategy::uniform(2)};
    CHECK(expected_payoff(g, uniform) == frozen);
  }
  SUBCASE("dimension mismatch names the player") {
    const auto g = zero_game(2, 3);
    const RationalProfile bad_two{RationalStrategy::uniform(2), RationalStrategy::uniform(2)};
    CHECK_THROWS_WITH_AS(expected_payoff(g, bad_two),
                         doctest::Contains("player 2"), ValidationError);
    const RationalProfile bad_one{RationalStrategy::uniform(3), RationalStrategy::uniform(3)};
    CHECK_THROWS_WITH_AS(expected_payoff(g, bad_one),
                         doctest::Contains("player 1"), ValidationError);
  }
}

TEST_CASE("best_response_payoff") {
  const auto g8 = build_governance_game(r("7/10"), r("1/5"), 1, 1);
  oracle::RandomRationals gen(3);
  for (int i = 0; i < 20; ++i) {
    const RationalStrategy opp(oracle::to_vector(gen.simplex(2)));
    CHECK(best_response_payoff(g8, Player::One, opp) == r("7/10"));
  }
  CHECK(best_response_payoff(zero_game(3, 2), Player::One, RationalStrategy::uniform(2)) == 0);
  const auto g7 = build_governance_game(r("1/5"), r("2/5"), 1, 1);
  CHECK(best_response_payoff(g7, Player::One, RationalStrategy::pure(2, kUpgraded)) == r("4/5"));
  CHECK(best_responses(g7, Player::Two, RationalStrategy::pure(2, kNo)) ==
        std::vector<Index>{kOriginal});
  CHECK_THROWS_AS(best_response_payoff(g7, Player::Two, RationalStrategy::uniform(3)),
                  ValidationError);
}

TEST_CASE("is_equilibrium") {
  const auto g = build_governance_game(1, 1, 1, 1);
  CHECK(is_equilibrium(g, pure(g, kYes, kUpgraded)));
  CHECK_FALSE(is_equilibrium(g, pure(g, kNo, kOriginal)));
  // Player 1 gains 1 by deviating; a tolerance of 1 accepts that.
  CHECK(is_equilibrium(g, pure(g, kNo, kUpgraded), Rational(1)));
  CHECK_FALSE(is_equilibrium(g, pure(g, kNo, kUpgraded), r("99/100")));
  const auto z = zero_game(2, 2);
  CHECK(is_equilibrium(z, RationalProfile{RationalStrategy::uniform(2), RationalStrategy({r("1/3"), r("2/3")})}));
  CHECK_THROWS_AS(is_equilibrium(g, pure(g, kYes, kUpgraded), Rational(-1)), ValidationError);
}

TEST_CASE("property: payoff is linear in each player's mix") {
  oracle::RandomRationals gen(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const Index rows = gen.integer(1, 4);
    const Index cols = gen.integer(1, 4);
    const auto g = gen.game(rows, cols);
    const auto lambda = gen.simplex(rows);
    const RationalStrategy sigma2(oracle::to_vector(gen.simplex(cols)));
    const auto [u1, u2] = expected_payoff(g, RationalProfile{RationalStrategy(oracle::to_vector(lambda)), sigma2});
    Rational s1 = 0;
    Rational s2 = 0;
    for (Index i = 0; i < rows; ++i) {
      const auto [e1, e2] = expected_payoff(g, RationalProfile{RationalStrategy::pure(rows, i), sigma2});
      s1 += lambda[static_cast<std::size_t>(i)] * e1;
      s2 += lambda[static_cast<std::size_t>(i)] * e2;
    }
    CHECK(u1 == s1);
    CHECK(u2 == s2);
    // Same value as the nested-loop oracle.
    std::vector<Rational> q(sigma2.probs().data(), sigma2.probs().data() + cols);
    CHECK(oracle::expected_payoff(g, lambda, q) == std::make_pair(u1, u2));
  }
}

TEST_CASE("exact linear solver") {
  SUBCASE("unique") {
    const auto sol = solve_exact<Rational>(make_matrix({{2, 1}, {1, 3}}),
                                           oracle::to_vector({Rational(3), Rational(5)}));
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.x[0] == r("4/5"));
    CHECK(sol.x[1] == r("7/5"));
  }
  SUBCASE("overdetermined but consistent") {
    const auto sol = solve_exact<Rational>(make_matrix({{1, 0}, {0, 1}, {1, 1}}),
                                           oracle::to_vector({Rational(1), Rational(2), Rational(3)}));
    REQUIRE(sol.status == SolveStatus::Unique);
    CHECK(sol.x[1] == 2);
  }
  SUBCASE("inconsistent") {
    const auto sol = solve_exact<Rational>(make_matrix({{1, 1}, {1, 1}}),
                                           oracle::to_vector({Rational(0), Rational(1)}));
    CHECK(sol.status == SolveStatus::Inconsistent);
  }
  SUBCASE("underdetermined") {
    const auto sol = solve_exact<Rational>(make_matrix({{1, 1}, {2, 2}}),
                                           oracle::to_vector({Rational(1), Rational(2)}));
    CHECK(sol.status == SolveStatus::Underdetermined);
    CHECK(sol.rank == 1);
  }
}

TEST_CASE("double instantiation compiles and agrees on simple games") {
  using GameD = BasicBimatrixGame<double>;
  Matrix<double> a(2, 2);
  a << 1, -1, -1, 1;
  const GameD g(a, -a);
  const StrategyProfile<double> p{MixedStrategy<double>::uniform(2), MixedStrategy<double>::uniform(2)};
  CHECK(expected_payoff(g, p).first == doctest::Approx(0.0));
  CHECK(is_equilibrium(g, p, 1e-12));
}
