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

#ifndef GOVGAME_PARETO_HPP_
#define GOVGAME_PARETO_HPP_

#include <vector>

#include "govgame/equilibria.hpp"
#include "govgame/game.hpp"

namespace govgame {

// `a` weakly improves both payoffs over `b` and strictly improves one.
template <typename Scalar>
bool pareto_dominates(const BasicBimatrixGame<Scalar>& game, PureProfile a, PureProfile b) {
  const Scalar& a1 = game.payoff1()(a.row, a.col);
  const Scalar& a2 = game.payoff2()(a.row, a.col);
  const Scalar& b1 = game.payoff1()(b.row, b.col);
  const Scalar& b2 = game.payoff2()(b.row, b.col);
  return a1 >= b1 && a2 >= b2 && (a1 > b1 || a2 > b2);
}

template <typename Scalar>
bool is_pareto_optimal(const BasicBimatrixGame<Scalar>& game, PureProfile cell) {
  for (Index i = 0; i < game.rows(); ++i) {
    for (Index j = 0; j < game.cols(); ++j) {
      if (pareto_dominates(game, {i, j}, cell)) return false;
    }
  }
  return true;
}

// Pure profiles not Pareto-dominated by any other pure profile, row-major.
template <typename Scalar>
std::vector<PureProfile> pareto_optimal_pure_profiles(const BasicBimatrixGame<Scalar>& game) {
  std::vector<PureProfile> out;
  for (Index i = 0; i < game.rows(); ++i) {
    for (Index j = 0; j < game.cols(); ++j) {
      if (is_pareto_optimal(game, {i, j})) out.push_back({i, j});
    }
  }
  return out;
}

// Strong Nash for two players: stable against each single player (Nash) and
// against the grand coalition, whose pure joint deviations must not
// Pareto-improve the profile. Mixed coalition deviations are not considered.
template <typename Scalar>
bool is_strong_nash(const BasicBimatrixGame<Scalar>& game, PureProfile cell) {
  if (cell.row < 0 || cell.row >= game.rows() || cell.col < 0 || cell.col >= game.cols()) {
    throw ValidationError("profile is outside the game");
  }
  if (!is_equilibrium(game, StrategyProfile<Scalar>::pure(game, cell))) return false;
  return is_pareto_optimal(game, cell);
}

}  // namespace govgame

#endif  // GOVGAME_PARETO_HPP_
