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

#ifndef GOVGAME_EQUILIBRIA_HPP_
#define GOVGAME_EQUILIBRIA_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "govgame/game.hpp"
#include "govgame/linear_system.hpp"

namespace govgame {

// Every pure profile where each player's payoff is a column/row maximum.
// Row-major order. Ties are all kept.
template <typename Scalar>
std::vector<EquilibriumResult<Scalar>> enumerate_pure_equilibria(
    const BasicBimatrixGame<Scalar>& game) {
  const auto& a = game.payoff1();
  const auto& b = game.payoff2();
  const Vector<Scalar> col_max = a.colwise().maxCoeff().transpose();
  const Vector<Scalar> row_max = b.rowwise().maxCoeff();
  std::vector<EquilibriumResult<Scalar>> out;
  for (Index i = 0; i < game.rows(); ++i) {
    for (Index j = 0; j < game.cols(); ++j) {
      if (a(i, j) == col_max[j] && b(i, j) == row_max[i]) {
        out.push_back(make_equilibrium_result(game, StrategyProfile<Scalar>::pure(game, {i, j})));
      }
    }
  }
  return out;
}

namespace detail {

// A vertex of the best-response polyhedron
//   { (x, v) : x >= 0, sum(x) = 1, (M' x)_j <= v for every opponent strategy j }
// where M holds the opponent's payoffs indexed (own strategy, opponent strategy).
// `zero[i]` and `tight[j]` are the vertex's labels.
template <typename Scalar>
struct PolytopeVertex {
  Vector<Scalar> x;
  std::vector<bool> zero;
  std::vector<bool> tight;

  std::size_t label_count() const {
    return static_cast<std::size_t>(std::count(zero.begin(), zero.end(), true) +
                                    std::count(tight.begin(), tight.end(), true));
  }
};

inline std::vector<Index> bits_of(std::uint32_t mask, Index width) {
  std::vector<Index> idx;
  for (Index i = 0; i < width; ++i) {
    if (mask & (std::uint32_t{1} << i)) idx.push_back(i);
  }
  return idx;
}

// Support enumeration: for every support S of own strategies and every set T
// of opponent strategies required to be indifferent, solve
//   sum_{i in S} x_i = 1,   sum_{i in S} M(i, j) x_i = v  (j in T)
// and keep the unique, feasible solutions. Mixed strategies whose defining
// system is not unique are not vertices and are reached through smaller sets.
template <typename Scalar>
std::vector<PolytopeVertex<Scalar>> best_response_vertices(const Matrix<Scalar>& m) {
  const Index own = m.rows();
  const Index opp = m.cols();
  std::vector<PolytopeVertex<Scalar>> vertices;
  for (std::uint32_t s_mask = 1; s_mask < (std::uint32_t{1} << own); ++s_mask) {
    const std::vector<Index> support = bits_of(s_mask, own);
    const Index ns = static_cast<Index>(support.size());
    for (std::uint32_t t_mask = 1; t_mask < (std::uint32_t{1} << opp); ++t_mask) {
      const std::vector<Index> tight = bits_of(t_mask, opp);
      const Index nt = static_cast<Index>(tight.size());
      if (nt < ns) continue;  // fewer equations than unknowns

      Matrix<Scalar> sys = Matrix<Scalar>::Zero(nt + 1, ns + 1);
      Vector<Scalar> rhs = Vector<Scalar>::Zero(nt + 1);
      for (Index k = 0; k < ns; ++k) sys(0, k) = Scalar(1);
      rhs[0] = Scalar(1);
      for (Index e = 0; e < nt; ++e) {
        for (Index k = 0; k < ns; ++k) sys(e + 1, k) = m(support[k], tight[e]);
        sys(e + 1, ns) = Scalar(-1);
      }
      const LinearSolution<Scalar> sol = solve_exact<Scalar>(std::move(sys), std::move(rhs));
      if (sol.status != SolveStatus::Unique) continue;

      Vector<Scalar> x = Vector<Scalar>::Zero(own);
      bool feasible = true;
      for (Index k = 0; k < ns; ++k) {
        if (sol.x[k] < Scalar(0)) {
          feasible = false;
          break;
        }
        x[support[k]] = sol.x[k];
      }
      if (!feasible) continue;
      const Scalar& value = sol.x[ns];
      const Vector<Scalar> opp_payoff = m.transpose() * x;
      if ((opp_payoff.array() > value).any()) continue;

      const bool seen = std::any_of(vertices.begin(), vertices.end(),
                                    [&](const PolytopeVertex<Scalar>& v) { return v.x == x; });
      if (seen) continue;

      PolytopeVertex<Scalar> vertex{x, std::vector<bool>(static_cast<std::size_t>(own)),
                                    std::vector<bool>(static_cast<std::size_t>(opp))};
      for (Index i = 0; i < own; ++i) vertex.zero[static_cast<std::size_t>(i)] = x[i] == Scalar(0);
      for (Index j = 0; j < opp; ++j) {
        vertex.tight[static_cast<std::size_t>(j)] = opp_payoff[j] == value;
      }
      vertices.push_back(std::move(vertex));
    }
  }
  return vertices;
}

template <typename Scalar>
bool lex_greater(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

}  // namespace detail

// Largest rows + cols accepted by enumerate_mixed_equilibria; the work grows
// as 2^(rows + cols).
inline constexpr Index kMaxMixedEnumerationStrategies = 20;

// True if some strategy (pure or mixed) of either player has more pure best
// responses than the size of its support. Equivalent to some best-response
// polytope vertex carrying more labels than the player's strategy count.
template <typename Scalar>
bool is_degenerate(const BasicBimatrixGame<Scalar>& game);

// All extreme Nash equilibria, found by support enumeration with exact
// arithmetic. For non-degenerate games this is the complete (finite)
// equilibrium set. For degenerate games every result has degenerate_game set
// and only the extreme points of the equilibrium components are listed.
//
// Ordering is canonical: sigma1 lexicographically descending, then sigma2, so
// pure equilibria come out in row-major order.
template <typename Scalar>
std::vector<EquilibriumResult<Scalar>> enumerate_mixed_equilibria(
    const BasicBimatrixGame<Scalar>& game) {
  if (game.rows() + game.cols() > kMaxMixedEnumerationStrategies) {
    throw ValidationError("mixed enumeration supports at most " +
                          std::to_string(kMaxMixedEnumerationStrategies) +
                          " strategies in total");
  }
  // Player 1's mix is constrained by player 2's payoffs and vice versa.
  const auto row_vertices = detail::best_response_vertices<Scalar>(game.payoff2());
  const Matrix<Scalar> a_t = game.payoff1().transpose();
  const auto col_vertices = detail::best_response_vertices<Scalar>(a_t);

  bool degenerate = false;
  for (const auto& v : row_vertices) {
    degenerate = degenerate || static_cast<Index>(v.label_count()) > game.rows();
  }
  for (const auto& v : col_vertices) {
    degenerate = degenerate || static_cast<Index>(v.label_count()) > game.cols();
  }

  std::vector<EquilibriumResult<Scalar>> out;
  for (const auto& p : row_vertices) {
    for (const auto& q : col_vertices) {
      bool complete = true;
      for (std::size_t i = 0; complete && i < p.zero.size(); ++i) complete = p.zero[i] || q.tight[i];
      for (std::size_t j = 0; complete && j < q.zero.size(); ++j) complete = q.zero[j] || p.tight[j];
      if (!complete) continue;
      StrategyProfile<Scalar> profile{MixedStrategy<Scalar>(p.x), MixedStrategy<Scalar>(q.x)};
      if (!is_equilibrium(game, profile)) continue;
      out.push_back(make_equilibrium_result(game, std::move(profile), degenerate));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    if (l.profile.sigma1.probs() != r.profile.sigma1.probs()) {
      return detail::lex_greater(l.profile.sigma1.probs(), r.profile.sigma1.probs());
    }
    return detail::lex_greater(l.profile.sigma2.probs(), r.profile.sigma2.probs());
  });
  return out;
}

template <typename Scalar>
bool is_degenerate(const BasicBimatrixGame<Scalar>& game) {
  for (const auto& v : detail::best_response_vertices<Scalar>(game.payoff2())) {
    if (static_cast<Index>(v.label_count()) > game.rows()) return true;
  }
  const Matrix<Scalar> a_t = game.payoff1().transpose();
  for (const auto& v : detail::best_response_vertices<Scalar>(a_t)) {
    if (static_cast<Index>(v.label_count()) > game.cols()) return true;
  }
  return false;
}

}  // namespace govgame

#endif  // GOVGAME_EQUILIBRIA_HPP_
