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

#ifndef GOVGAME_GAME_HPP_
#define GOVGAME_GAME_HPP_

// Two-player normal-form games, mixed strategies and the payoff/best-response
// primitives everything else is built on. All types are templated on the
// scalar; the exact instantiation over Rational is aliased at the bottom.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "govgame/error.hpp"
#include "govgame/rational.hpp"

namespace govgame {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

enum class Player { One = 1, Two = 2 };

inline Player opponent_of(Player p) { return p == Player::One ? Player::Two : Player::One; }

// A single cell of the payoff table.
struct PureProfile {
  Index row = 0;
  Index col = 0;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

template <typename Scalar>
class BasicBimatrixGame {
 public:
  // Empty label lists are filled with "R1".."Rm" / "C1".."Cn".
  BasicBimatrixGame(Matrix<Scalar> payoff1, Matrix<Scalar> payoff2,
                    std::vector<std::string> row_labels = {},
                    std::vector<std::string> col_labels = {})
      : payoff1_(std::move(payoff1)),
        payoff2_(std::move(payoff2)),
        row_labels_(std::move(row_labels)),
        col_labels_(std::move(col_labels)) {
    if (payoff1_.rows() < 1 || payoff1_.cols() < 1) {
      throw ValidationError("game must have at least one row and one column");
    }
    if (payoff1_.rows() != payoff2_.rows() || payoff1_.cols() != payoff2_.cols()) {
      throw ValidationError("payoff1 is " + shape(payoff1_) + " but payoff2 is " +
                            shape(payoff2_));
    }
    fill_labels(row_labels_, rows(), "R", "row_labels");
    fill_labels(col_labels_, cols(), "C", "col_labels");
  }

  Index rows() const { return payoff1_.rows(); }
  Index cols() const { return payoff1_.cols(); }

  const Matrix<Scalar>& payoff1() const { return payoff1_; }
  const Matrix<Scalar>& payoff2() const { return payoff2_; }
  const Matrix<Scalar>& payoff(Player p) const { return p == Player::One ? payoff1_ : payoff2_; }

  // Number of pure strategies of `p`.
  Index strategy_count(Player p) const { return p == Player::One ? rows() : cols(); }

  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  static std::string shape(const Matrix<Scalar>& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
  }

  static void fill_labels(std::vector<std::string>& labels, Index count, const char* prefix,
                          const char* field) {
    if (labels.empty()) {
      for (Index i = 0; i < count; ++i) labels.push_back(prefix + std::to_string(i + 1));
    } else if (static_cast<Index>(labels.size()) != count) {
      throw ValidationError(std::string(field) + " has " + std::to_string(labels.size()) +
                            " entries, expected " + std::to_string(count));
    }
  }

  Matrix<Scalar> payoff1_;
  Matrix<Scalar> payoff2_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

// Probability vector over one player's pure strategies. Construction checks
// that entries are non-negative and sum to exactly one.
template <typename Scalar>
class MixedStrategy {
 public:
  explicit MixedStrategy(Vector<Scalar> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 1) throw ValidationError("mixed strategy must not be empty");
    Scalar total(0);
    for (Index i = 0; i < probs_.size(); ++i) {
      if (probs_[i] < Scalar(0)) throw ValidationError("mixed strategy has a negative entry");
      total += probs_[i];
    }
    if (total != Scalar(1)) throw ValidationError("mixed strategy entries must sum to 1");
  }

  MixedStrategy(std::initializer_list<Scalar> probs) : MixedStrategy(to_vector(probs)) {}

  static MixedStrategy pure(Index size, Index index) {
    Vector<Scalar> v = Vector<Scalar>::Zero(size);
    v[index] = Scalar(1);
    return MixedStrategy(std::move(v));
  }

  static MixedStrategy uniform(Index size) {
    return MixedStrategy(Vector<Scalar>::Constant(size, Scalar(1) / Scalar(size)));
  }

  Index size() const { return probs_.size(); }
  const Scalar& operator[](Index i) const { return probs_[i]; }
  const Vector<Scalar>& probs() const { return probs_; }

  // The index carrying all the mass, if there is one.
  std::optional<Index> pure_index() const {
    for (Index i = 0; i < size(); ++i) {
      if (probs_[i] == Scalar(1)) return i;
    }
    return std::nullopt;
  }

  std::vector<Index> support() const {
    std::vector<Index> s;
    for (Index i = 0; i < size(); ++i) {
      if (probs_[i] != Scalar(0)) s.push_back(i);
    }
    return s;
  }

  friend bool operator==(const MixedStrategy& a, const MixedStrategy& b) {
    return a.probs_ == b.probs_;
  }

 private:
  static Vector<Scalar> to_vector(std::initializer_list<Scalar> probs) {
    Vector<Scalar> v(static_cast<Index>(probs.size()));
    Index i = 0;
    for (const Scalar& p : probs) v[i++] = p;
    return v;
  }

  Vector<Scalar> probs_;
};

template <typename Scalar>
struct StrategyProfile {
  MixedStrategy<Scalar> sigma1;
  MixedStrategy<Scalar> sigma2;

  static StrategyProfile pure(const BasicBimatrixGame<Scalar>& game, PureProfile cell) {
    return {MixedStrategy<Scalar>::pure(game.rows(), cell.row),
            MixedStrategy<Scalar>::pure(game.cols(), cell.col)};
  }

  // Both strategies degenerate; returns the cell they select.
  std::optional<PureProfile> as_pure() const {
    const auto r = sigma1.pure_index();
    const auto c = sigma2.pure_index();
    if (!r || !c) return std::nullopt;
    return PureProfile{*r, *c};
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

enum class EquilibriumKind { Pure, Mixed };

template <typename Scalar>
struct EquilibriumResult {
  StrategyProfile<Scalar> profile;
  std::pair<Scalar, Scalar> payoffs;
  EquilibriumKind kind = EquilibriumKind::Pure;
  // Set by mixed enumeration when the game has a continuum of equilibria and
  // only the extreme points are listed.
  bool degenerate_game = false;
};

namespace detail {

template <typename Scalar>
void check_length(const BasicBimatrixGame<Scalar>& game, Player p, const MixedStrategy<Scalar>& s) {
  const Index expected = game.strategy_count(p);
  if (s.size() != expected) {
    throw ValidationError("player " + std::to_string(static_cast<int>(p)) + " strategy has " +
                          std::to_string(s.size()) + " entries, game has " +
                          std::to_string(expected) + (p == Player::One ? " rows" : " columns"));
  }
}

template <typename Scalar>
void check_profile(const BasicBimatrixGame<Scalar>& game, const StrategyProfile<Scalar>& profile) {
  check_length(game, Player::One, profile.sigma1);
  check_length(game, Player::Two, profile.sigma2);
}

}  // namespace detail

// Payoff of each of `player`'s pure strategies against the opponent's mix.
template <typename Scalar>
Vector<Scalar> pure_strategy_payoffs(const BasicBimatrixGame<Scalar>& game, Player player,
                                     const MixedStrategy<Scalar>& opponent) {
  detail::check_length(game, opponent_of(player), opponent);
  if (player == Player::One) return game.payoff1() * opponent.probs();
  return game.payoff2().transpose() * opponent.probs();
}

// (sigma1' A sigma2, sigma1' B sigma2), exact for exact scalars.
template <typename Scalar>
std::pair<Scalar, Scalar> expected_payoff(const BasicBimatrixGame<Scalar>& game,
                                          const StrategyProfile<Scalar>& profile) {
  detail::check_profile(game, profile);
  const Vector<Scalar> a_col = game.payoff1() * profile.sigma2.probs();
  const Vector<Scalar> b_col = game.payoff2() * profile.sigma2.probs();
  return {profile.sigma1.probs().dot(a_col), profile.sigma1.probs().dot(b_col)};
}

// Best payoff `player` can get against `opponent`. By linearity the maximum
// over mixed strategies is attained at a pure strategy.
template <typename Scalar>
Scalar best_response_payoff(const BasicBimatrixGame<Scalar>& game, Player player,
                            const MixedStrategy<Scalar>& opponent) {
  return pure_strategy_payoffs(game, player, opponent).maxCoeff();
}

// Every pure strategy of `player` attaining the best-response payoff.
template <typename Scalar>
std::vector<Index> best_responses(const BasicBimatrixGame<Scalar>& game, Player player,
                                  const MixedStrategy<Scalar>& opponent) {
  const Vector<Scalar> values = pure_strategy_payoffs(game, player, opponent);
  const Scalar best = values.maxCoeff();
  std::vector<Index> out;
  for (Index i = 0; i < values.size(); ++i) {
    if (values[i] == best) out.push_back(i);
  }
  return out;
}

// No player gains more than `tolerance` by deviating unilaterally.
template <typename Scalar>
bool is_equilibrium(const BasicBimatrixGame<Scalar>& game, const StrategyProfile<Scalar>& profile,
                    const Scalar& tolerance = Scalar(0)) {
  if (tolerance < Scalar(0)) throw ValidationError("tolerance must be non-negative");
  const auto [u1, u2] = expected_payoff(game, profile);
  return u1 >= best_response_payoff(game, Player::One, profile.sigma2) - tolerance &&
         u2 >= best_response_payoff(game, Player::Two, profile.sigma1) - tolerance;
}

template <typename Scalar>
EquilibriumResult<Scalar> make_equilibrium_result(const BasicBimatrixGame<Scalar>& game,
                                                  StrategyProfile<Scalar> profile,
                                                  bool degenerate = false) {
  auto payoffs = expected_payoff(game, profile);
  const EquilibriumKind kind =
      profile.as_pure() ? EquilibriumKind::Pure : EquilibriumKind::Mixed;
  return {std::move(profile), std::move(payoffs), kind, degenerate};
}

using BimatrixGame = BasicBimatrixGame<Rational>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using RationalStrategy = MixedStrategy<Rational>;
using RationalProfile = StrategyProfile<Rational>;
using RationalEquilibrium = EquilibriumResult<Rational>;

// Builds an exact matrix from nested initializer lists, for tests and fixtures.
inline RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  RationalMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) throw ValidationError("ragged matrix");
    Index j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace govgame

#endif  // GOVGAME_GAME_HPP_
