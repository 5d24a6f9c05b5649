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

#ifndef GOVGAME_TESTS_ORACLES_HPP_
#define GOVGAME_TESTS_ORACLES_HPP_

// Brute-force reference computations used by the tests. They work on plain
// nested loops over the payoff entries and share no code path with the
// library's Eigen expressions or support enumeration.

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "govgame/game.hpp"

namespace govgame::oracle {

inline std::pair<Rational, Rational> expected_payoff(const BimatrixGame& g,
                                                     const std::vector<Rational>& p,
                                                     const std::vector<Rational>& q) {
  Rational u1 = 0;
  Rational u2 = 0;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) {
      const Rational w = p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j)];
      u1 += w * g.payoff1()(i, j);
      u2 += w * g.payoff2()(i, j);
    }
  }
  return {u1, u2};
}

// No pure unilateral deviation improves either player.
inline bool is_pure_equilibrium(const BimatrixGame& g, Index r, Index c) {
  for (Index i = 0; i < g.rows(); ++i) {
    if (g.payoff1()(i, c) > g.payoff1()(r, c)) return false;
  }
  for (Index j = 0; j < g.cols(); ++j) {
    if (g.payoff2()(r, j) > g.payoff2()(r, c)) return false;
  }
  return true;
}

inline std::vector<PureProfile> pure_equilibria(const BimatrixGame& g) {
  std::vector<PureProfile> out;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) {
      if (is_pure_equilibrium(g, i, j)) out.push_back({i, j});
    }
  }
  return out;
}

// Pure deviations only; sufficient for mixed profiles by linearity.
inline bool no_profitable_pure_deviation(const BimatrixGame& g, const std::vector<Rational>& p,
                                         const std::vector<Rational>& q) {
  const auto [u1, u2] = expected_payoff(g, p, q);
  for (Index i = 0; i < g.rows(); ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(g.rows()), Rational(0));
    e[static_cast<std::size_t>(i)] = 1;
    if (expected_payoff(g, e, q).first > u1) return false;
  }
  for (Index j = 0; j < g.cols(); ++j) {
    std::vector<Rational> e(static_cast<std::size_t>(g.cols()), Rational(0));
    e[static_cast<std::size_t>(j)] = 1;
    if (expected_payoff(g, p, e).second > u2) return false;
  }
  return true;
}

inline std::vector<PureProfile> pareto_optimal(const BimatrixGame& g) {
  std::vector<PureProfile> out;
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) {
      bool dominated = false;
      for (Index a = 0; a < g.rows() && !dominated; ++a) {
        for (Index b = 0; b < g.cols() && !dominated; ++b) {
          const bool weak = g.payoff1()(a, b) >= g.payoff1()(i, j) &&
                            g.payoff2()(a, b) >= g.payoff2()(i, j);
          const bool strict = g.payoff1()(a, b) > g.payoff1()(i, j) ||
                              g.payoff2()(a, b) > g.payoff2()(i, j);
          dominated = weak && strict;
        }
      }
      if (!dominated) out.push_back({i, j});
    }
  }
  return out;
}

// Closed-form completely mixed equilibrium of a 2x2 game, if one exists:
// each player mixes to make the other indifferent.
inline std::optional<std::pair<Rational, Rational>> interior_2x2(const BimatrixGame& g) {
  const auto& a = g.payoff1();
  const auto& b = g.payoff2();
  const Rational dp = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
  const Rational dq = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  if (dp.is_zero() || dq.is_zero()) return std::nullopt;
  const Rational p = (b(1, 1) - b(1, 0)) / dp;  // probability of row 0
  const Rational q = (a(1, 1) - a(0, 1)) / dq;  // probability of column 0
  if (p <= 0 || p >= 1 || q <= 0 || q >= 1) return std::nullopt;
  return std::make_pair(p, q);
}

// 2x2 non-degeneracy: no payoff ties against any pure strategy.
inline bool nondegenerate_2x2(const BimatrixGame& g) {
  return g.payoff1()(0, 0) != g.payoff1()(1, 0) && g.payoff1()(0, 1) != g.payoff1()(1, 1) &&
         g.payoff2()(0, 0) != g.payoff2()(0, 1) && g.payoff2()(1, 0) != g.payoff2()(1, 1);
}

// Small random rationals p/q with |p| <= 9, 1 <= q <= 6.
class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

  Rational next() {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng_), den(rng_));
  }

  // Coarse grid so that ties (and degenerate games) show up regularly.
  Rational coarse() {
    std::uniform_int_distribution<int> v(0, 3);
    return Rational(v(rng_));
  }

  Rational unit() {
    std::uniform_int_distribution<int> den(1, 12);
    const int d = den(rng_);
    std::uniform_int_distribution<int> num(0, d);
    return Rational(num(rng_), d);
  }

  RationalMatrix matrix(Index rows, Index cols, bool coarse_entries = false) {
    RationalMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = coarse_entries ? coarse() : next();
    }
    return m;
  }

  BimatrixGame game(Index rows, Index cols, bool coarse_entries = false) {
    return BimatrixGame(matrix(rows, cols, coarse_entries), matrix(rows, cols, coarse_entries));
  }

  // Random point of the simplex with rational coordinates.
  std::vector<Rational> simplex(Index size) {
    std::uniform_int_distribution<int> w(0, 7);
    std::vector<int> weights;
    int total = 0;
    while (total == 0) {
      weights.clear();
      total = 0;
      for (Index i = 0; i < size; ++i) {
        weights.push_back(w(rng_));
        total += weights.back();
      }
    }
    std::vector<Rational> out;
    for (int x : weights) out.push_back(Rational(x, total));
    return out;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline RationalVector to_vector(const std::vector<Rational>& v) {
  RationalVector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

}  // namespace govgame::oracle

#endif  // GOVGAME_TESTS_ORACLES_HPP_
