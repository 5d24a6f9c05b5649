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

#include "govgame/pareto.hpp"

#include <algorithm>

#include "doctest.h"
#include "govgame/governance.hpp"
#include "oracles.hpp"

using namespace govgame;

namespace {
Rational r(std::string_view s) { return Rational::parse(s); }
}  // namespace

TEST_CASE("Pareto-optimal pure profiles") {
  SUBCASE("majority-accept row: B1 survives, B2 does not") {
    const BimatrixGame g(make_matrix({{r("3/4"), r("1/4")}}), make_matrix({{r("3/4"), r("1/4")}}));
    CHECK(pareto_optimal_pure_profiles(g) == std::vector<PureProfile>{{0, 0}});
  }
  SUBCASE("constant game keeps everything") {
    const BimatrixGame g(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(2, 2));
    CHECK(pareto_optimal_pure_profiles(g).size() == 4);
  }
  SUBCASE("coordination payoffs") {
    const auto m = make_matrix({{2, 0}, {0, 1}});
    const BimatrixGame g(m, m);
    const std::vector<PureProfile> frozen{{0, 0}};
    REQUIRE(oracle::pareto_optimal(g) == frozen);
    CHECK(pareto_optimal_pure_profiles(g) == frozen);
  }
  SUBCASE("ties in both payoffs are not domination") {
    const auto m = make_matrix({{1, 1}});
    const BimatrixGame g(m, m);
    CHECK(pareto_optimal_pure_profiles(g).size() == 2);
  }
}

TEST_CASE("strong Nash") {
  const auto unanimous = build_governance_game(1, 1, 1, 1);
  CHECK(is_strong_nash(unanimous, {kYes, kUpgraded}));
  CHECK_FALSE(is_strong_nash(unanimous, {kNo, kOriginal}));

  const BimatrixGame zero(RationalMatrix::Zero(2, 2), RationalMatrix::Zero(2, 2));
  for (Index i = 0; i < 2; ++i) {
    for (Index j = 0; j < 2; ++j) CHECK(is_strong_nash(zero, {i, j}));
  }

  const BimatrixGame pd(make_matrix({{3, 0}, {5, 1}}), make_matrix({{3, 5}, {0, 1}}));
  CHECK(is_equilibrium(pd, RationalProfile::pure(pd, {1, 1})));
  CHECK(pareto_dominates(pd, {0, 0}, {1, 1}));
  CHECK_FALSE(is_strong_nash(pd, {1, 1}));
  CHECK_THROWS_AS(is_strong_nash(pd, {2, 0}), ValidationError);
}

TEST_CASE("property: strong Nash implies Pareto optimal; Pareto matches brute force") {
  oracle::RandomRationals gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = gen.game(gen.integer(1, 4), gen.integer(1, 4), trial % 2 == 1);
    const auto pareto = pareto_optimal_pure_profiles(g);
    CHECK(pareto == oracle::pareto_optimal(g));
    for (Index i = 0; i < g.rows(); ++i) {
      for (Index j = 0; j < g.cols(); ++j) {
        if (!is_strong_nash(g, {i, j})) continue;
        CHECK(oracle::is_pure_equilibrium(g, i, j));
        CHECK(std::find(pareto.begin(), pareto.end(), PureProfile{i, j}) != pareto.end());
      }
    }
  }
}
