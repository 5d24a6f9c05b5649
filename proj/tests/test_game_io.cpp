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

#include "govgame/game_io.hpp"

#include "doctest.h"
#include "govgame/error.hpp"
#include "oracles.hpp"

using namespace govgame;

TEST_CASE("parse_game") {
  SUBCASE("full document") {
    const auto g = parse_game(R"({"rows": 2, "cols": 2, "row_labels": ["Yes", "No"],
        "col_labels": ["Upgraded", "Original"],
        "payoff1": [["3/5", "3/5"], [0.4, 0.4]], "payoff2": [["7/10", 0.3], ["7/10", "3/10"]]})");
    CHECK(g.payoff1()(1, 0) == Rational(2, 5));
    CHECK(g.payoff2()(0, 1) == Rational(3, 10));
    CHECK(g.col_labels()[1] == "Original");
  }
  SUBCASE("optional fields") {
    const auto g = parse_game(R"({"payoff1": [[1, 2, 3]], "payoff2": [[-1, -2, -3]]})");
    CHECK(g.rows() == 1);
    CHECK(g.cols() == 3);
    CHECK(g.row_labels()[0] == "R1");
    CHECK(g.col_labels()[2] == "C3");
  }
  SUBCASE("errors name the field") {
    CHECK_THROWS_WITH_AS(parse_game(R"({"payoff1": [["1/0", 0]], "payoff2": [[0, 0]]})"),
                         doctest::Contains("payoff1[0][0]: denominator must be positive"), ParseError);
    CHECK_THROWS_WITH_AS(parse_game(R"({"payoff1": [[1, 0]], "payoff2": [[0, "x"]]})"),
                         doctest::Contains("payoff2[0][1]"), ParseError);
    CHECK_THROWS_AS(parse_game(R"({"payoff1": [[1, 0]]})"), ParseError);
    CHECK_THROWS_AS(parse_game(R"({"payoff1": [[1, 0]], "payoff2": [[0, 0]], "extra": 1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_game(R"({"payoff1": [[1, 0], [1]], "payoff2": [[0, 0], [0, 0]]})"),
                    Error);
    CHECK_THROWS_AS(parse_game(R"({"rows": 3, "payoff1": [[1, 0]], "payoff2": [[0, 0]]})"), Error);
    CHECK_THROWS_AS(parse_game(R"({"payoff1": [[1, 0]], "payoff2": [[0, 0]], "row_labels": []})"),
                    Error);
    CHECK_THROWS_WITH_AS(parse_game("{\n\n  \"payoff1\": ]"), doctest::Contains("line 3"), ParseError);
  }
}

TEST_CASE("serialize_game round trip") {
  oracle::RandomRationals gen(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen.game(gen.integer(1, 4), gen.integer(1, 4), false);
    const std::string text = serialize_game(g);
    const auto back = parse_game(text);
    CHECK(back.payoff1() == g.payoff1());
    CHECK(back.payoff2() == g.payoff2());
    CHECK(back.row_labels() == g.row_labels());
    CHECK(serialize_game(back) == text);
  }
}
