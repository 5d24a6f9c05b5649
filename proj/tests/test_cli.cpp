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

#include "govgame/cli.hpp"

#include <sstream>

#include "doctest.h"

using namespace govgame;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GOVGAME_FIXTURES) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> v;
  for (std::string l; std::getline(in, l);) {
    if (!l.empty()) v.push_back(l);
  }
  return v;
}

}  // namespace

TEST_CASE("solve") {
  auto r = cli({"solve", fixture("governance_game.json")});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"Yes, Upgraded, 3/5, 7/10"});

  r = cli({"solve", fixture("zero_game.json"), "--pure-only"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).size() == 4);

  r = cli({"solve", fixture("zero_game.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.err.find("degenerate") != std::string::npos);
  CHECK(cli({"--quiet", "solve", fixture("zero_game.json")}).err.empty());

  r = cli({"solve", fixture("matching_pennies.json")});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out) == std::vector<std::string>{"[1/2, 1/2], [1/2, 1/2], 0, 0"});
  CHECK(cli({"solve", fixture("matching_pennies.json"), "--pure-only"}).out.empty());

  r = cli({"--format", "json", "solve", fixture("governance_game.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"3/5\"") != std::string::npos);

  r = cli({"solve", fixture("bad_denominator.json")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("denominator must be positive") != std::string::npos);
  CHECK(cli({"solve", fixture("does_not_exist.json")}).code == kExitUsage);
}

TEST_CASE("predict") {
  auto r = cli({"predict", "--beta", "27/50", "--gamma", "7/10"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MajorityAccept") != std::string::npos);
  CHECK(r.out.find("Upgraded") != std::string::npos);
  CHECK(r.out.find("Present") != std::string::npos);

  r = cli({"predict", "--mode", "on_chain", "--beta", "2/5", "--gamma", "2/5", "--gamma-prime",
           "4/5"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Reduced") != std::string::npos);
  CHECK(r.out.find("2/5") != std::string::npos);

  r = cli({"--format", "json", "predict", "--beta", "1", "--gamma", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"fork_risk\": \"None\"") != std::string::npos);

  CHECK(cli({"predict", "--mode", "none", "--gamma", "3/5"}).code == kExitOk);
  CHECK(cli({"predict", "--gamma", "3/5"}).code == kExitUsage);
  CHECK(cli({"predict", "--beta", "3/2", "--gamma", "1/2"}).code == kExitUsage);
  CHECK(cli({"predict", "--mode", "on_chain", "--beta", "1/5", "--gamma", "1/5"}).code ==
        kExitUsage);
  CHECK(cli({"predict", "--mode", "hybrid", "--beta", "1", "--gamma", "1"}).code == kExitUsage);
}

TEST_CASE("table1") {
  auto r = cli({"table1", "--verify"});
  CHECK(r.code == kExitOk);
  r = cli({"--format", "csv", "table1"});
  CHECK(r.code == kExitOk);
  const auto csv = lines(r.out);
  REQUIRE(csv.size() == 13);
  CHECK(csv[0].rfind("simulation,beta,gamma", 0) == 0);
  r = cli({"--format", "json", "table1"});
  CHECK(r.code == kExitOk);
  std::size_t objects = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\"name\"", pos)) != std::string::npos; ++pos) ++objects;
  CHECK(objects == 9);
}

TEST_CASE("casestudy") {
  auto r = cli({"casestudy"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("assumed") != std::string::npos);
  CHECK(cli({"casestudy", "--beta", "1/5"}).code == kExitMismatch);
  CHECK(cli({"casestudy", "--gamma", "3/5"}).code == kExitOk);
  CHECK(cli({"casestudy", "--beta", "oops"}).code == kExitUsage);
}

TEST_CASE("run") {
  CHECK(cli({"run", fixture("table1.json")}).code == kExitOk);
  CHECK(cli({"run", fixture("unchecked.json")}).code == kExitOk);
  auto r = cli({"run", fixture("mismatch.json")});
  CHECK(r.code == kExitMismatch);
  CHECK(r.out.find("Mismatch") != std::string::npos);
  r = cli({"run", fixture("invalid.json")});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("k must not exceed n") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"--format", "xml", "table1"}).code == kExitUsage);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"solve"}).code == kExitUsage);
}

TEST_CASE("output is byte-identical across runs") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "table1"},
           {"--format", "csv", "run", fixture("table1.json")},
           {"casestudy"},
           {"solve", fixture("matching_pennies.json")}}) {
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}
