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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "govgame/equilibria.hpp"
#include "govgame/error.hpp"
#include "govgame/game_io.hpp"
#include "govgame/governance.hpp"
#include "govgame/scenario.hpp"
#include "json.hpp"

namespace govgame {
namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
  OutputFormat format = OutputFormat::Table;
  bool quiet = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational flag_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ValidationError& e) {
    throw ValidationError(flag + ": " + e.what());
  }
}

std::string with_decimal(const Rational& x) {
  if (x.is_integer()) return x.to_string();
  return x.to_string() + " (" + to_decimal_string(x) + ")";
}

std::string join(const RationalStrategy& s, const char* sep) {
  std::string out;
  for (Index i = 0; i < s.size(); ++i) out += (i ? sep : "") + s[i].to_string();
  return out;
}

// Simple left-aligned column layout.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os) const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      if (width.size() < r.size()) width.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      os << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// ---- solve ---------------------------------------------------------------

int cmd_solve(const GlobalOptions& g, const std::string& file, bool pure_only, std::ostream& out,
              std::ostream& err) {
  BimatrixGame game = [&] {
    const std::string text = read_file(file);
    try {
      return parse_game(text);
    } catch (const Error& e) {
      throw ParseError(file + ": " + e.what());
    }
  }();
  const auto eqs = pure_only ? enumerate_pure_equilibria(game) : enumerate_mixed_equilibria(game);
  const bool degenerate = !eqs.empty() && eqs.front().degenerate_game;
  if (degenerate && !g.quiet) {
    err << "warning: degenerate game; only extreme equilibria are listed\n";
  }

  switch (g.format) {
    case OutputFormat::Table:
      for (const auto& eq : eqs) {
        if (const auto cell = eq.profile.as_pure()) {
          out << game.row_labels()[static_cast<std::size_t>(cell->row)] << ", "
              << game.col_labels()[static_cast<std::size_t>(cell->col)] << ", ";
        } else {
          out << "[" << join(eq.profile.sigma1, ", ") << "], [" << join(eq.profile.sigma2, ", ")
              << "], ";
        }
        out << eq.payoffs.first << ", " << eq.payoffs.second << '\n';
      }
      break;
    case OutputFormat::Json: {
      Json doc;
      doc["degenerate_game"] = degenerate;
      doc["pure_only"] = pure_only;
      Json list = Json::array();
      for (const auto& eq : eqs) {
        Json e;
        e["kind"] = eq.kind == EquilibriumKind::Pure ? "pure" : "mixed";
        if (const auto cell = eq.profile.as_pure()) {
          e["row"] = game.row_labels()[static_cast<std::size_t>(cell->row)];
          e["col"] = game.col_labels()[static_cast<std::size_t>(cell->col)];
        }
        Json s1 = Json::array();
        for (Index i = 0; i < eq.profile.sigma1.size(); ++i) {
          s1.push_back(eq.profile.sigma1[i].to_string());
        }
        Json s2 = Json::array();
        for (Index j = 0; j < eq.profile.sigma2.size(); ++j) {
          s2.push_back(eq.profile.sigma2[j].to_string());
        }
        e["sigma1"] = std::move(s1);
        e["sigma2"] = std::move(s2);
        e["payoff1"] = eq.payoffs.first.to_string();
        e["payoff2"] = eq.payoffs.second.to_string();
        list.push_back(std::move(e));
      }
      doc["equilibria"] = std::move(list);
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "equilibrium_index,kind,row,col,sigma1,sigma2,payoff1,payoff2\n";
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        const auto& eq = eqs[i];
        const auto cell = eq.profile.as_pure();
        out << i + 1 << ',' << (cell ? "pure" : "mixed") << ','
            << (cell ? game.row_labels()[static_cast<std::size_t>(cell->row)] : "") << ','
            << (cell ? game.col_labels()[static_cast<std::size_t>(cell->col)] : "") << ','
            << join(eq.profile.sigma1, ";") << ',' << join(eq.profile.sigma2, ";") << ','
            << eq.payoffs.first << ',' << eq.payoffs.second << '\n';
      }
      break;
  }
  return kExitOk;
}

// ---- predict -------------------------------------------------------------

struct PredictFlags {
  std::string mode = "off_chain";
  std::optional<std::string> beta;
  std::optional<std::string> gamma;
  std::optional<std::string> gamma_prime;
  std::int64_t k = 1;
  std::int64_t n = 1;
  std::string sv = "1";
  std::string sc = "1";
  std::optional<std::string> tie_break;
};

std::string headline(const PredictionResult& p) {
  return std::string(to_string(p.regime)) + " / " + std::string(to_string(p.majority_chain)) +
         " / " + std::string(to_string(p.fork_risk));
}

void print_surplus(const SurplusReport& s, std::ostream& out) {
  TextTable t({"quantity", "value"});
  t.add({"S_Yes", with_decimal(s.s_yes)});
  t.add({"S_No", with_decimal(s.s_no)});
  t.add({"S_U", with_decimal(s.s_u)});
  t.add({"S_O", with_decimal(s.s_o)});
  t.add({"S(V)", with_decimal(s.surplus_v)});
  t.add({"S(C)", with_decimal(s.surplus_c)});
  t.add({"S", with_decimal(s.total)});
  t.print(out);
}

int cmd_predict(const GlobalOptions& g, const PredictFlags& f, std::ostream& out) {
  GovernanceParams p;
  p.mode = parse_mode(f.mode);
  if (!f.gamma) throw ValidationError("--gamma is required");
  p.gamma = flag_rational("--gamma", *f.gamma);
  std::vector<std::string> extra_notes;
  if (f.beta) {
    p.beta = flag_rational("--beta", *f.beta);
  } else if (p.mode == GovernanceMode::NoGovernance) {
    p.beta = Rational(1, 2);
    extra_notes.push_back("no vote held: beta defaulted to 1/2");
  } else {
    throw ValidationError("--beta is required unless --mode none");
  }
  if (f.gamma_prime) p.gamma_prime = flag_rational("--gamma-prime", *f.gamma_prime);
  p.k = f.k;
  p.n = f.n;
  p.s_v = flag_rational("--sv", f.sv);
  p.s_c = flag_rational("--sc", f.sc);
  if (f.tie_break) p.tie_break = parse_tie_break(*f.tie_break);

  PredictionResult result = predict_outcome(p);
  result.notes.insert(result.notes.end(), extra_notes.begin(), extra_notes.end());

  switch (g.format) {
    case OutputFormat::Table:
      out << headline(result) << '\n';
      print_surplus(result.surplus, out);
      for (const auto& n : result.notes) out << "note: " << n << '\n';
      break;
    case OutputFormat::Json:
      out << prediction_to_json(p, result);
      break;
    case OutputFormat::Csv: {
      const SurplusReport& s = result.surplus;
      out << "mode,beta,gamma,gamma_prime,k,n,s_v,s_c,regime,majority_chain,fork_risk,s_yes,s_no,"
             "s_u,s_o,surplus_v,surplus_c,total\n";
      out << to_string(p.mode) << ',' << p.beta << ',' << p.gamma << ','
          << (p.gamma_prime ? p.gamma_prime->to_string() : "") << ',' << p.k << ',' << p.n << ','
          << p.s_v << ',' << p.s_c << ',' << to_string(result.regime) << ','
          << to_string(result.majority_chain) << ',' << to_string(result.fork_risk) << ','
          << s.s_yes << ',' << s.s_no << ',' << s.s_u << ',' << s.s_o << ',' << s.surplus_v << ','
          << s.surplus_c << ',' << s.total << '\n';
      break;
    }
  }
  return kExitOk;
}

// ---- table1 / run ----------------------------------------------------------

void print_results_table(const std::vector<ScenarioResult>& results, std::ostream& out) {
  TextTable t({"simulation", "beta, gamma", "equilibrium", "1: Yes", "1: No", "2: Upgraded",
               "2: Original", "V payoff", "C payoff", "status"});
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.equilibria.size(); ++i) {
      const auto& eq = r.equilibria[i];
      const bool first = i == 0;
      t.add({first ? r.name : "", first ? r.params.beta.to_string() + ", " + r.params.gamma.to_string() : "",
             std::to_string(i + 1), eq.profile.sigma1[kYes].to_string(),
             eq.profile.sigma1[kNo].to_string(), eq.profile.sigma2[kUpgraded].to_string(),
             eq.profile.sigma2[kOriginal].to_string(), eq.payoffs.first.to_string(),
             eq.payoffs.second.to_string(),
             first ? std::string(to_string(r.expectation_check.status)) : ""});
    }
  }
  t.print(out);
}

void print_scenario_summary(const std::vector<ScenarioResult>& results, std::ostream& out) {
  TextTable t({"scenario", "equilibria", "prediction", "S", "status"});
  for (const auto& r : results) {
    t.add({r.name, std::to_string(r.equilibria.size()), headline(r.prediction),
           r.prediction.surplus.total.to_string(),
           std::string(to_string(r.expectation_check.status))});
  }
  t.print(out);
}

void render_results(const GlobalOptions& g, const std::vector<ScenarioResult>& results,
                    bool table1_layout, std::ostream& out) {
  switch (g.format) {
    case OutputFormat::Table:
      if (table1_layout) {
        print_results_table(results, out);
      } else {
        print_scenario_summary(results, out);
      }
      break;
    case OutputFormat::Json:
      out << results_to_json(results);
      break;
    case OutputFormat::Csv:
      out << results_to_csv(results);
      break;
  }
}

int report_mismatches(const std::vector<ScenarioResult>& results, std::ostream& err) {
  int count = 0;
  for (const auto& r : results) {
    if (r.expectation_check.status != CheckStatus::Mismatch) continue;
    ++count;
    err << "mismatch: " << r.name << '\n';
    for (const auto& d : r.expectation_check.details) err << "  " << d << '\n';
  }
  return count;
}

int cmd_table1(const GlobalOptions& g, bool verify, std::ostream& out, std::ostream& err) {
  const auto results = run_table1_suite();
  render_results(g, results, true, out);
  if (!verify) return kExitOk;
  return report_mismatches(results, err) == 0 ? kExitOk : kExitMismatch;
}

int cmd_run(const GlobalOptions& g, const std::string& file, std::ostream& out,
            std::ostream& err) {
  std::vector<Scenario> scenarios;
  const std::string text = read_file(file);
  try {
    scenarios = load_scenarios(text);
  } catch (const Error& e) {
    throw ParseError(file + ": " + e.what());
  }
  const auto results = run_scenarios(scenarios);
  render_results(g, results, false, out);
  return report_mismatches(results, err) == 0 ? kExitOk : kExitMismatch;
}

// ---- casestudy -------------------------------------------------------------

int cmd_casestudy(const GlobalOptions& g, const std::optional<std::string>& beta,
                  const std::optional<std::string>& gamma, std::ostream& out, std::ostream& err) {
  CaseStudyOptions options;
  if (beta) options.beta = flag_rational("--beta", *beta);
  if (gamma) options.gamma = flag_rational("--gamma", *gamma);
  const CaseStudyResult report = run_ethereum_case_study(options);
  const ScenarioResult& r = report.result;

  switch (g.format) {
    case OutputFormat::Table: {
      out << r.name << ", " << to_string(r.params.mode) << " governance\n";
      TextTable t({"field", "value"});
      t.add({"beta", with_decimal(r.params.beta)});
      t.add({"gamma", with_decimal(report.gamma) + (report.gamma_assumed ? " [assumed]" : "")});
      t.add({"prediction", headline(r.prediction)});
      t.add({"S(V)", with_decimal(r.prediction.surplus.surplus_v)});
      t.add({"S(C)", with_decimal(r.prediction.surplus.surplus_c)});
      t.add({"S", with_decimal(r.prediction.surplus.total)});
      t.add({"observed", report.observation.description});
      t.add({"comparison", std::string(to_string(report.comparison.status))});
      t.print(out);
      for (const auto& n : r.notes) out << "note: " << n << '\n';
      break;
    }
    case OutputFormat::Json:
      out << case_study_to_json(report);
      break;
    case OutputFormat::Csv:
      out << "beta,gamma,gamma_assumed,regime,majority_chain,fork_risk,surplus_v,surplus_c,total,"
             "comparison\n";
      out << r.params.beta << ',' << report.gamma << ',' << (report.gamma_assumed ? "true" : "false")
          << ',' << to_string(r.prediction.regime) << ',' << to_string(r.prediction.majority_chain)
          << ',' << to_string(r.prediction.fork_risk) << ',' << r.prediction.surplus.surplus_v
          << ',' << r.prediction.surplus.surplus_c << ',' << r.prediction.surplus.total << ','
          << to_string(report.comparison.status) << '\n';
      break;
  }
  if (report.comparison.status == CheckStatus::Mismatch) {
    err << "historical mismatch:\n";
    for (const auto& d : report.comparison.details) err << "  " << d << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blockchain governance game: Nash equilibria and hard-fork prediction", "govgame"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions global;
  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table}, {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}};
  std::string format_name = "table";
  app.add_option("--format", format_name, "Output format: table | json | csv")
      ->check(CLI::IsMember({"table", "json", "csv"}, CLI::ignore_case).description(""))
      ->option_text("FORMAT");
  app.add_flag("--quiet", global.quiet, "Suppress warnings on standard error");

  std::string game_file;
  bool pure_only = false;
  auto* solve = app.add_subcommand("solve", "Enumerate the Nash equilibria of a game file");
  solve->add_option("game_file", game_file, "Game interchange JSON")->required();
  solve->add_flag("--pure-only", pure_only, "Only pure-strategy equilibria");

  PredictFlags pf;
  auto* predict = app.add_subcommand("predict", "Predict regime, majority chain and fork risk");
  predict->add_option("--mode", pf.mode, "none | off_chain | on_chain")->capture_default_str();
  predict->add_option("--beta", pf.beta, "Share of voters voting yes");
  predict->add_option("--gamma", pf.gamma, "Share of the community moving to the upgraded chain");
  predict->add_option("--gamma-prime", pf.gamma_prime, "Share after the on-chain testnet round");
  predict->add_option("--k", pf.k, "Number of voters")->capture_default_str();
  predict->add_option("--n", pf.n, "Number of community members")->capture_default_str();
  predict->add_option("--sv", pf.sv, "Payoff per voter")->capture_default_str();
  predict->add_option("--sc", pf.sc, "Payoff per community member")->capture_default_str();
  predict->add_option("--tie-break", pf.tie_break, "accept | reject, only used when beta = 1/2");

  bool verify = false;
  auto* table1 = app.add_subcommand("table1", "Run the nine reference simulations");
  table1->add_flag("--verify", verify, "Exit 2 unless every simulation matches");

  std::optional<std::string> cs_beta;
  std::optional<std::string> cs_gamma;
  auto* casestudy = app.add_subcommand("casestudy", "Ethereum DAO-fork case study");
  casestudy->add_option("--beta", cs_beta, "Override the vote share (default 27/50)");
  casestudy->add_option("--gamma", cs_gamma, "Override the assumed community share (default 7/10)");

  std::string scenario_file;
  auto* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario_file", scenario_file, "Scenario JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  std::transform(format_name.begin(), format_name.end(), format_name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  global.format = formats.at(format_name);

  try {
    if (*solve) return cmd_solve(global, game_file, pure_only, out, err);
    if (*predict) return cmd_predict(global, pf, out);
    if (*table1) return cmd_table1(global, verify, out, err);
    if (*casestudy) return cmd_casestudy(global, cs_beta, cs_gamma, out, err);
    if (*run) return cmd_run(global, scenario_file, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace govgame
