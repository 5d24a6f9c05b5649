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

#include <vector>

#include "json_util.hpp"

namespace govgame {
namespace {

using json_util::Json;

RationalMatrix read_matrix(const Json& doc, const char* key) {
  const Json& m = json_util::require(doc, key, "");
  const std::string path = key;
  if (!m.is_array() || m.empty()) json_util::fail(path, "expected a non-empty array of rows");
  const std::size_t cols = m[0].is_array() ? m[0].size() : 0;
  if (cols == 0) json_util::fail(json_util::index(path, 0), "expected a non-empty array");
  RationalMatrix out(static_cast<Index>(m.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string row_path = json_util::index(path, i);
    if (!m[i].is_array()) json_util::fail(row_path, "expected an array");
    if (m[i].size() != cols) {
      json_util::fail(row_path, "has " + std::to_string(m[i].size()) + " entries, expected " +
                                    std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out(static_cast<Index>(i), static_cast<Index>(j)) =
          json_util::to_rational(m[i][j], json_util::index(row_path, j));
    }
  }
  return out;
}

std::vector<std::string> read_labels(const Json& doc, const char* key) {
  std::vector<std::string> out;
  const auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) json_util::fail(key, "expected an array of strings");
  if (it->empty()) json_util::fail(key, "must not be empty when present");
  for (std::size_t i = 0; i < it->size(); ++i) {
    out.push_back(json_util::to_str((*it)[i], json_util::index(key, i)));
  }
  return out;
}

void check_dimension(const Json& doc, const char* key, Index actual) {
  const auto it = doc.find(key);
  if (it == doc.end()) return;
  const auto declared = json_util::to_integer(*it, key);
  if (declared != actual) {
    json_util::fail(key, "declares " + std::to_string(declared) + " but payoff1 has " +
                             std::to_string(actual));
  }
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

BimatrixGame parse_game(std::string_view json_text) {
  const Json doc = json_util::parse_document(json_text);
  if (!doc.is_object()) throw ParseError("game document must be a JSON object");
  json_util::reject_unknown(doc, {"rows", "cols", "row_labels", "col_labels", "payoff1", "payoff2"},
                            "");
  RationalMatrix a = read_matrix(doc, "payoff1");
  RationalMatrix b = read_matrix(doc, "payoff2");
  check_dimension(doc, "rows", a.rows());
  check_dimension(doc, "cols", a.cols());
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    json_util::fail("payoff2", "shape differs from payoff1");
  }
  try {
    return BimatrixGame(std::move(a), std::move(b), read_labels(doc, "row_labels"),
                        read_labels(doc, "col_labels"));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_game(const BimatrixGame& game) {
  Json doc;
  doc["rows"] = game.rows();
  doc["cols"] = game.cols();
  doc["row_labels"] = game.row_labels();
  doc["col_labels"] = game.col_labels();
  doc["payoff1"] = matrix_json(game.payoff1());
  doc["payoff2"] = matrix_json(game.payoff2());
  return doc.dump(2) + "\n";
}

}  // namespace govgame
