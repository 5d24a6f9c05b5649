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

#ifndef GOVGAME_SRC_JSON_UTIL_HPP_
#define GOVGAME_SRC_JSON_UTIL_HPP_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "govgame/error.hpp"
#include "govgame/rational.hpp"
#include "json.hpp"

namespace govgame::json_util {

using Json = nlohmann::ordered_json;

// "line L, column C" for a byte offset into `text`.
inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(line_column(text, byte) + ": " + what);
  }
}

[[noreturn]] inline void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

inline void reject_unknown(const Json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& path) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || item.key() == a;
    if (!known) fail(path.empty() ? item.key() : path + "." + item.key(), "unknown field");
  }
}

inline const Json& require(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing required field");
  return *it;
}

inline std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

inline std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// A JSON number or a "p/q" / decimal string.
inline Rational to_rational(const Json& v, const std::string& path) {
  try {
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? Rational(BigInt(v.get<std::uint64_t>()))
                                    : Rational(static_cast<long long>(v.get<std::int64_t>()));
    }
    if (v.is_number_float()) return Rational::from_double(v.get<double>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  fail(path, "expected a number or a \"p/q\" string");
}

inline std::int64_t to_integer(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) return static_cast<std::int64_t>(d);
  }
  fail(path, "expected an integer");
}

inline std::string to_str(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

}  // namespace govgame::json_util

#endif  // GOVGAME_SRC_JSON_UTIL_HPP_
