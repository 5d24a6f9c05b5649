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

#ifndef GOVGAME_GAME_IO_HPP_
#define GOVGAME_GAME_IO_HPP_

#include <string>
#include <string_view>

#include "govgame/game.hpp"

namespace govgame {

// Game interchange format:
//   {"rows": 2, "cols": 2, "row_labels": [...], "col_labels": [...],
//    "payoff1": [[...], [...]], "payoff2": [[...], [...]]}
// Entries are JSON numbers or "p/q" strings. "rows", "cols" and the label
// lists are optional; when present they must agree with the matrices.
// Throws ParseError naming the offending field.
BimatrixGame parse_game(std::string_view json_text);

// Canonical JSON for `game`, entries as exact strings.
std::string serialize_game(const BimatrixGame& game);

}  // namespace govgame

#endif  // GOVGAME_GAME_IO_HPP_
