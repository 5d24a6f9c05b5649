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

#ifndef GOVGAME_GOVGAME_HPP_
#define GOVGAME_GOVGAME_HPP_

#include "govgame/equilibria.hpp"
#include "govgame/error.hpp"
#include "govgame/game.hpp"
#include "govgame/game_io.hpp"
#include "govgame/governance.hpp"
#include "govgame/linear_system.hpp"
#include "govgame/pareto.hpp"
#include "govgame/rational.hpp"
#include "govgame/scenario.hpp"

#endif  // GOVGAME_GOVGAME_HPP_
