// Copyright 2026 The Proplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "proplab/evaluator.hpp"
#include "proplab/position.hpp"

namespace proplab {

// How interior nodes combine their children's Max-win estimates.
//
//   Minimax  best child for the side choosing: max at Max nodes, min at Min.
//   Product  treats child values as independent win probabilities of the
//            outcomes the mover picks among: at a Max node the chance some
//            choice wins is 1 - prod(1 - v_i); at a Min node Max must win
//            them all, prod(v_i).
//   Average  the arithmetic mean of what the other two rules would return
//            at this node.
enum class BackupRule { Minimax, Product, Average };

constexpr const char* to_cstring(BackupRule r) {
  switch (r) {
    case BackupRule::Minimax: return "minimax";
    case BackupRule::Product: return "product";
    default: return "average";
  }
}

std::optional<BackupRule> parse_backup_rule(std::string_view s);

// One player's complete search configuration. depth counts plies expanded
// below the position being decided; the evaluator must cover every frontier
// feature reachable at that depth (table misses throw during search).
struct PlayerConfig {
  BackupRule rule;
  Evaluator evaluator;
  int depth = 1;
};

// One backup step at a node where node_mover chooses among child_values.
// Values must lie in [0, 1] (throws std::logic_error otherwise; an estimate
// outside probability range means a broken evaluator, not a judgment call).
// Results stay in [0, 1], but not necessarily inside the children's span:
// product at a Max node credits having several live options, so it can
// exceed every single child.
double backup(BackupRule rule, Side node_mover,
              std::span<const double> child_values);

// Depth-limited backed-up value of p for Max. Terminal positions inside the
// horizon score exactly; frontier positions score by cfg.evaluator. Requires
// cfg.depth >= 1 (throws std::invalid_argument).
double search_value(const Position& p, const PlayerConfig& cfg);

// The move whose child value is best for p.mover (highest for Max, lowest
// for Min); a tie goes to the left variant. Requires a non-terminal p
// (throws std::logic_error).
Move choose_move(const Position& p, const PlayerConfig& cfg);

}  // namespace proplab
