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

#include "proplab/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace proplab {

std::optional<BackupRule> parse_backup_rule(std::string_view s) {
  if (s == "minimax") return BackupRule::Minimax;
  if (s == "product") return BackupRule::Product;
  if (s == "average") return BackupRule::Average;
  return std::nullopt;
}

double backup(BackupRule rule, Side node_mover,
              std::span<const double> child_values) {
  if (child_values.empty()) {
    throw std::logic_error("backup with no child values");
  }
  for (double v : child_values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::logic_error("backup: child value outside [0, 1]");
    }
  }
  double best = child_values[0];
  double prod = 1.0;
  if (node_mover == Side::Max) {
    for (double v : child_values) {
      best = std::max(best, v);
      prod *= 1.0 - v;
    }
    prod = 1.0 - prod;
  } else {
    for (double v : child_values) {
      best = std::min(best, v);
      prod *= v;
    }
  }
  switch (rule) {
    case BackupRule::Minimax: return best;
    case BackupRule::Product: return prod;
    default: return 0.5 * (best + prod);
  }
}

namespace {

// lookahead counts plies still to expand below p; terminals always score
// exactly, no matter how far from the horizon they are.
double value_rec(const Position& p, const PlayerConfig& cfg, int lookahead) {
  if (p.is_terminal()) return terminal_value_for_max(p);
  if (lookahead == 0) return cfg.evaluator(p);
  const double vals[2] = {value_rec(child(p, 0), cfg, lookahead - 1),
                          value_rec(child(p, 1), cfg, lookahead - 1)};
  return backup(cfg.rule, p.mover, vals);
}

}  // namespace

double search_value(const Position& p, const PlayerConfig& cfg) {
  if (cfg.depth < 1) throw std::invalid_argument("search depth must be >= 1");
  return value_rec(p, cfg, cfg.depth);
}

Move choose_move(const Position& p, const PlayerConfig& cfg) {
  if (cfg.depth < 1) throw std::invalid_argument("search depth must be >= 1");
  if (p.is_terminal()) {
    throw std::logic_error("choose_move on a terminal position");
  }
  const double left = value_rec(child(p, 0), cfg, cfg.depth - 1);
  const double right = value_rec(child(p, 1), cfg, cfg.depth - 1);
  const bool take_left =
      p.mover == Side::Max ? left >= right : left <= right;
  return take_left ? left_move(p.kind()) : right_move(p.kind());
}

}  // namespace proplab
