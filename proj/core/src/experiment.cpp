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

#include "proplab/experiment.hpp"

#include <algorithm>
#include <stdexcept>

#include "proplab/rng.hpp"

namespace proplab {

std::vector<std::pair<BackupRule, BackupRule>> default_matchups() {
  return {{BackupRule::Product, BackupRule::Minimax},
          {BackupRule::Average, BackupRule::Minimax},
          {BackupRule::Average, BackupRule::Product}};
}

void validate(const StudySpec& spec) {
  if (spec.game_moves < 1) {
    throw std::invalid_argument("game_moves must be >= 1");
  }
  // Split boards double per move; G enumeration doubles per square. Both
  // caps keep a full study within desktop memory and minutes of CPU.
  if (is_split_game(spec.game) && spec.game_moves > 20) {
    throw std::invalid_argument("split games longer than 20 moves need more "
                                "than 1M squares per board");
  }
  if (spec.game == GameKind::G && spec.game_moves > 20) {
    throw std::invalid_argument("G studies enumerate 2^(moves+1) boards; "
                                "20 moves is the supported maximum");
  }
  if (spec.depth_lo < 1 || spec.depth_lo > spec.depth_hi) {
    throw std::invalid_argument("need 1 <= depth_lo <= depth_hi");
  }
  if (spec.sampled() && spec.n_boards < 1) {
    throw std::invalid_argument("n_boards must be >= 1");
  }
  if (!(spec.ones_prob >= 0.0 && spec.ones_prob <= 1.0)) {
    throw std::invalid_argument("ones_prob must be in [0, 1]");
  }
  if (spec.workers < 0) {
    throw std::invalid_argument("workers must be >= 0");
  }
  if (spec.eval == EvalKind::E2 && !is_split_game(spec.game)) {
    throw std::invalid_argument("e2 scores split-game positions only");
  }
  if (spec.eval == EvalKind::E3 && spec.game != GameKind::G) {
    throw std::invalid_argument("e3 scores G-game positions only");
  }
}

std::vector<Board> make_boards(const StudySpec& spec) {
  if (spec.game == GameKind::G) return enumerate_g_boards(spec.game_moves);
  std::vector<Board> boards;
  boards.reserve(static_cast<size_t>(spec.n_boards));
  for (int i = 0; i < spec.n_boards; ++i) {
    const std::uint64_t seed =
        derive_seed(spec.master_seed, static_cast<std::uint64_t>(i));
    boards.push_back(spec.game == GameKind::P
                         ? generate_p_board(spec.game_moves, spec.ones_prob, seed)
                         : generate_n_board(spec.game_moves, seed));
  }
  return boards;
}

Evaluator make_evaluator(EvalKind kind, int game_moves) {
  // Frontier positions have at most game_moves - 1 moves remaining (the
  // root's children already used one), so tables stop there.
  const int table_moves = std::max(1, game_moves - 1);
  switch (kind) {
    case EvalKind::E1: return Evaluator::e1();
    case EvalKind::E2: return Evaluator::e2(table_moves);
    case EvalKind::E3: return Evaluator::e3(table_moves);
    default: return Evaluator::exact();
  }
}

std::vector<ContestRecord> run_study(const StudySpec& spec) {
  validate(spec);
  const std::vector<Board> boards = make_boards(spec);
  const Evaluator eval = make_evaluator(spec.eval, spec.game_moves);
  const auto matchups =
      spec.matchups.empty() ? default_matchups() : spec.matchups;

  std::vector<ContestRecord> records;
  records.reserve(matchups.size() *
                  static_cast<size_t>(spec.depth_hi - spec.depth_lo + 1));
  for (const auto& [rule_a, rule_b] : matchups) {
    for (int depth = spec.depth_lo; depth <= spec.depth_hi; ++depth) {
      records.push_back(
          run_contest(boards, depth, rule_a, rule_b, eval, spec.workers));
    }
  }
  return records;
}

}  // namespace proplab
