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

#include <cstdint>
#include <utility>
#include <vector>

#include "proplab/board.hpp"
#include "proplab/tournament.hpp"

namespace proplab {

// A whole study: one board batch played by every requested matchup at every
// depth in [depth_lo, depth_hi]. Defaults reproduce the classic setup:
// 1600 ten-move P-boards at critical density, e1, depths 2 through 8,
// product/average/minimax round-robin.
struct StudySpec {
  GameKind game = GameKind::P;
  EvalKind eval = EvalKind::E1;
  int game_moves = 10;
  int depth_lo = 2;
  int depth_hi = 8;
  int n_boards = 1600;               // ignored for G: boards are enumerated
  double ones_prob = kCriticalOnesProb;  // P only
  std::uint64_t master_seed = 1;     // ignored for G
  std::vector<std::pair<BackupRule, BackupRule>> matchups;  // empty: default
  int workers = 0;                   // 0: one per hardware thread

  // G-boards are exhausted, not sampled, so G results carry no seed.
  bool sampled() const { return game != GameKind::G; }
};

// product vs minimax, average vs minimax, average vs product — the pairings
// a three-rule round-robin needs.
std::vector<std::pair<BackupRule, BackupRule>> default_matchups();

// Rejects inconsistent specs with std::invalid_argument: bad depth range,
// non-positive board count, game too long to tabulate or enumerate,
// ones_prob outside [0, 1], or an evaluator paired with a game family it
// cannot score (e2 needs split boards, e3 needs G boards).
void validate(const StudySpec& spec);

// The spec's board batch. Sampled games derive board i's generator seed
// from (master_seed, i); G enumerates all boards of the given length.
std::vector<Board> make_boards(const StudySpec& spec);

// Evaluator sized to the spec's game: table-backed kinds cover every
// moves_remaining a search frontier can see (game_moves - 1).
Evaluator make_evaluator(EvalKind kind, int game_moves);

// Runs the full grid, matchup-major then depth-ascending — the row order
// of the result is the row order of the reports. Pure apart from CPU use:
// no I/O, no global state, bit-identical on reruns for any worker count.
std::vector<ContestRecord> run_study(const StudySpec& spec);

}  // namespace proplab
