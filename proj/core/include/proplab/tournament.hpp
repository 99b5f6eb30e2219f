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
#include <string>

#include "proplab/board.hpp"
#include "proplab/search.hpp"

namespace proplab {

// The two configurations being compared in a contest.
enum class PlayerId { A, B };

constexpr const char* to_cstring(PlayerId p) {
  return p == PlayerId::A ? "a" : "b";
}

// A board is played twice with seats swapped. Boards are one-sided often
// enough that only pairs won twice by the same configuration — critical
// pairs — carry information; a split pair just means the board, not the
// player, decided the outcome.
enum class PairOutcome { Split, ASwept, BSwept };

// One (matchup, depth) cell of a tournament: every board in the batch played
// as a swapped-seat pair by rule_a vs rule_b sharing one evaluator and one
// search depth.
struct ContestRecord {
  GameKind game;
  std::string eval;
  int game_moves = 0;  // full-game plies of the boards in the batch
  int depth = 0;
  BackupRule rule_a;
  BackupRule rule_b;
  int n_boards = 0;
  int critical_pairs = 0;
  int a_pair_wins = 0;  // critical pairs swept by configuration A
};

// Summary of how decisively A beat B on the critical pairs.
struct SignificanceReport {
  double win_pct;  // 100 * a_pair_wins / critical_pairs
  double p_value;  // exact two-sided tail of Binomial(critical_pairs, 1/2)
};

// One game: `first` moves first (and is therefore the Max seat; the other
// configuration plays Min). Returns who won.
PlayerId play_game(const Board& board, PlayerId first,
                   const PlayerConfig& cfg_a, const PlayerConfig& cfg_b);

// The swapped-seat pair on one board: A first, then B first.
PairOutcome play_pair(const Board& board, const PlayerConfig& cfg_a,
                      const PlayerConfig& cfg_b);

// Plays every board as a pair and tallies the outcome counts. All boards
// must share one kind and game length; depth >= 1; workers = 0 means one
// per hardware thread. The tallies are sums of per-board facts, so the
// result is identical for every worker count and schedule.
ContestRecord run_contest(std::span<const Board> boards, int depth,
                          BackupRule rule_a, BackupRule rule_b,
                          const Evaluator& eval, int workers = 1);

// Absent when there were no critical pairs: with nothing decided, neither
// a percentage nor a tail probability is defined.
std::optional<SignificanceReport> significance_report(const ContestRecord& r);

}  // namespace proplab
