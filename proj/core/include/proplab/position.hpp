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

#include <vector>

#include "proplab/board.hpp"
#include "proplab/side.hpp"

namespace proplab {

// Moves across all game kinds. Split games keep one half of the segment;
// G-games remove one end square. The "left" variant of either pair comes
// first in child ordering, and ties in move choice resolve to it.
enum class Move { KeepLeft, KeepRight, RemoveLeft, RemoveRight };

constexpr const char* to_cstring(Move m) {
  switch (m) {
    case Move::KeepLeft: return "keep-left";
    case Move::KeepRight: return "keep-right";
    case Move::RemoveLeft: return "remove-left";
    default: return "remove-right";
  }
}

constexpr Move left_move(GameKind k) {
  return is_split_game(k) ? Move::KeepLeft : Move::RemoveLeft;
}
constexpr Move right_move(GameKind k) {
  return is_split_game(k) ? Move::KeepRight : Move::RemoveRight;
}

// A live game state: the segment [lo, hi) of a board still in play, the side
// to move, and the number of moves left. Non-owning; the board must outlive
// every position derived from it.
//
// Invariants: for split games hi - lo = 2^moves_remaining, for G-games
// hi - lo = moves_remaining + 1. Terminal iff moves_remaining == 0, i.e. one
// square left.
struct Position {
  const Board* board;
  int lo;
  int hi;
  Side mover;
  int moves_remaining;

  bool is_terminal() const { return moves_remaining == 0; }
  int length() const { return hi - lo; }
  int ones() const { return board->ones_in(lo, hi); }
  GameKind kind() const { return board->kind(); }
};

// Whole board, given first mover, full game ahead.
Position initial_position(const Board& board, Side first_mover);

// Both moves of the position's game kind, left variant first; empty iff
// terminal.
std::vector<Move> legal_moves(const Position& p);

// Throws std::logic_error if m is not legal in p (wrong game kind or p
// terminal).
Position apply_move(const Position& p, Move m);

// Child `which` (0 = left variant, 1 = right variant) of a non-terminal
// position. The unchecked hot-path form of apply_move.
inline Position child(const Position& p, int which) {
  Position c = p;
  if (is_split_game(p.kind())) {
    const int mid = p.lo + (p.hi - p.lo) / 2;
    if (which == 0) {
      c.hi = mid;
    } else {
      c.lo = mid;
    }
  } else {
    if (which == 0) {
      ++c.lo;
    } else {
      --c.hi;
    }
  }
  c.mover = opponent(p.mover);
  --c.moves_remaining;
  return c;
}

// Game-over score from Max's point of view: 1 iff the side that made the
// last move wins, i.e. iff the surviving square is a 1 exactly when the
// side nominally to move at the terminal (= the last mover's opponent) is
// Min. Requires p.is_terminal().
inline int terminal_value_for_max(const Position& p) {
  const bool last_mover_wins = p.board->square(p.lo) == 1;
  const Side last_mover = opponent(p.mover);
  const Side winner = last_mover_wins ? last_mover : p.mover;
  return winner == Side::Max ? 1 : 0;
}

}  // namespace proplab
