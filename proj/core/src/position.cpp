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

#include "proplab/position.hpp"

#include <stdexcept>

namespace proplab {

Position initial_position(const Board& board, Side first_mover) {
  return Position{&board, 0, board.size(), first_mover, board.moves()};
}

std::vector<Move> legal_moves(const Position& p) {
  if (p.is_terminal()) return {};
  return {left_move(p.kind()), right_move(p.kind())};
}

Position apply_move(const Position& p, Move m) {
  if (p.is_terminal()) {
    throw std::logic_error("apply_move on a terminal position");
  }
  if (m == left_move(p.kind())) return child(p, 0);
  if (m == right_move(p.kind())) return child(p, 1);
  throw std::logic_error("move does not belong to this game kind");
}

}  // namespace proplab
