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

#include "proplab/board.hpp"
#include "proplab/position.hpp"

namespace proplab {

// 1 iff the side to move on segment [lo, hi) of b has a forced win.
//
// Because both available moves and the winning condition depend only on the
// segment and on whose turn it is relative to the last move, the value is
// mover-relative: a one-square segment is won by the mover iff the square is
// a 0 (the opponent just made the last move onto a non-1), and otherwise the
// mover wins iff some move leads to a segment its opponent loses. Split
// segments are solved by direct recursion (each segment is visited once);
// G segments share subintervals across move orders, so they are solved
// bottom-up over all subintervals in O(len^2).
int mover_wins(const Board& b, int lo, int hi);

// Exact game value of p for Max, in {0, 1}. Works for terminal positions
// too (then it equals terminal_value_for_max).
int solve_exact(const Position& p);

}  // namespace proplab
