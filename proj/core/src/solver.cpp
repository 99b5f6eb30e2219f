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

#include "proplab/solver.hpp"

#include <stdexcept>
#include <vector>

namespace proplab {
namespace {

int mover_wins_split(const Board& b, int lo, int hi) {
  if (hi - lo == 1) return b.square(lo) == 0;
  const int mid = lo + (hi - lo) / 2;
  // Win iff either half is a loss for the opponent moving on it.
  return mover_wins_split(b, lo, mid) == 0 || mover_wins_split(b, mid, hi) == 0;
}

int mover_wins_g(const Board& b, int lo, int hi) {
  // All subintervals of [lo, hi), shortest first; win[i] is the value of the
  // length-`len` interval starting at lo + i.
  const int n = hi - lo;
  std::vector<std::uint8_t> win(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) win[static_cast<size_t>(i)] = b.square(lo + i) == 0;
  std::vector<std::uint8_t> next;
  for (int len = 2; len <= n; ++len) {
    next.assign(static_cast<size_t>(n - len + 1), 0);
    for (int i = 0; i + len <= n; ++i) {
      // Remove left end -> interval at i+1; remove right end -> interval at i.
      next[static_cast<size_t>(i)] =
          !win[static_cast<size_t>(i + 1)] || !win[static_cast<size_t>(i)];
    }
    win = next;
  }
  return win[0];
}

}  // namespace

int mover_wins(const Board& b, int lo, int hi) {
  if (lo < 0 || hi > b.size() || hi - lo < 1) {
    throw std::invalid_argument("mover_wins: bad segment");
  }
  return is_split_game(b.kind()) ? mover_wins_split(b, lo, hi)
                                 : mover_wins_g(b, lo, hi);
}

int solve_exact(const Position& p) {
  const int w = mover_wins(*p.board, p.lo, p.hi);
  return p.mover == Side::Max ? w : 1 - w;
}

}  // namespace proplab
