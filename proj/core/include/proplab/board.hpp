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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proplab {

// The three board-splitting game families.
//
// All of them are played on a row of binary squares and end when one square
// is left: the player who made the last move wins iff that square holds a 1.
// They differ in how boards are generated and how moves shrink the row:
//
//   P: 2^moves squares, each an independent coin flip; a move keeps either
//      the left or the right half of the remaining segment.
//   N: same splitting moves, but the squares come from +-1 labels on the
//      arcs of a complete binary tree (a leaf is 1 iff its root-to-leaf
//      label sum is positive), which correlates nearby squares.
//   G: moves+1 squares, each move removes the leftmost or rightmost square,
//      so distinct move orders can reach the same segment.
enum class GameKind { P, N, G };

constexpr const char* to_cstring(GameKind k) {
  switch (k) {
    case GameKind::P: return "p";
    case GameKind::N: return "n";
    default: return "g";
  }
}

std::optional<GameKind> parse_game_kind(std::string_view s);

// P- and N-games share the halving move; G-games remove end squares.
constexpr bool is_split_game(GameKind k) { return k != GameKind::G; }

// Leaf density at which a random P-board is critical: the mover-relative
// forced-win probability of a segment is then the same at every depth,
// namely the fixed point x = 1 - x^2, x = (sqrt(5)-1)/2. Tournaments at
// this density produce decisive games at a rate roughly independent of
// search depth, instead of draining away as boards become one-sided.
inline constexpr double kCriticalOnesProb = 0.38196601125010515;

// An immutable game board: a row of binary squares plus the number of moves
// in a full game played on it. Prefix sums make ones_in O(1), which keeps
// the evaluators cheap inside deep searches.
class Board {
 public:
  // Validates the square count: 2^k (k >= 1) squares for split games,
  // >= 2 squares for G. Throws std::invalid_argument otherwise.
  Board(GameKind kind, std::vector<std::uint8_t> squares);

  GameKind kind() const { return kind_; }

  // Number of plies in a full game from the initial position.
  int moves() const { return moves_; }

  int size() const { return static_cast<int>(squares_.size()); }
  std::uint8_t square(int i) const { return squares_[static_cast<size_t>(i)]; }
  std::span<const std::uint8_t> squares() const { return squares_; }

  // Number of 1-squares in [lo, hi).
  int ones_in(int lo, int hi) const {
    return prefix_[static_cast<size_t>(hi)] - prefix_[static_cast<size_t>(lo)];
  }

  // "1100"-style square string, leftmost square first.
  std::string to_string() const;

  // Inverse of to_string. Throws std::invalid_argument on anything but a
  // valid-length string of '0'/'1'.
  static Board parse(GameKind kind, std::string_view squares);

 private:
  GameKind kind_;
  int moves_;
  std::vector<std::uint8_t> squares_;
  std::vector<int> prefix_;
};

// A (depth)-move P-board: 2^depth squares, each 1 with probability
// ones_prob, drawn from an mt19937_64 seeded with `seed`. Identical
// (seed -> board) mapping on every platform.
Board generate_p_board(int depth, double ones_prob, std::uint64_t seed);

// A (depth)-move N-board: draws one +-1 label per arc of a complete binary
// tree of the given depth; leaf i is 1 iff the labels on its root path sum
// to > 0. Arcs are drawn in heap order (both arcs into level k before
// level k+1, left to right), one bit per arc.
Board generate_n_board(int depth, std::uint64_t seed);

// Deterministic N-board from explicit arc labels (each +1 or -1), in the
// same heap order used by generate_n_board: arc_labels[j - 2] is the label
// on the arc into heap node j (root = node 1). Requires 2^(depth+1) - 2
// labels. Used to pin down the leaf rule in tests.
Board n_board_from_arcs(int depth, std::span<const std::int8_t> arc_labels);

// All 2^(n_moves+1) G-boards with n_moves+1 squares, in ascending binary
// order with the leftmost square as the most significant bit. G-studies
// exhaust this space instead of sampling.
std::vector<Board> enumerate_g_boards(int n_moves);

}  // namespace proplab
