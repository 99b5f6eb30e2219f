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

#include "proplab/board.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "proplab/rng.hpp"

namespace proplab {
namespace {

bool is_power_of_two(size_t n) { return std::has_single_bit(n); }

int log2_exact(size_t n) { return std::countr_zero(n); }

}  // namespace

std::optional<GameKind> parse_game_kind(std::string_view s) {
  if (s == "p") return GameKind::P;
  if (s == "n") return GameKind::N;
  if (s == "g") return GameKind::G;
  return std::nullopt;
}

Board::Board(GameKind kind, std::vector<std::uint8_t> squares)
    : kind_(kind), squares_(std::move(squares)) {
  const size_t n = squares_.size();
  if (is_split_game(kind_)) {
    if (n < 2 || !is_power_of_two(n)) {
      throw std::invalid_argument(
          "split-game board needs 2^k squares, k >= 1");
    }
    moves_ = log2_exact(n);
  } else {
    if (n < 2) {
      throw std::invalid_argument("G board needs at least 2 squares");
    }
    moves_ = static_cast<int>(n) - 1;
  }
  for (std::uint8_t s : squares_) {
    if (s > 1) throw std::invalid_argument("board squares must be 0 or 1");
  }
  prefix_.resize(n + 1);
  prefix_[0] = 0;
  for (size_t i = 0; i < n; ++i) prefix_[i + 1] = prefix_[i] + squares_[i];
}

std::string Board::to_string() const {
  std::string s;
  s.reserve(squares_.size());
  for (std::uint8_t b : squares_) s.push_back(b ? '1' : '0');
  return s;
}

Board Board::parse(GameKind kind, std::string_view squares) {
  std::vector<std::uint8_t> bits;
  bits.reserve(squares.size());
  for (char c : squares) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("board string must be only '0' and '1'");
    }
    bits.push_back(c == '1');
  }
  return Board(kind, std::move(bits));
}

Board generate_p_board(int depth, double ones_prob, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("P-board depth must be >= 1");
  if (!(ones_prob >= 0.0 && ones_prob <= 1.0)) {
    throw std::invalid_argument("ones_prob must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> bits(size_t{1} << depth);
  for (auto& b : bits) b = to_unit_double(rng()) < ones_prob;
  return Board(GameKind::P, std::move(bits));
}

namespace {

// Shared by generate_n_board and n_board_from_arcs: walks the complete
// binary tree with heap indices (root 1; children of j are 2j, 2j+1) and
// materializes the leaves. arc_label(j) is the +-1 on the arc into node j.
template <typename ArcLabel>
Board n_board_from_labels(int depth, ArcLabel&& arc_label) {
  const size_t leaves = size_t{1} << depth;
  std::vector<std::uint8_t> bits(leaves);
  // Root-path sums level by level: sum[j] for nodes j at the current level.
  std::vector<int> sums{0};
  for (int level = 1; level <= depth; ++level) {
    std::vector<int> next(size_t{1} << level);
    for (size_t i = 0; i < next.size(); ++i) {
      const size_t node = next.size() + i;  // heap index at this level
      next[i] = sums[i / 2] + arc_label(node);
    }
    sums = std::move(next);
  }
  for (size_t i = 0; i < leaves; ++i) bits[i] = sums[i] > 0;
  return Board(GameKind::N, std::move(bits));
}

}  // namespace

Board generate_n_board(int depth, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("N-board depth must be >= 1");
  std::mt19937_64 rng(seed);
  // One draw per arc, in heap order, so the (seed -> board) mapping is
  // fixed by this function alone and safe to freeze in tests.
  return n_board_from_labels(depth, [&rng](size_t) {
    return (rng() & 1u) ? +1 : -1;
  });
}

Board n_board_from_arcs(int depth, std::span<const std::int8_t> arc_labels) {
  if (depth < 1) throw std::invalid_argument("N-board depth must be >= 1");
  const size_t want = (size_t{2} << depth) - 2;
  if (arc_labels.size() != want) {
    throw std::invalid_argument("wrong number of arc labels");
  }
  for (std::int8_t a : arc_labels) {
    if (a != 1 && a != -1) {
      throw std::invalid_argument("arc labels must be +1 or -1");
    }
  }
  return n_board_from_labels(depth, [arc_labels](size_t node) {
    return static_cast<int>(arc_labels[node - 2]);
  });
}

std::vector<Board> enumerate_g_boards(int n_moves) {
  if (n_moves < 1) throw std::invalid_argument("G-game needs >= 1 move");
  if (n_moves > 24) throw std::invalid_argument("G enumeration too large");
  const size_t len = static_cast<size_t>(n_moves) + 1;
  std::vector<Board> boards;
  boards.reserve(size_t{1} << len);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
    std::vector<std::uint8_t> bits(len);
    for (size_t i = 0; i < len; ++i) {
      bits[i] = (code >> (len - 1 - i)) & 1u;  // leftmost square = MSB
    }
    boards.emplace_back(GameKind::G, std::move(bits));
  }
  return boards;
}

}  // namespace proplab
