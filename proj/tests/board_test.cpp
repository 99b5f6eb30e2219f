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

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "proplab/rng.hpp"

using namespace proplab;

TEST_CASE("board shape and move count per game kind") {
  const Board p = Board::parse(GameKind::P, "11001010");
  CHECK(p.kind() == GameKind::P);
  CHECK(p.size() == 8);
  CHECK(p.moves() == 3);

  const Board g = Board::parse(GameKind::G, "110");
  CHECK(g.moves() == 2);  // squares - 1

  CHECK(Board::parse(GameKind::N, "10").moves() == 1);
}

TEST_CASE("board construction rejects malformed inputs") {
  CHECK_THROWS_AS(Board::parse(GameKind::P, "110"), std::invalid_argument);
  CHECK_THROWS_AS(Board::parse(GameKind::P, "1"), std::invalid_argument);
  CHECK_THROWS_AS(Board::parse(GameKind::P, ""), std::invalid_argument);
  CHECK_THROWS_AS(Board::parse(GameKind::G, "1"), std::invalid_argument);
  CHECK_THROWS_AS(Board::parse(GameKind::G, "10x"), std::invalid_argument);
  CHECK_THROWS_AS(Board(GameKind::G, {1, 2}), std::invalid_argument);
}

TEST_CASE("to_string round-trips through parse") {
  for (const char* s : {"1100", "0000", "1111", "0110"}) {
    CHECK(Board::parse(GameKind::P, s).to_string() == s);
  }
  CHECK(Board::parse(GameKind::G, "01101").to_string() == "01101");
}

TEST_CASE("ones_in matches a direct scan on random segments") {
  const Board b = generate_p_board(6, 0.4, 99);
  for (int lo = 0; lo < b.size(); ++lo) {
    for (int hi = lo + 1; hi <= b.size(); ++hi) {
      int direct = 0;
      for (int i = lo; i < hi; ++i) direct += b.square(i);
      CHECK(b.ones_in(lo, hi) == direct);
    }
  }
}

TEST_CASE("P-board generation is deterministic in the seed") {
  const Board a = generate_p_board(8, 0.3819, 1234);
  const Board b = generate_p_board(8, 0.3819, 1234);
  const Board c = generate_p_board(8, 0.3819, 1235);
  CHECK(a.to_string() == b.to_string());
  CHECK(a.to_string() != c.to_string());  // astronomically unlikely to tie
}

TEST_CASE("P-board density extremes and frequency sanity") {
  CHECK(generate_p_board(4, 0.0, 7).ones_in(0, 16) == 0);
  CHECK(generate_p_board(4, 1.0, 7).ones_in(0, 16) == 16);

  // 2^14 draws at the critical density: the observed fraction should sit
  // within a few standard deviations (sigma ~ 0.004) of the target.
  const Board big = generate_p_board(14, kCriticalOnesProb, 2024);
  const double f = static_cast<double>(big.ones_in(0, big.size())) / big.size();
  CHECK(f > kCriticalOnesProb - 0.02);
  CHECK(f < kCriticalOnesProb + 0.02);

  CHECK_THROWS_AS(generate_p_board(0, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_p_board(3, 1.5, 1), std::invalid_argument);
}

TEST_CASE("N-board from explicit arc labels follows the path-sum rule") {
  // Heap order: labels into nodes 2..7. Leaf i's value is 1 iff the labels
  // on its two arcs sum to > 0, so only the leftmost leaf (+1 +1) is a 1
  // and the zero-sum paths are 0, not 1.
  const std::vector<std::int8_t> arcs = {+1, -1, +1, -1, +1, -1};
  CHECK(n_board_from_arcs(2, arcs).to_string() == "1000");

  const std::vector<std::int8_t> all_up = {+1, +1, +1, +1, +1, +1};
  CHECK(n_board_from_arcs(2, all_up).to_string() == "1111");
  const std::vector<std::int8_t> all_down = {-1, -1, -1, -1, -1, -1};
  CHECK(n_board_from_arcs(2, all_down).to_string() == "0000");

  const std::vector<std::int8_t> one_level = {+1, -1};
  CHECK(n_board_from_arcs(1, one_level).to_string() == "10");

  CHECK_THROWS_AS(n_board_from_arcs(2, std::vector<std::int8_t>{+1, -1}),
                  std::invalid_argument);
  const std::vector<std::int8_t> bad = {+1, -1, +1, -1, +1, 0};
  CHECK_THROWS_AS(n_board_from_arcs(2, bad), std::invalid_argument);
}

TEST_CASE("N-board generation is deterministic and sized 2^depth") {
  const Board a = generate_n_board(5, 42);
  CHECK(a.size() == 32);
  CHECK(a.kind() == GameKind::N);
  CHECK(a.to_string() == generate_n_board(5, 42).to_string());
  CHECK(a.to_string() != generate_n_board(5, 43).to_string());
}

TEST_CASE("N-board ones fraction matches the positive-walk probability") {
  // A depth-8 leaf is 1 iff an 8-step +-1 walk ends positive:
  // (1 - C(8,4)/2^8) / 2 = 0.36328. Leaves within one board are correlated,
  // so average many boards before comparing.
  double total = 0.0;
  const int boards = 200;
  for (int i = 0; i < boards; ++i) {
    const Board b = generate_n_board(8, derive_seed(5150, i));
    total += static_cast<double>(b.ones_in(0, b.size())) / b.size();
  }
  const double f = total / boards;
  CHECK(f > 0.36328 - 0.04);
  CHECK(f < 0.36328 + 0.04);
}

TEST_CASE("G-board enumeration covers every board exactly once, in order") {
  const std::vector<Board> boards = enumerate_g_boards(2);
  REQUIRE(boards.size() == 8);
  const char* expected[] = {"000", "001", "010", "011",
                            "100", "101", "110", "111"};
  for (size_t i = 0; i < boards.size(); ++i) {
    CHECK(boards[i].to_string() == expected[i]);
    CHECK(boards[i].kind() == GameKind::G);
    CHECK(boards[i].moves() == 2);
  }

  const std::vector<Board> ten = enumerate_g_boards(10);
  CHECK(ten.size() == 2048);
  CHECK(ten.front().to_string() == "00000000000");
  CHECK(ten.back().to_string() == "11111111111");
  std::set<std::string> distinct;
  for (const Board& b : ten) distinct.insert(b.to_string());
  CHECK(distinct.size() == 2048);
}

TEST_CASE("seed derivation decorrelates indices and ignores order") {
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  CHECK(derive_seed(7, 5) == derive_seed(7, 5));
  CHECK(to_unit_double(0) == 0.0);
  CHECK(to_unit_double(~std::uint64_t{0}) < 1.0);
}
