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

#include "proplab/evaluator.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "proplab/rng.hpp"
#include "proplab/solver.hpp"

using namespace proplab;

namespace {

// Oracle for the e2 table: enumerate every arrangement of 2^d squares,
// bucket by ones count, and average the solver's mover-relative value.
// This is the definition the hypergeometric recursion is supposed to
// shortcut, computed without any shared code.
std::vector<std::vector<double>> brute_force_e2(int max_moves) {
  std::vector<std::vector<double>> rows(static_cast<size_t>(max_moves) + 1);
  for (int m = 1; m <= max_moves; ++m) {
    const int len = 1 << m;
    std::vector<long> wins(static_cast<size_t>(len) + 1, 0);
    std::vector<long> counts(static_cast<size_t>(len) + 1, 0);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::vector<std::uint8_t> bits(static_cast<size_t>(len));
      int ones = 0;
      for (int i = 0; i < len; ++i) {
        bits[static_cast<size_t>(i)] = (code >> i) & 1u;
        ones += bits[static_cast<size_t>(i)];
      }
      const Board b(GameKind::P, std::move(bits));
      wins[static_cast<size_t>(ones)] += mover_wins(b, 0, len);
      counts[static_cast<size_t>(ones)] += 1;
    }
    rows[static_cast<size_t>(m)].resize(static_cast<size_t>(len) + 1);
    for (int w = 0; w <= len; ++w) {
      rows[static_cast<size_t>(m)][static_cast<size_t>(w)] =
          static_cast<double>(wins[static_cast<size_t>(w)]) /
          static_cast<double>(counts[static_cast<size_t>(w)]);
    }
  }
  return rows;
}

}  // namespace

TEST_CASE("e2 table: hand-derived entries") {
  const FeatureWinTable t = build_e2_table(3);
  CHECK(t.max_moves() == 3);
  CHECK(t.at(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.at(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.at(1, 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.at(2, 0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.at(2, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(t.at(2, 3) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(t.at(3, 2) == doctest::Approx(2.0 / 7.0).epsilon(1e-12));
  CHECK(t.at(3, 3) == doctest::Approx(5.0 / 7.0).epsilon(1e-12));
  CHECK(t.at(3, 4) == doctest::Approx(33.0 / 35.0).epsilon(1e-12));
}

TEST_CASE("e2 table equals exhaustive enumeration up to three moves") {
  const FeatureWinTable t = build_e2_table(3);
  const auto oracle = brute_force_e2(3);
  for (int m = 1; m <= 3; ++m) {
    for (int w = 0; w <= (1 << m); ++w) {
      CAPTURE(m);
      CAPTURE(w);
      CHECK(t.at(m, w) ==
            doctest::Approx(oracle[static_cast<size_t>(m)][static_cast<size_t>(w)])
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("e3 table: hand-derived rows for one and two moves") {
  const FeatureWinTable t = build_e3_table(2);
  // One move, two squares: win iff any 1 is present to keep.
  CHECK(t.at(1, 0) == doctest::Approx(0.0));
  CHECK(t.at(1, 1) == doctest::Approx(1.0));
  CHECK(t.at(1, 2) == doctest::Approx(1.0));
  // Two moves, three squares: "000" wins (opponent strands on a 0);
  // of {"001","010","100"} only the middle-1 loses; two or more ones lose.
  CHECK(t.at(2, 0) == doctest::Approx(1.0));
  CHECK(t.at(2, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(t.at(2, 2) == doctest::Approx(0.0));
  CHECK(t.at(2, 3) == doctest::Approx(0.0));
}

TEST_CASE("feature table bounds and validation") {
  const FeatureWinTable t = build_e2_table(2);
  CHECK(t.contains(1, 0));
  CHECK(t.contains(2, 4));
  CHECK(!t.contains(2, 5));
  CHECK(!t.contains(3, 0));
  CHECK(!t.contains(0, 0));
  CHECK_THROWS_AS(t.at(3, 0), std::out_of_range);
  CHECK_THROWS_AS(t.at(2, 5), std::out_of_range);
  CHECK_THROWS_AS(t.at(1, -1), std::out_of_range);

  CHECK_THROWS_AS(FeatureWinTable({{}, {0.5, 1.2}}), std::invalid_argument);
  CHECK_THROWS_AS(FeatureWinTable({{}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(build_e2_table(0), std::invalid_argument);
  CHECK_THROWS_AS(build_e3_table(0), std::invalid_argument);
}

TEST_CASE("feature table CSV dump is stable and exact") {
  const FeatureWinTable t = build_e2_table(2);
  std::ostringstream out;
  t.write_csv(out);
  CHECK(out.str() ==
        "moves_remaining,ones,win_prob\n"
        "1,0,0\n"
        "1,1,1\n"
        "1,2,1\n"
        "2,0,1\n"
        "2,1,1\n"
        "2,2,0.333333333333\n"
        "2,3,0\n"
        "2,4,0\n");
}

TEST_CASE("e1: ones fraction oriented to the last mover") {
  const Board b = Board::parse(GameKind::P, "1100");
  // Two moves remain, so the opponent of the side to move moves last.
  const Position p = initial_position(b, Side::Max);
  CHECK(eval_e1(p) == doctest::Approx(0.5));  // Min moves last: 1 - 2/4

  const Position left{&b, 0, 2, Side::Min, 1};  // "11", Min moves last
  CHECK(eval_e1(left) == doctest::Approx(0.0));  // Max's chances: 1 - 1
  const Position right{&b, 2, 4, Side::Min, 1};  // "00"
  CHECK(eval_e1(right) == doctest::Approx(1.0));

  const Board g = Board::parse(GameKind::G, "011");
  const Position gp = initial_position(g, Side::Max);  // Min moves last
  CHECK(eval_e1(gp) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("e1 perspective flip: swapping the mover complements the estimate") {
  for (int i = 0; i < 30; ++i) {
    const Board b = generate_p_board(5, 0.45, derive_seed(303, i));
    for (int mr = 1; mr <= 4; ++mr) {
      const Position pm{&b, 0, 1 << mr, Side::Max, mr};
      const Position pn{&b, 0, 1 << mr, Side::Min, mr};
      CHECK(eval_e1(pm) + eval_e1(pn) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("e2/e3 orient the mover-relative table to Max") {
  const FeatureWinTable t2 = build_e2_table(2);
  const Board b = Board::parse(GameKind::P, "1100");
  const Position pmax = initial_position(b, Side::Max);
  const Position pmin = initial_position(b, Side::Min);
  CHECK(eval_e2(pmax, t2) == doctest::Approx(1.0 / 3.0));
  CHECK(eval_e2(pmin, t2) == doctest::Approx(2.0 / 3.0));

  const FeatureWinTable t3 = build_e3_table(2);
  const Board g = Board::parse(GameKind::G, "010");
  CHECK(eval_e3(initial_position(g, Side::Max), t3) ==
        doctest::Approx(2.0 / 3.0));
  CHECK(eval_e3(initial_position(g, Side::Min), t3) ==
        doctest::Approx(1.0 / 3.0));
}

TEST_CASE("evaluators reject terminals and mismatched game families") {
  const Board p = Board::parse(GameKind::P, "1100");
  const Board g = Board::parse(GameKind::G, "110");
  const FeatureWinTable t2 = build_e2_table(2);
  const FeatureWinTable t3 = build_e3_table(2);

  const Position terminal{&p, 0, 1, Side::Max, 0};
  CHECK_THROWS_AS(eval_e1(terminal), std::logic_error);
  CHECK_THROWS_AS(eval_e2(terminal, t2), std::logic_error);

  CHECK_THROWS_AS(eval_e2(initial_position(g, Side::Max), t2),
                  std::logic_error);
  CHECK_THROWS_AS(eval_e3(initial_position(p, Side::Max), t3),
                  std::logic_error);
}

TEST_CASE("exact evaluator is the solver in disguise") {
  for (int i = 0; i < 20; ++i) {
    const Board b = generate_p_board(4, 0.5, derive_seed(404, i));
    const Position p = initial_position(b, i % 2 ? Side::Min : Side::Max);
    const double v = eval_exact(p);
    CHECK((v == 0.0 || v == 1.0));
    CHECK(v == doctest::Approx(static_cast<double>(solve_exact(p))));
  }
}

TEST_CASE("evaluator handles dispatch and share tables across copies") {
  const Evaluator e1h = Evaluator::e1();
  CHECK(e1h.kind() == EvalKind::E1);
  CHECK(e1h.table() == nullptr);

  const Evaluator e2h = Evaluator::e2(3);
  CHECK(e2h.kind() == EvalKind::E2);
  REQUIRE(e2h.table() != nullptr);
  CHECK(e2h.table()->max_moves() == 3);
  const Evaluator copy = e2h;  // shallow: same table object
  CHECK(copy.table() == e2h.table());

  const Board b = Board::parse(GameKind::P, "1100");
  const Position p = initial_position(b, Side::Max);
  CHECK(e1h(p) == doctest::Approx(eval_e1(p)));
  CHECK(e2h(p) == doctest::Approx(eval_e2(p, *e2h.table())));
  CHECK(Evaluator::exact()(p) == doctest::Approx(eval_exact(p)));

  const Evaluator e3h = Evaluator::e3(4);
  CHECK(e3h.kind() == EvalKind::E3);
  const Board g = Board::parse(GameKind::G, "01101");
  const Position gp = initial_position(g, Side::Min);
  CHECK(e3h(gp) == doctest::Approx(eval_e3(gp, *e3h.table())));
}

TEST_CASE("eval kind names parse back") {
  for (EvalKind k : {EvalKind::E1, EvalKind::E2, EvalKind::E3, EvalKind::Exact}) {
    CHECK(parse_eval_kind(to_cstring(k)) == k);
  }
  CHECK(!parse_eval_kind("e4"));
}
