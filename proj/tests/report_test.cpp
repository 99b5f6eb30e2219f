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

#include "proplab/report.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

using namespace proplab;

namespace {

ContestRecord make_record(int depth, int critical, int a_wins) {
  ContestRecord r;
  r.game = GameKind::P;
  r.eval = "e1";
  r.game_moves = 10;
  r.depth = depth;
  r.rule_a = BackupRule::Product;
  r.rule_b = BackupRule::Minimax;
  r.n_boards = 1600;
  r.critical_pairs = critical;
  r.a_pair_wins = a_wins;
  return r;
}

}  // namespace

TEST_CASE("win percentages format to exactly one decimal") {
  CHECK(format_win_pct(100.0 * 231 / 472) == "48.9");
  CHECK(format_win_pct(100.0 * 181 / 320) == "56.6");
  CHECK(format_win_pct(100.0 * 334 / 597) == "55.9");
  CHECK(format_win_pct(100.0 * 385 / 525) == "73.3");
  CHECK(format_win_pct(0.0) == "0.0");
  CHECK(format_win_pct(100.0) == "100.0");
}

TEST_CASE("p-values format to two significant digits") {
  CHECK(format_p_value(0.678729) == "6.8e-01");
  CHECK(format_p_value(3.30506e-3) == "3.3e-03");
  CHECK(format_p_value(1.71992e-8) == "1.7e-08");
  CHECK(format_p_value(1.0) == "1.0e+00");
}

TEST_CASE("results CSV: golden output with and without a seed") {
  const std::vector<ContestRecord> records = {make_record(1, 0, 0),
                                              make_record(2, 472, 231)};
  std::ostringstream with_seed;
  write_results_csv(with_seed, records, 42);
  CHECK(with_seed.str() ==
        "game,eval,depth,rule_a,rule_b,n_boards,critical_pairs,a_pair_wins,"
        "win_pct,p_value,master_seed\n"
        "p,e1,1,product,minimax,1600,0,0,,,42\n"
        "p,e1,2,product,minimax,1600,472,231,48.9,6.8e-01,42\n");

  std::ostringstream enumerated;
  write_results_csv(enumerated, records, std::nullopt);
  CHECK(enumerated.str() ==
        "game,eval,depth,rule_a,rule_b,n_boards,critical_pairs,a_pair_wins,"
        "win_pct,p_value,master_seed\n"
        "p,e1,1,product,minimax,1600,0,0,,,\n"
        "p,e1,2,product,minimax,1600,472,231,48.9,6.8e-01,\n");
}

TEST_CASE("markdown tables: one table per matchup, rows marked by depth") {
  std::vector<ContestRecord> records = {make_record(1, 0, 0),
                                        make_record(2, 472, 231),
                                        make_record(9, 0, 0)};
  ContestRecord other = make_record(2, 240, 140);
  other.rule_a = BackupRule::Average;
  other.rule_b = BackupRule::Product;
  records.push_back(other);

  const std::string md = render_markdown_tables(records);
  CHECK(md.find("product (A) vs minimax (B), 1600 board pairs") !=
        std::string::npos);
  CHECK(md.find("average (A) vs product (B), 1600 board pairs") !=
        std::string::npos);
  CHECK(md.find("| 1* | 0 | 0 | - | - |") != std::string::npos);
  CHECK(md.find("| 2 | 472 | 231 | 48.9 | 6.8e-01 |") != std::string::npos);
  CHECK(md.find("| 9** | 0 | 0 | - | - |") != std::string::npos);
  CHECK(md.find("| 2 | 240 | 140 | 58.3 | 1.2e-02 |") != std::string::npos);
  // Footnotes appear once each, at the end.
  CHECK(md.find("depth 1") != std::string::npos);
  CHECK(md.find("play perfectly") != std::string::npos);

  CHECK(render_markdown_tables(records) == md);  // bytewise repeatable
}

TEST_CASE("markdown marks both footnotes on a one-move game's depth-1 row") {
  ContestRecord r = make_record(1, 0, 0);
  r.game_moves = 2;
  const std::string md = render_markdown_tables({&r, 1});
  CHECK(md.find("| 1***") != std::string::npos);
}
