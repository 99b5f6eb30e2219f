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

// proplab: run backup-rule tournaments on board-splitting games and dump
// the supporting tables and statistics.
//
//   proplab tournament --game p --eval e1 --depths 2..8 --boards 1600
//   proplab tournament --game g --eval e3 --depths 1..10
//   proplab e2-table --moves 9
//   proplab e3-table --moves 9 --out e3.csv
//   proplab significance --pairs 472 --wins 231
//   proplab solve --game g --board 01101001011
//
// Every run is deterministic: sampled studies echo their master seed, and
// rerunning with the same flags reproduces output files byte for byte.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proplab/experiment.hpp"
#include "proplab/report.hpp"
#include "proplab/solver.hpp"
#include "proplab/stats.hpp"

namespace {

using namespace proplab;

// "4" or "2..8" -> [lo, hi].
std::pair<int, int> parse_depth_range(const std::string& s) {
  const size_t dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(s);
      return {d, d};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--depths", "expected D or LO..HI");
  }
}

GameKind game_from_flag(const std::string& s) {
  if (auto k = parse_game_kind(s)) return *k;
  throw CLI::ValidationError("--game", "expected p, n or g");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  return out;
}

struct TournamentArgs {
  std::string game = "p";
  std::string eval = "e1";
  std::string depths = "2..8";
  int boards = 1600;
  int moves = 10;
  double ones_prob = kCriticalOnesProb;
  std::uint64_t seed = 1;
  std::vector<std::string> matchups;
  int workers = 0;
  std::string out = "results.csv";
  std::string markdown;
};

int run_tournament_cmd(const TournamentArgs& args) {
  StudySpec spec;
  spec.game = game_from_flag(args.game);
  if (auto e = parse_eval_kind(args.eval)) {
    spec.eval = *e;
  } else {
    throw CLI::ValidationError("--eval", "expected e1, e2, e3 or exact");
  }
  std::tie(spec.depth_lo, spec.depth_hi) = parse_depth_range(args.depths);
  spec.n_boards = args.boards;
  spec.game_moves = args.moves;
  spec.ones_prob = args.ones_prob;
  spec.master_seed = args.seed;
  spec.workers = args.workers;
  for (const std::string& m : args.matchups) {
    const size_t colon = m.find(':');
    const auto a = colon == std::string::npos
                       ? std::nullopt
                       : parse_backup_rule(m.substr(0, colon));
    const auto b = colon == std::string::npos
                       ? std::nullopt
                       : parse_backup_rule(m.substr(colon + 1));
    if (!a || !b) {
      throw CLI::ValidationError("--matchup", "expected RULE:RULE with rules "
                                              "minimax, product or average");
    }
    spec.matchups.emplace_back(*a, *b);
  }

  const std::vector<ContestRecord> records = run_study(spec);

  const std::optional<std::uint64_t> seed_used =
      spec.sampled() ? std::optional<std::uint64_t>(spec.master_seed)
                     : std::nullopt;
  {
    auto out = open_out(args.out);
    write_results_csv(out, records, seed_used);
  }
  if (!args.markdown.empty()) {
    auto out = open_out(args.markdown);
    out << render_markdown_tables(records);
  }

  if (seed_used) {
    std::cout << "master seed: " << *seed_used << "\n";
  } else {
    std::cout << "boards enumerated exhaustively; no seed\n";
  }
  std::cout << "wrote " << args.out << "\n\n";
  std::cout << render_markdown_tables(records);
  return 0;
}

int run_table_cmd(EvalKind kind, int moves, const std::string& out_path) {
  const Evaluator ev =
      kind == EvalKind::E2 ? Evaluator::e2(moves) : Evaluator::e3(moves);
  if (out_path.empty()) {
    ev.table()->write_csv(std::cout);
  } else {
    auto out = open_out(out_path);
    ev.table()->write_csv(out);
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

int run_significance_cmd(int pairs, int wins) {
  if (pairs == 0) {
    std::cout << "no critical pairs; win percentage and significance are "
                 "undefined\n";
    return 0;
  }
  std::cout << "critical pairs:     " << pairs << "\n"
            << "a pair wins:        " << wins << "\n"
            << "a win %:            "
            << format_win_pct(100.0 * wins / pairs) << "\n"
            << "exact two-sided p:  "
            << format_p_value(binomial_two_sided_p(pairs, wins)) << "\n"
            << "normal approx p:    "
            << format_p_value(normal_two_sided_p(pairs, wins)) << "\n";
  return 0;
}

int run_solve_cmd(const std::string& game, const std::string& board_str) {
  const Board board = Board::parse(game_from_flag(game), board_str);
  std::cout << "board: " << board.to_string() << " (" << to_cstring(board.kind())
            << "-game, " << board.moves() << " moves)\n";
  for (Side first : {Side::Max, Side::Min}) {
    const Position p = initial_position(board, first);
    std::cout << "first mover " << to_cstring(first)
              << ": value for max = " << solve_exact(p) << "\n";
  }
  std::cout << "the first mover " << (mover_wins(board, 0, board.size())
                                          ? "has a forced win\n"
                                          : "loses against perfect play\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Board-splitting game laboratory: compare minimax, product and "
               "average value backup under depth-limited search"};
  app.require_subcommand(1);

  TournamentArgs t;
  CLI::App* tournament =
      app.add_subcommand("tournament", "Run a round-robin backup-rule study");
  tournament->add_option("--game", t.game, "Game family: p, n or g");
  tournament->add_option("--eval", t.eval,
                         "Frontier evaluator: e1, e2, e3 or exact");
  tournament->add_option("--depths", t.depths, "Search depth D or range LO..HI");
  tournament->add_option("--boards", t.boards,
                         "Boards to sample (ignored for g: all are played)");
  tournament->add_option("--moves", t.moves, "Moves in a full game");
  tournament->add_option("--ones-prob", t.ones_prob,
                         "P-board density of 1-squares (default: critical)");
  tournament->add_option("--seed", t.seed, "Master seed for board sampling");
  tournament->add_option("--matchup", t.matchups,
                         "RULE:RULE, repeatable (default: full round-robin)");
  tournament->add_option("--workers", t.workers,
                         "Worker threads (0 = hardware concurrency)");
  tournament->add_option("--out", t.out, "Results CSV path");
  tournament->add_option("--markdown", t.markdown,
                         "Also render markdown tables to this path");

  int table_moves = 9;
  std::string table_out;
  CLI::App* e2t = app.add_subcommand(
      "e2-table", "Dump the exact random-P-segment win-probability table");
  e2t->add_option("--moves", table_moves, "Largest moves_remaining to tabulate");
  e2t->add_option("--out", table_out, "CSV path (default: stdout)");
  CLI::App* e3t = app.add_subcommand(
      "e3-table", "Dump the empirical G-segment win-probability table");
  e3t->add_option("--moves", table_moves, "Largest moves_remaining to tabulate");
  e3t->add_option("--out", table_out, "CSV path (default: stdout)");

  int sig_pairs = 0;
  int sig_wins = 0;
  CLI::App* sig = app.add_subcommand(
      "significance", "Two-sided fair-coin tail for a critical-pair tally");
  sig->add_option("--pairs", sig_pairs, "Critical pairs")->required();
  sig->add_option("--wins", sig_wins, "Pairs won by configuration A")
      ->required();

  std::string solve_game = "p";
  std::string solve_board;
  CLI::App* solve = app.add_subcommand(
      "solve", "Exact game value of a board, for either first mover");
  solve->add_option("--game", solve_game, "Game family: p, n or g");
  solve->add_option("--board", solve_board, "Squares, e.g. 1100")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (tournament->parsed()) return run_tournament_cmd(t);
    if (e2t->parsed()) return run_table_cmd(EvalKind::E2, table_moves, table_out);
    if (e3t->parsed()) return run_table_cmd(EvalKind::E3, table_moves, table_out);
    if (sig->parsed()) {
      if (sig_pairs < 0 || sig_wins < 0 || sig_wins > sig_pairs) {
        throw std::invalid_argument("need 0 <= wins <= pairs");
      }
      return run_significance_cmd(sig_pairs, sig_wins);
    }
    if (solve->parsed()) return run_solve_cmd(solve_game, solve_board);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
