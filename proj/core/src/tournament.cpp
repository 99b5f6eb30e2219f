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

#include "proplab/tournament.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "proplab/stats.hpp"

namespace proplab {

PlayerId play_game(const Board& board, PlayerId first,
                   const PlayerConfig& cfg_a, const PlayerConfig& cfg_b) {
  const bool a_is_max = first == PlayerId::A;
  const PlayerConfig* max_cfg = a_is_max ? &cfg_a : &cfg_b;
  const PlayerConfig* min_cfg = a_is_max ? &cfg_b : &cfg_a;
  Position p = initial_position(board, Side::Max);
  while (!p.is_terminal()) {
    const PlayerConfig& cfg = p.mover == Side::Max ? *max_cfg : *min_cfg;
    p = apply_move(p, choose_move(p, cfg));
  }
  const bool max_won = terminal_value_for_max(p) == 1;
  return max_won == a_is_max ? PlayerId::A : PlayerId::B;
}

PairOutcome play_pair(const Board& board, const PlayerConfig& cfg_a,
                      const PlayerConfig& cfg_b) {
  const PlayerId w1 = play_game(board, PlayerId::A, cfg_a, cfg_b);
  const PlayerId w2 = play_game(board, PlayerId::B, cfg_a, cfg_b);
  if (w1 != w2) return PairOutcome::Split;
  return w1 == PlayerId::A ? PairOutcome::ASwept : PairOutcome::BSwept;
}

ContestRecord run_contest(std::span<const Board> boards, int depth,
                          BackupRule rule_a, BackupRule rule_b,
                          const Evaluator& eval, int workers) {
  if (boards.empty()) throw std::invalid_argument("run_contest: no boards");
  if (depth < 1) throw std::invalid_argument("run_contest: depth must be >= 1");
  if (workers < 0) throw std::invalid_argument("run_contest: workers < 0");
  const GameKind kind = boards[0].kind();
  const int moves = boards[0].moves();
  for (const Board& b : boards) {
    if (b.kind() != kind || b.moves() != moves) {
      throw std::invalid_argument("run_contest: mixed board batch");
    }
  }

  const PlayerConfig cfg_a{rule_a, eval, depth};
  const PlayerConfig cfg_b{rule_b, eval, depth};

  struct Tally {
    int critical = 0;
    int a_wins = 0;
  };
  auto tally_range = [&](size_t begin, size_t end, Tally& t) {
    for (size_t i = begin; i < end; ++i) {
      switch (play_pair(boards[i], cfg_a, cfg_b)) {
        case PairOutcome::ASwept:
          ++t.critical;
          ++t.a_wins;
          break;
        case PairOutcome::BSwept:
          ++t.critical;
          break;
        case PairOutcome::Split:
          break;
      }
    }
  };

  size_t n_workers = workers == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : static_cast<size_t>(workers);
  n_workers = std::min(n_workers, boards.size());

  std::vector<Tally> tallies(n_workers);
  if (n_workers == 1) {
    tally_range(0, boards.size(), tallies[0]);
  } else {
    // Integer tallies over disjoint chunks commute, so any split of the
    // batch reproduces the single-threaded counts bit for bit.
    std::vector<std::thread> threads;
    threads.reserve(n_workers);
    for (size_t w = 0; w < n_workers; ++w) {
      const size_t begin = boards.size() * w / n_workers;
      const size_t end = boards.size() * (w + 1) / n_workers;
      threads.emplace_back(tally_range, begin, end, std::ref(tallies[w]));
    }
    for (auto& t : threads) t.join();
  }

  ContestRecord rec;
  rec.game = kind;
  rec.eval = to_cstring(eval.kind());
  rec.game_moves = moves;
  rec.depth = depth;
  rec.rule_a = rule_a;
  rec.rule_b = rule_b;
  rec.n_boards = static_cast<int>(boards.size());
  for (const Tally& t : tallies) {
    rec.critical_pairs += t.critical;
    rec.a_pair_wins += t.a_wins;
  }
  return rec;
}

std::optional<SignificanceReport> significance_report(const ContestRecord& r) {
  if (r.critical_pairs == 0) return std::nullopt;
  SignificanceReport rep;
  rep.win_pct = 100.0 * r.a_pair_wins / r.critical_pairs;
  rep.p_value = binomial_two_sided_p(r.critical_pairs, r.a_pair_wins);
  return rep;
}

}  // namespace proplab
