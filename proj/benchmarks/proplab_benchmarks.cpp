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

// Microbenchmarks for the hot paths of the laboratory: exact solving,
// depth-limited search, table construction, the binomial tail, and a
// small end-to-end contest.

#include <benchmark/benchmark.h>

#include <vector>

#include "proplab/board.hpp"
#include "proplab/evaluator.hpp"
#include "proplab/rng.hpp"
#include "proplab/search.hpp"
#include "proplab/solver.hpp"
#include "proplab/stats.hpp"
#include "proplab/tournament.hpp"

namespace {

using namespace proplab;

void BM_SolveSplitBoard(benchmark::State& state) {
  const Board b = generate_p_board(10, kCriticalOnesProb, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mover_wins(b, 0, b.size()));
  }
}
BENCHMARK(BM_SolveSplitBoard);

void BM_SolveGBoard(benchmark::State& state) {
  // Worst-case interval DP: the full 11-square row.
  const Board b = Board::parse(GameKind::G, "01101001011");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mover_wins(b, 0, b.size()));
  }
}
BENCHMARK(BM_SolveGBoard);

void BM_SearchValue(benchmark::State& state) {
  const Board b = generate_p_board(10, kCriticalOnesProb, 11);
  const PlayerConfig cfg{BackupRule::Product, Evaluator::e1(),
                         static_cast<int>(state.range(0))};
  const Position p = initial_position(b, Side::Max);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_value(p, cfg));
  }
}
BENCHMARK(BM_SearchValue)->Arg(2)->Arg(5)->Arg(8);

void BM_BuildE2Table(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_e2_table(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_BuildE2Table)->Arg(5)->Arg(10);

void BM_BinomialTwoSidedP(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial_two_sided_p(1600, 900));
  }
}
BENCHMARK(BM_BinomialTwoSidedP);

void BM_Contest(benchmark::State& state) {
  std::vector<Board> boards;
  for (int i = 0; i < 32; ++i) {
    boards.push_back(generate_p_board(8, kCriticalOnesProb, derive_seed(3, i)));
  }
  const Evaluator eval = Evaluator::e1();
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_contest(boards, 4, BackupRule::Product,
                                         BackupRule::Minimax, eval,
                                         /*workers=*/1));
  }
}
BENCHMARK(BM_Contest);

}  // namespace

BENCHMARK_MAIN();
