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

#include <iosfwd>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "proplab/position.hpp"

namespace proplab {

// Static evaluators. Each estimates the probability that Max wins a
// non-terminal position from its visible features alone, with values in
// [0, 1]; search backs these estimates up from the lookahead frontier.
//
//   E1    ones-fraction oriented to whoever will make the last move.
//   E2    exact forced-win probability of a random P-segment with the
//         position's (moves_remaining, ones), from a precomputed table.
//   E3    empirical G-game analogue of E2, tabulated by exhausting all
//         G-boards of each length.
//   Exact the game-theoretic value {0, 1} itself, for perfect-play baselines.
enum class EvalKind { E1, E2, E3, Exact };

constexpr const char* to_cstring(EvalKind k) {
  switch (k) {
    case EvalKind::E1: return "e1";
    case EvalKind::E2: return "e2";
    case EvalKind::E3: return "e3";
    default: return "exact";
  }
}

std::optional<EvalKind> parse_eval_kind(std::string_view s);

// Mover-relative forced-win probabilities keyed by (moves_remaining, ones):
// row m covers segments on which m moves remain, one entry per possible
// count of 1-squares. Entries are probabilities that the side to move wins.
class FeatureWinTable {
 public:
  // rows[m] is the row for moves_remaining = m; rows[0] is ignored. Each
  // row must be non-empty for m >= 1 and all entries in [0, 1].
  explicit FeatureWinTable(std::vector<std::vector<double>> rows);

  int max_moves() const { return static_cast<int>(rows_.size()) - 1; }

  bool contains(int moves_remaining, int ones) const;

  // Throws std::out_of_range on an entry the table does not cover; a miss
  // means the table was built for a shallower game than the one searched.
  double at(int moves_remaining, int ones) const;

  // CSV dump: "moves_remaining,ones,win_prob" header, rows in ascending
  // (moves_remaining, ones) order, probabilities with 12 significant digits.
  void write_csv(std::ostream& out) const;

 private:
  std::vector<std::vector<double>> rows_;
};

// Exact P-segment table up to max_moves: W(1, w) = [w >= 1], and a segment
// of 2^m squares with w ones is won by its mover unless both halves are
// wins for the opponent, averaged over the hypergeometric split of the w
// ones across the halves. Row m has 2^m + 1 entries.
FeatureWinTable build_e2_table(int max_moves);

// Empirical G table up to max_moves: row m averages mover_wins over all
// boards of m + 1 squares, grouped by ones count. Row m has m + 2 entries.
FeatureWinTable build_e3_table(int max_moves);

// The evaluators themselves. All require a non-terminal position; table
// forms also require the matching game family (split for e2, G for e3)
// and throw std::logic_error on a mismatch.
double eval_e1(const Position& p);
double eval_e2(const Position& p, const FeatureWinTable& table);
double eval_e3(const Position& p, const FeatureWinTable& table);
double eval_exact(const Position& p);

// A cheap-to-copy handle bundling an EvalKind with its table (if any), so
// player configurations can share one table across threads and contests.
class Evaluator {
 public:
  static Evaluator e1();
  static Evaluator e2(int max_moves);
  static Evaluator e3(int max_moves);
  static Evaluator exact();

  EvalKind kind() const { return kind_; }

  // Non-null exactly for the table-backed kinds (E2, E3).
  const FeatureWinTable* table() const { return table_.get(); }

  double operator()(const Position& p) const;

 private:
  Evaluator(EvalKind kind, std::shared_ptr<const FeatureWinTable> table)
      : kind_(kind), table_(std::move(table)) {}

  EvalKind kind_;
  std::shared_ptr<const FeatureWinTable> table_;
};

}  // namespace proplab
