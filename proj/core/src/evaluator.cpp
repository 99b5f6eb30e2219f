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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "proplab/solver.hpp"
#include "proplab/stats.hpp"

namespace proplab {

std::optional<EvalKind> parse_eval_kind(std::string_view s) {
  if (s == "e1") return EvalKind::E1;
  if (s == "e2") return EvalKind::E2;
  if (s == "e3") return EvalKind::E3;
  if (s == "exact") return EvalKind::Exact;
  return std::nullopt;
}

FeatureWinTable::FeatureWinTable(std::vector<std::vector<double>> rows)
    : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw std::invalid_argument("feature table needs a row for 1 move");
  }
  for (size_t m = 1; m < rows_.size(); ++m) {
    if (rows_[m].empty()) {
      throw std::invalid_argument("feature table has an empty row");
    }
    for (double v : rows_[m]) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("feature table entry outside [0, 1]");
      }
    }
  }
}

bool FeatureWinTable::contains(int moves_remaining, int ones) const {
  return moves_remaining >= 1 && moves_remaining <= max_moves() &&
         ones >= 0 &&
         ones < static_cast<int>(rows_[static_cast<size_t>(moves_remaining)].size());
}

double FeatureWinTable::at(int moves_remaining, int ones) const {
  if (!contains(moves_remaining, ones)) {
    throw std::out_of_range("feature table has no entry for moves_remaining=" +
                            std::to_string(moves_remaining) +
                            ", ones=" + std::to_string(ones));
  }
  return rows_[static_cast<size_t>(moves_remaining)][static_cast<size_t>(ones)];
}

void FeatureWinTable::write_csv(std::ostream& out) const {
  out << "moves_remaining,ones,win_prob\n";
  char buf[40];
  for (int m = 1; m <= max_moves(); ++m) {
    const auto& row = rows_[static_cast<size_t>(m)];
    for (size_t w = 0; w < row.size(); ++w) {
      std::snprintf(buf, sizeof buf, "%.12g", row[w]);
      out << m << ',' << w << ',' << buf << '\n';
    }
  }
}

FeatureWinTable build_e2_table(int max_moves) {
  if (max_moves < 1) throw std::invalid_argument("e2 table needs >= 1 move");
  if (max_moves > 30) throw std::invalid_argument("e2 table too large");
  std::vector<std::vector<double>> rows(static_cast<size_t>(max_moves) + 1);
  rows[1] = {0.0, 1.0, 1.0};  // last mover keeps a 1 iff there is one
  for (int m = 2; m <= max_moves; ++m) {
    const int s = 1 << m;
    const int half = s / 2;
    const auto& prev = rows[static_cast<size_t>(m - 1)];
    auto& row = rows[static_cast<size_t>(m)];
    row.resize(static_cast<size_t>(s) + 1);
    for (int w = 0; w <= s; ++w) {
      // j of the w ones land in the left half, hypergeometrically. The
      // mover loses only if both halves are forced wins for the opponent
      // moving on them; conditioned on j the halves are independent
      // uniformly-random segments.
      const double log_all = log_choose(s, w);
      double lose = 0.0;
      double weight_sum = 0.0;  // exactly 1 in theory; renormalize the
                                // lgamma round-off away
      const int j_lo = std::max(0, w - half);
      const int j_hi = std::min(w, half);
      for (int j = j_lo; j <= j_hi; ++j) {
        const double weight = std::exp(log_choose(half, j) +
                                       log_choose(half, w - j) - log_all);
        weight_sum += weight;
        lose += weight * prev[static_cast<size_t>(j)] *
                prev[static_cast<size_t>(w - j)];
      }
      row[static_cast<size_t>(w)] = std::clamp(1.0 - lose / weight_sum, 0.0, 1.0);
    }
  }
  return FeatureWinTable(std::move(rows));
}

FeatureWinTable build_e3_table(int max_moves) {
  if (max_moves < 1) throw std::invalid_argument("e3 table needs >= 1 move");
  if (max_moves > 20) throw std::invalid_argument("e3 table too large");
  std::vector<std::vector<double>> rows(static_cast<size_t>(max_moves) + 1);
  for (int m = 1; m <= max_moves; ++m) {
    const int len = m + 1;
    std::vector<long> wins(static_cast<size_t>(len) + 1, 0);
    std::vector<long> totals(static_cast<size_t>(len) + 1, 0);
    for (const Board& b : enumerate_g_boards(m)) {
      const int w = b.ones_in(0, len);
      wins[static_cast<size_t>(w)] += mover_wins(b, 0, len);
      totals[static_cast<size_t>(w)] += 1;
    }
    auto& row = rows[static_cast<size_t>(m)];
    row.resize(static_cast<size_t>(len) + 1);
    for (int w = 0; w <= len; ++w) {
      row[static_cast<size_t>(w)] =
          static_cast<double>(wins[static_cast<size_t>(w)]) /
          static_cast<double>(totals[static_cast<size_t>(w)]);
    }
  }
  return FeatureWinTable(std::move(rows));
}

namespace {

void require_non_terminal(const Position& p, const char* who) {
  if (p.is_terminal()) {
    throw std::logic_error(std::string(who) + " on a terminal position");
  }
}

// Tables are mover-relative; flip when Min is to move so the result is
// always Max's winning chance.
double for_max(const Position& p, double mover_win_prob) {
  return p.mover == Side::Max ? mover_win_prob : 1.0 - mover_win_prob;
}

}  // namespace

double eval_e1(const Position& p) {
  require_non_terminal(p, "eval_e1");
  const double f = static_cast<double>(p.ones()) / p.length();
  // With an odd number of moves left the current mover moves last; the
  // ones-fraction is that player's prospects, so orient it to Max.
  const Side last_mover =
      (p.moves_remaining % 2 == 1) ? p.mover : opponent(p.mover);
  return last_mover == Side::Max ? f : 1.0 - f;
}

double eval_e2(const Position& p, const FeatureWinTable& table) {
  require_non_terminal(p, "eval_e2");
  if (!is_split_game(p.kind())) {
    throw std::logic_error("eval_e2 needs a split-game position");
  }
  return for_max(p, table.at(p.moves_remaining, p.ones()));
}

double eval_e3(const Position& p, const FeatureWinTable& table) {
  require_non_terminal(p, "eval_e3");
  if (p.kind() != GameKind::G) {
    throw std::logic_error("eval_e3 needs a G-game position");
  }
  return for_max(p, table.at(p.moves_remaining, p.ones()));
}

double eval_exact(const Position& p) {
  return static_cast<double>(solve_exact(p));
}

Evaluator Evaluator::e1() { return Evaluator(EvalKind::E1, nullptr); }

Evaluator Evaluator::e2(int max_moves) {
  return Evaluator(EvalKind::E2,
                   std::make_shared<const FeatureWinTable>(build_e2_table(max_moves)));
}

Evaluator Evaluator::e3(int max_moves) {
  return Evaluator(EvalKind::E3,
                   std::make_shared<const FeatureWinTable>(build_e3_table(max_moves)));
}

Evaluator Evaluator::exact() { return Evaluator(EvalKind::Exact, nullptr); }

double Evaluator::operator()(const Position& p) const {
  switch (kind_) {
    case EvalKind::E1: return eval_e1(p);
    case EvalKind::E2: return eval_e2(p, *table_);
    case EvalKind::E3: return eval_e3(p, *table_);
    default: return eval_exact(p);
  }
}

}  // namespace proplab
