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

#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

namespace proplab {

std::string format_win_pct(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", pct);
  return buf;
}

std::string format_p_value(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", p);
  return buf;
}

void write_results_csv(std::ostream& out, std::span<const ContestRecord> records,
                       std::optional<std::uint64_t> master_seed) {
  out << "game,eval,depth,rule_a,rule_b,n_boards,critical_pairs,a_pair_wins,"
         "win_pct,p_value,master_seed\n";
  for (const ContestRecord& r : records) {
    out << to_cstring(r.game) << ',' << r.eval << ',' << r.depth << ','
        << to_cstring(r.rule_a) << ',' << to_cstring(r.rule_b) << ','
        << r.n_boards << ',' << r.critical_pairs << ',' << r.a_pair_wins << ',';
    if (const auto rep = significance_report(r)) {
      out << format_win_pct(rep->win_pct) << ',' << format_p_value(rep->p_value);
    } else {
      out << ',';
    }
    out << ',';
    if (master_seed) out << *master_seed;
    out << '\n';
  }
}

namespace {

// Matchups keep their first-appearance order so rendered output lines up
// with the run that produced it.
struct Group {
  const ContestRecord* first;
  std::vector<const ContestRecord*> rows;
};

bool same_group(const ContestRecord& a, const ContestRecord& b) {
  return a.game == b.game && a.eval == b.eval && a.rule_a == b.rule_a &&
         a.rule_b == b.rule_b && a.n_boards == b.n_boards;
}

}  // namespace

std::string render_markdown_tables(std::span<const ContestRecord> records) {
  std::vector<Group> groups;
  for (const ContestRecord& r : records) {
    Group* g = nullptr;
    for (Group& cand : groups) {
      if (same_group(*cand.first, r)) {
        g = &cand;
        break;
      }
    }
    if (g == nullptr) {
      groups.push_back(Group{&r, {}});
      g = &groups.back();
    }
    g->rows.push_back(&r);
  }

  std::ostringstream out;
  bool starred = false;
  bool double_starred = false;
  for (const Group& g : groups) {
    const ContestRecord& head = *g.first;
    out << "### " << to_cstring(head.game) << "-game, " << head.eval << ": "
        << to_cstring(head.rule_a) << " (A) vs " << to_cstring(head.rule_b)
        << " (B), " << head.n_boards << " board pairs\n\n";
    out << "| depth | critical pairs | A pair wins | A win % | significance |\n";
    out << "|------:|---------------:|------------:|--------:|-------------:|\n";
    for (const ContestRecord* r : g.rows) {
      std::string marks;
      if (r->depth == 1) {
        marks += "*";
        starred = true;
      }
      if (r->depth >= r->game_moves - 1) {
        marks += "**";
        double_starred = true;
      }
      out << "| " << r->depth << marks << " | " << r->critical_pairs << " | "
          << r->a_pair_wins << " | ";
      if (const auto rep = significance_report(*r)) {
        out << format_win_pct(rep->win_pct) << " | "
            << format_p_value(rep->p_value) << " |\n";
      } else {
        out << "- | - |\n";
      }
    }
    out << '\n';
  }
  if (starred) {
    out << "\\* depth 1: every rule backs a single level up, so both "
           "configurations choose identical moves and no pair is critical.\n";
  }
  if (double_starred) {
    out << "\\*\\* lookahead reaches the end of the game: both configurations "
           "play perfectly, so critical pairs cannot occur.\n";
  }
  return out.str();
}

}  // namespace proplab
