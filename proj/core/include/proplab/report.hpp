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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "proplab/tournament.hpp"

namespace proplab {

// "48.9" — win percentages round to one decimal everywhere results surface,
// so published numbers can be compared digit for digit.
std::string format_win_pct(double pct);

// "6.5e-03" — tail probabilities with two significant digits.
std::string format_p_value(double p);

// One row per record:
//   game,eval,depth,rule_a,rule_b,n_boards,critical_pairs,a_pair_wins,
//   win_pct,p_value,master_seed
// win_pct and p_value are empty when a record has no critical pairs;
// master_seed is empty when the batch was enumerated rather than sampled.
// No timestamps or environment data: rerunning a study must produce a
// byte-identical file.
void write_results_csv(std::ostream& out, std::span<const ContestRecord> records,
                       std::optional<std::uint64_t> master_seed);

// Human-oriented companion to the CSV: one markdown table per matchup with
// a row per depth. Rows where the pairing cannot distinguish the players
// are marked: '*' when depth = 1 (both rules pick the same moves there) and
// '**' when the lookahead reaches the end of the game and play is perfect.
std::string render_markdown_tables(std::span<const ContestRecord> records);

}  // namespace proplab
