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

#include <optional>
#include <string_view>

namespace proplab {

// The two sides of a game. All position values and evaluator outputs in this
// library are expressed as (estimated) probabilities that Max wins; Min's
// perspective is always 1 - v.
enum class Side { Max, Min };

constexpr Side opponent(Side s) {
  return s == Side::Max ? Side::Min : Side::Max;
}

constexpr const char* to_cstring(Side s) {
  return s == Side::Max ? "max" : "min";
}

inline std::optional<Side> parse_side(std::string_view s) {
  if (s == "max") return Side::Max;
  if (s == "min") return Side::Min;
  return std::nullopt;
}

}  // namespace proplab
