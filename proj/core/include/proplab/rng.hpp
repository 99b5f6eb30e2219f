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

namespace proplab {

// SplitMix64 output mixer. Used both as a bit mixer for seed derivation and,
// via derive_seed, to give every board its own decorrelated mt19937_64 seed.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-board seed from a master seed and the board's index in its batch.
// A pure function of (master_seed, index), so a batch of boards is identical
// no matter how the batch is split across threads or in what order boards
// are generated.
constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                    std::uint64_t index) {
  return splitmix64(master_seed ^ splitmix64(index));
}

// Maps a 64-bit draw to a double in [0, 1), using the top 53 bits. Identical
// across platforms, unlike std::uniform_real_distribution.
constexpr double to_unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace proplab
