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

#include "proplab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace proplab {

double log_choose(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_choose: k out of range");
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial_two_sided_p(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("binomial_two_sided_p: bad (n, k)");
  }
  // Sum P(J = j) over all j at least as far from n/2 as k is. Comparing
  // |2j - n| to |2k - n| keeps everything in integers.
  const int dev = std::abs(2 * k - n);
  const double log_half_n = n * std::log(0.5);
  double p = 0.0;
  for (int j = 0; j <= n; ++j) {
    if (std::abs(2 * j - n) >= dev) {
      p += std::exp(log_choose(n, j) + log_half_n);
    }
  }
  return std::clamp(p, 0.0, 1.0);
}

double normal_two_sided_p(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw std::invalid_argument("normal_two_sided_p: bad (n, k)");
  }
  // z = |k - n/2| / sqrt(n/4); 2 * Phi(-z) = erfc(z / sqrt(2)).
  const double z = std::abs(2.0 * k - n) / std::sqrt(static_cast<double>(n));
  return std::erfc(z / std::sqrt(2.0));
}

}  // namespace proplab
