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

namespace proplab {

// log(n choose k) via lgamma; exact enough that exp() of it round-trips
// small binomial coefficients to within 1 ulp. Requires 0 <= k <= n.
double log_choose(int n, int k);

// Exact two-sided equal-tail p-value for k successes out of n under
// Binomial(n, 1/2): the probability that a fair coin deviates from n/2 by
// at least |k - n/2| in either direction. Requires n >= 1, 0 <= k <= n.
// p = 1 when k is as close to n/2 as possible; p can underflow to 0 only
// beyond n ~ 2000 at the extremes, far outside tournament sizes.
double binomial_two_sided_p(int n, int k);

// Normal-approximation counterpart: 2 * Phi(-|k - n/2| / sqrt(n/4)).
// No continuity correction; kept as a cross-check of the exact tail, and
// the form classically used for hand-computed significance columns.
double normal_two_sided_p(int n, int k);

}  // namespace proplab
