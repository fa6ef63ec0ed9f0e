// Copyright 2026 The Authors.
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

// Election constructions with known winner sets, profile algebra and a
// seeded random culture.

#ifndef CSR_FIXTURES_H_
#define CSR_FIXTURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "csr/model.h"

namespace csr {

// Largest roster supported by the zeta constructions.
inline constexpr int kMaxZetaCandidates = 8;

// Tokens "a", "b", ... ("c26", "c27", ... beyond 26).
std::vector<std::string> DefaultRoster(int m);

// zeta(c): (m-1)! unit votes ranking c first followed by every permutation
// of the other candidates. Throws Error(kResource) for m > 8 and
// Error(kInput) for m < 2 or an unknown candidate.
Election ZetaCandidate(const std::vector<std::string>& roster,
                       const std::string& center);

// zeta(S) = sum of zeta(c) over c in S (S nonempty).
Election ZetaSet(const std::vector<std::string>& roster,
                 const std::vector<std::string>& members);

// zeta(W1 u W2) + zeta(W1 n W2) for |W1| = |W2| = k and |W1 n W2| = k - 1;
// for k = 1 the second part is empty. Throws Error(kInput) otherwise.
Election TwoWinnerElection(const std::vector<std::string>& roster,
                           const std::vector<std::string>& w1,
                           const std::vector<std::string>& w2);

// One unit vote per ranking, m! in total (m <= 8).
Election AllPermutations(const std::vector<std::string>& roster);

// Merged vote multiset. Throws Error(kInput) on a roster mismatch.
Election Concat(const Election& a, const Election& b);

// Every weight multiplied by lambda >= 1.
Election Scale(const Election& e, int64_t lambda);

// n >= 1 independent uniformly random unit rankings from a seeded 64-bit
// Mersenne twister; identical seeds give identical elections on every
// platform.
Election ImpartialCulture(const std::vector<std::string>& roster, int64_t n,
                          uint64_t seed);

}  // namespace csr

#endif  // CSR_FIXTURES_H_
