// Copyright 2026 The rwc Authors.
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

// Seeded generators for regular expressions, series and rules over small
// alphabets, used by property tests, the acceptance suite and rwc check.

#ifndef RWC_RANDOM_RULES_H_
#define RWC_RANDOM_RULES_H_

#include <cstdint>
#include <random>

#include "rwc/expr.h"
#include "rwc/label.h"
#include "rwc/rulespec.h"

namespace rwc {

using Rng = std::mt19937_64;

// Alphabet of the first n letters a, b, c, ...
Alphabet LetterAlphabet(int n);

// Random expression of depth <= max_depth. Series replace symbols by
// weighted atoms with probability one half; with `finite` they use no
// closures.
Expr RandomRegex(Rng &rng, const Alphabet &alphabet, int max_depth);
Expr RandomSeries(Rng &rng, const Alphabet &alphabet, int max_depth,
                  bool finite);

struct RandomRuleOptions {
  int max_depth = 2;
  bool weighted = true;
  // Contexts are left empty with this probability.
  double empty_context = 0.3;
  // Upper bound on the number of distinct psi strings; 0 for none.
  int max_psi_strings = 2;
};

// Draws until the rule passes ValidateRule.
Rule RandomRule(Rng &rng, const Alphabet &alphabet,
                const RandomRuleOptions &options = {});

// Seed from RWC_SEED when set, else `fallback`.
uint64_t SeedFromEnv(uint64_t fallback);

}  // namespace rwc

#endif  // RWC_RANDOM_RULES_H_
