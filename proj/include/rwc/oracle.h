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

// Ground truth for rule semantics: a direct string rewriter, transducer
// application, and exhaustive equivalence sweeps over short strings.

#ifndef RWC_ORACLE_H_
#define RWC_ORACLE_H_

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rwc/fst.h"
#include "rwc/label.h"
#include "rwc/rulespec.h"

namespace rwc {

// Output string -> minimal weight. No entry is Weight::Zero().
using WeightedStringSet = std::map<LabelString, Weight>;

inline constexpr size_t kDefaultEnumerationBound = 1000;

// Obligatory left-to-right rewriting by direct simulation. At each input
// position the phi matches followed by a rho match on the raw input are
// collected; if there is one and the output so far ends with a lambda
// match, every branch replaces (one branch per match length and psi
// string), otherwise one symbol is copied.
class RuleOracle {
 public:
  // Throws E_DIVERGENT if psi denotes more than `bound` strings.
  RuleOracle(const Rule &rule, const Alphabet &alphabet,
             size_t bound = kDefaultEnumerationBound);
  ~RuleOracle();
  RuleOracle(RuleOracle &&) noexcept;
  RuleOracle &operator=(RuleOracle &&) noexcept;

  WeightedStringSet Rewrite(std::span<const Label> input) const;

  // The psi strings with their series values.
  const WeightedStringSet &PsiStrings() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

WeightedStringSet OracleRewrite(const Rule &rule, const Alphabet &alphabet,
                                std::span<const Label> input,
                                size_t bound = kDefaultEnumerationBound);

// Applies the rules in order, feeding every output of one rule to the next
// and adding weights.
class RulesetOracle {
 public:
  explicit RulesetOracle(const RuleSet &rules,
                         size_t bound = kDefaultEnumerationBound);
  WeightedStringSet Rewrite(std::span<const Label> input) const;

 private:
  std::vector<RuleOracle> oracles_;
};

struct ApplyResult {
  WeightedStringSet outputs;
  // More than `bound` outputs exist; only the `bound` cheapest are kept.
  bool truncated = false;
};

// Composes the input string with t, projects on the output side, removes
// epsilons and enumerates output strings cheapest first.
ApplyResult Apply(const Transducer &t, std::span<const Label> input,
                  size_t bound = kDefaultEnumerationBound);

// Runs a transducer on inputs symbol by symbol so that sweeps over all
// strings share the work on common prefixes.
class TransducerRunner {
 public:
  struct Config {
    StateId state;
    LabelString output;
    Weight weight;
  };
  using Configs = std::vector<Config>;

  explicit TransducerRunner(const Transducer &t, size_t max_configs = 200000);

  Configs Start() const;
  Configs Step(const Configs &configs, Label symbol) const;
  WeightedStringSet Outputs(const Configs &configs) const;
  WeightedStringSet Run(std::span<const Label> input) const;

  // Set once some closure was cut at max_configs.
  bool truncated() const { return truncated_; }

 private:
  Configs Closure(std::vector<Config> seed) const;

  const Transducer &t_;
  size_t max_configs_;
  // Per state, arcs sorted by input label.
  std::vector<std::vector<TransducerArc>> arcs_;
  mutable bool truncated_ = false;
};

bool SameWeightedSets(const WeightedStringSet &a, const WeightedStringSet &b,
                      double delta = kWeightDelta);

std::string FormatWeightedSet(const WeightedStringSet &set,
                              const Alphabet &alphabet);

struct Counterexample {
  LabelString input;
  WeightedStringSet left;
  WeightedStringSet right;
};

struct EquivalenceReport {
  bool equivalent = true;
  size_t strings_checked = 0;
  size_t mismatches = 0;
  bool truncated = false;
  std::vector<Counterexample> counterexamples;  // the first 10

  std::string Describe(const Alphabet &alphabet) const;
};

using Reference = std::function<WeightedStringSet(std::span<const Label>)>;

// Every string over the alphabet of length <= max_len.
EquivalenceReport EquivalentOn(const Transducer &t1, const Transducer &t2,
                               const Alphabet &alphabet, int max_len);
EquivalenceReport EquivalentOn(const Transducer &t, const Reference &reference,
                               const Alphabet &alphabet, int max_len);

// Calls visit for every string over `symbols` of length <= max_len, in
// depth-first order.
void ForEachString(std::span<const Label> symbols, int max_len,
                   const std::function<void(const LabelString &)> &visit);

}  // namespace rwc

#endif  // RWC_ORACLE_H_
