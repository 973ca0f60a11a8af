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
//
// Rule files:
//
//   alphabet: a b c d ;
//   a -> b / c _ d ;             # a becomes b between c and d
//   N -> <0.105> m + <2.303> n / _ [b m p] ;
//
// Juxtaposition is concatenation, `+` (or `|`) is union, and `*`, `+`, `?`
// written directly after an atom are postfix closures. `0` is the empty
// string, `[x y]` a symbol class and `[^x y]` its complement over the
// alphabet. In the replacement, `<w>` prefixes an atom with a weight.

#ifndef RWC_RULESPEC_H_
#define RWC_RULESPEC_H_

#include <string>
#include <string_view>
#include <vector>

#include "rwc/expr.h"
#include "rwc/fst.h"
#include "rwc/label.h"

namespace rwc {

// phi -> psi / lambda _ rho, obligatory, applied left to right.
struct Rule {
  Expr phi;
  Expr psi;
  Expr lambda;
  Expr rho;
  int line = 0;  // 1-based source line, 0 if built in code
};

struct RuleSet {
  Alphabet alphabet;
  std::vector<Rule> rules;  // application order
};

// Throws E_SYNTAX (with line:column), E_UNKNOWN_SYMBOL, E_NEGATIVE_WEIGHT,
// E_PHI_NULLABLE or E_PSI_EMPTY.
RuleSet ParseRuleFile(std::string_view text);

Expr ParseRegex(std::string_view text, const Alphabet &alphabet);
Expr ParseSeries(std::string_view text, const Alphabet &alphabet);

// Checks the rule invariants: phi does not accept the empty string and psi
// denotes a non-empty language. Throws E_PHI_NULLABLE / E_PSI_EMPTY.
void ValidateRule(const Rule &rule, const Alphabet &alphabet);

std::string ToString(const Rule &rule);
std::string ToString(const RuleSet &rules);

// Weighted acceptor for a series: the value of a string is the minimum over
// accepting paths of the summed coefficients.
Automaton SeriesToWfsa(const Expr &series, const Alphabet &alphabet);

// Shortest accepting path weight; Weight::Zero() if not accepted.
Weight EvaluateSeries(const Automaton &wfsa, std::span<const Label> input);

}  // namespace rwc

#endif  // RWC_RULESPEC_H_
