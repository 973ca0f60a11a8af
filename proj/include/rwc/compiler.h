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

// Compilation of obligatory left-to-right rules phi -> psi / lambda _ rho
// into weighted transducers as r o f o replace o l1 o l2:
//
//   r        inserts > before every occurrence of rho
//   f        inserts <1 or <2 before every phi followed by >
//   replace  rewrites each <1-marked phi span to psi, deletes >
//   l1       keeps <1 only after lambda, deletes it
//   l2       keeps <2 only where lambda does not end, deletes it
//
// rho is matched on the input side, lambda on the rewritten output.

#ifndef RWC_COMPILER_H_
#define RWC_COMPILER_H_

#include <cstdint>

#include "rwc/boolean.h"
#include "rwc/expr.h"
#include "rwc/fst.h"
#include "rwc/label.h"
#include "rwc/rulespec.h"

namespace rwc {

struct CompileOptions {
  // Run CompactTransducer on the result (and after each ruleset compose).
  bool compact = true;
};

struct CompileStats {
  size_t states = 0;
  size_t arcs = 0;
  double ms = 0.0;
  // Subset constructions spent building the five factors.
  uint64_t determinizations = 0;
};

struct CompiledRule {
  Transducer transducer;
  Rule source;
  CompileStats stats;
};

Transducer BuildR(const Expr &rho, const Alphabet &alphabet);
Transducer BuildF(const Expr &phi, const Alphabet &alphabet);
Transducer BuildReplace(const Expr &phi, const Automaton &psi_wfsa,
                        const Alphabet &alphabet);

// Complete deterministic automaton for Sigma* lambda, shared by l1 and l2.
Dfa LambdaDfa(const Expr &lambda, const Alphabet &alphabet);
Transducer BuildL1(const Dfa &lambda_dfa, const Alphabet &alphabet);
Transducer BuildL2(const Dfa &lambda_dfa, const Alphabet &alphabet);
Transducer BuildL1(const Expr &lambda, const Alphabet &alphabet);
Transducer BuildL2(const Expr &lambda, const Alphabet &alphabet);

// Throws E_PHI_NULLABLE / E_PSI_EMPTY for ill-formed rules.
CompiledRule CompileRule(const Rule &rule, const Alphabet &alphabet,
                         const CompileOptions &options = {});

// Left fold of composition over the rules in order; the identity over
// Sigma* for an empty list.
Transducer CompileRuleset(const RuleSet &rules,
                          const CompileOptions &options = {});

// True if some arc carries one of the rule markers > <1 <2.
bool HasMarkerLabels(const Transducer &t);

}  // namespace rwc

#endif  // RWC_COMPILER_H_
