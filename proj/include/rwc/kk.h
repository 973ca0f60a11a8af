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

// Bracket-based baseline compiler for unweighted obligatory left-to-right
// rules:
//
//   Prologue o Id(Obligatory) o Id(Rightcontext) o Replace
//            o Id(Leftcontext) o Prologue^-1
//
// Prologue inserts the six brackets <a <i <c >a >i >c anywhere. Right
// brackets mark the input positions where rho begins (>a closes an applied
// phi, >c lies inside one, >i elsewhere); left brackets mark the output
// positions where lambda ends (<a opens an application, <c lies inside a
// replacement, <i elsewhere). Obligatory forbids <i before a phi that is
// followed by a right bracket. The placeholder 0 stands for an empty
// replacement and is erased with the brackets.

#ifndef RWC_KK_H_
#define RWC_KK_H_

#include <cstddef>

#include "rwc/fst.h"
#include "rwc/label.h"
#include "rwc/rulespec.h"

namespace rwc {

struct KkOptions {
  bool compact = true;
};

// Throws E_BAD_SPEC for a weighted psi, E_PHI_NULLABLE for a nullable phi,
// and E_TIMEOUT once a ScopedDeadline on this thread has passed.
Transducer KkCompileRule(const Rule &rule, const Alphabet &alphabet,
                         const KkOptions &options = {});

// Left fold of composition over the rules; identity for an empty list.
Transducer KkCompileRuleset(const RuleSet &rules,
                            const KkOptions &options = {});

struct KkProbe {
  size_t nfa_arcs = 0;
  size_t dfa_arcs = 0;
};

// Builds the nondeterministic automaton of the right intersectand of
// Rightcontext and determinizes it without minimization.
KkProbe KkRightContextProbe(const Expr &rho, const Alphabet &alphabet);

}  // namespace rwc

#endif  // RWC_KK_H_
