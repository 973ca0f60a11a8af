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
// Elementary constructions over weighted acceptors and transducers.

#ifndef RWC_FSM_H_
#define RWC_FSM_H_

#include <span>
#include <utility>
#include <vector>

#include "rwc/expr.h"
#include "rwc/fst.h"
#include "rwc/label.h"

namespace rwc {

// Primitive acceptors.
Automaton EmptyAcceptor();  // no strings
Automaton EpsilonAcceptor();
Automaton StringAcceptor(std::span<const Label> labels);
// Accepts exactly the one-symbol strings over `labels`.
Automaton LabelSetAcceptor(std::span<const Label> labels);
// Single state, final, with a loop per label: labels*.
Automaton UniversalAcceptor(std::span<const Label> labels);

// Rational operations (Thompson-style; results may contain epsilons).
Automaton Concat(const Automaton &a, const Automaton &b);
Automaton Union(const Automaton &a, const Automaton &b);
Automaton Closure(const Automaton &a);      // a*
Automaton ClosurePlus(const Automaton &a);  // a+
Automaton Optional(const Automaton &a);     // a?

struct RegexOptions {
  // Resolve ">", "<1" and "<2" to the rule markers.
  bool allow_markers = false;
};

// Acceptor for a regular expression. kWeighted nodes contribute their weight
// on an entry arc, so the same routine builds series automata. Throws
// E_UNKNOWN_SYMBOL for names not in `alphabet`.
Automaton CompileRegex(const Expr &expr, const Alphabet &alphabet,
                       const RegexOptions &options = {});

// Identity relation on L(a), weights preserved.
Transducer IdTransducer(const Automaton &a);

// L(phi) x L(psi). Symbols are paired position by position and the shorter
// side is padded with epsilon at its end. The weight of a pair is the
// weight of the psi path. Throws E_EMPTY_LANGUAGE if either side is empty.
Transducer CrossProduct(const Automaton &phi, const Automaton &psi);

// Reversal through a fresh super-initial state with epsilon arcs to the old
// final states.
Automaton Reverse(const Automaton &a);
Transducer Reverse(const Transducer &t);

// Adds a weight-One self-loop (in, out) at every state.
Transducer AddLoops(const Transducer &t,
                    std::span<const std::pair<Label, Label>> pairs);
Automaton AddLoops(const Automaton &a, std::span<const Label> labels);

// Weighted epsilon removal (epsilon = both tapes epsilon for transducers).
Automaton RemoveEpsilon(const Automaton &a);
Transducer RemoveEpsilon(const Transducer &t);

// Keeps only accessible and co-accessible states; an empty machine becomes a
// single non-final start state. Surviving states keep their relative order.
Automaton Trim(const Automaton &a);
Transducer Trim(const Transducer &t);

// Weighted composition with a three-state epsilon filter. The result is
// trimmed.
Transducer Compose(const Transducer &t1, const Transducer &t2);

enum class ProjectType { kInput, kOutput };
Automaton Project(const Transducer &t, ProjectType side);
Transducer Invert(const Transducer &t);

// Min-plus value of `input` in `a` (Weight::Zero() if rejected).
Weight AcceptanceWeight(const Automaton &a, std::span<const Label> input);
bool Accepts(const Automaton &a, std::span<const Label> input);
bool AcceptsEmptyString(const Automaton &a);
bool IsEmptyLanguage(const Automaton &a);
bool IsEmptyRelation(const Transducer &t);

// Labels appearing on arcs (epsilon excluded), sorted.
std::vector<Label> ArcLabels(const Automaton &a);

}  // namespace rwc

#endif  // RWC_FSM_H_
