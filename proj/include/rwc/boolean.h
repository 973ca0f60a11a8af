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
// Unweighted automaton algorithms: subset construction, completion,
// complementation, product intersection, subtraction and minimization, plus
// transducer compaction through label encoding.

#ifndef RWC_BOOLEAN_H_
#define RWC_BOOLEAN_H_

#include <span>

#include "rwc/fst.h"
#include "rwc/label.h"

namespace rwc {

// An epsilon-free automaton with at most one arc per label at every state
// and every state accessible. Only the functions below produce one, except
// Certify() which checks an arbitrary automaton.
class Dfa {
 public:
  // Throws E_NOT_DETERMINISTIC.
  static Dfa Certify(Automaton a);

  const Automaton &fsa() const { return fsa_; }
  StateId Start() const { return fsa_.Start(); }
  size_t NumStates() const { return fsa_.NumStates(); }
  size_t NumArcs() const { return fsa_.NumArcs(); }

  // The unique successor of `s` on `l`, or kNoStateId.
  StateId Next(StateId s, Label l) const;

 private:
  explicit Dfa(Automaton a) : fsa_(std::move(a)) {}
  friend Dfa Determinize(const Automaton &a);
  friend Dfa Complete(const Dfa &d, std::span<const Label> alphabet);
  friend Dfa Complement(const Dfa &d, std::span<const Label> alphabet);
  friend Dfa Minimize(const Dfa &d);

  Automaton fsa_;
};

// Subset construction; states are numbered in breadth-first discovery order
// and arcs are sorted by label. Weights are ignored. No minimization.
// Increments ThreadOpCounters().determinizations.
Dfa Determinize(const Automaton &a);

// Every state has an arc for every label of `alphabet`.
bool IsComplete(const Dfa &d, std::span<const Label> alphabet);

// Adds a non-final sink if (and only if) some arc is missing.
Dfa Complete(const Dfa &d, std::span<const Label> alphabet);

// alphabet* minus L(d). `d` must only use labels of `alphabet`.
Dfa Complement(const Dfa &d, std::span<const Label> alphabet);

Automaton Intersect(const Automaton &a, const Automaton &b);

// L(a) minus L(b), as Intersect(a, Complement(Determinize(b))) over the
// labels of both machines.
Automaton Subtract(const Automaton &a, const Automaton &b);

// Minimal trimmed DFA for L(d), states in breadth-first order from start.
Dfa Minimize(const Dfa &d);

// Encodes each (in, out, weight) triple as one label, determinizes and
// minimizes the encoded acceptor, then decodes. The weighted relation is
// unchanged.
Transducer CompactTransducer(const Transducer &t);

}  // namespace rwc

#endif  // RWC_BOOLEAN_H_
