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

#include "rwc/marker.h"

#include <string>

#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

void CheckSpec(const MarkerSpec &spec) {
  const bool ins = !spec.insertions.empty();
  const bool del = !spec.deletions.empty();
  bool ok = false;
  switch (spec.kind) {
    case MarkerKind::kType1:
      ok = ins != del;
      break;
    case MarkerKind::kType2:
    case MarkerKind::kType3:
      ok = !ins && spec.deletions.size() == 1;
      break;
  }
  if (!ok) throw Error(ErrorCode::kBadSpec, "invalid marker specification");
  for (Label l : spec.insertions) {
    if (l.IsEpsilon()) throw Error(ErrorCode::kBadSpec, "epsilon marker");
  }
  for (Label l : spec.deletions) {
    if (l.IsEpsilon()) throw Error(ErrorCode::kBadSpec, "epsilon marker");
  }
}

void CheckDeterministic(const Automaton &a) {
  // Dfa values are deterministic by construction; this guards the arcs of
  // machines certified elsewhere against later edits.
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    auto arcs = a.Arcs(s);
    for (size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].label.IsEpsilon() ||
          (i > 0 && arcs[i - 1].label == arcs[i].label)) {
        throw Error(ErrorCode::kNotDeterministic,
                    "state " + std::to_string(s));
      }
    }
  }
}

Transducer Type1(const Automaton &a, const MarkerSpec &spec) {
  const StateId n = static_cast<StateId>(a.NumStates());
  // Final state q keeps id q; its copy q' gets the next free id.
  std::vector<StateId> copy(n, kNoStateId);
  StateId next = n;
  for (StateId q = 0; q < n; ++q) {
    if (a.IsFinal(q)) copy[q] = next++;
  }
  Transducer t;
  t.ReserveStates(next);
  for (StateId q = 0; q < next; ++q) t.AddState();
  t.SetStart(a.Start());
  for (StateId q = 0; q < n; ++q) {
    const StateId body = a.IsFinal(q) ? copy[q] : q;
    t.SetFinal(body);
    for (const AcceptorArc &arc : a.Arcs(q)) {
      t.AddArc(body, TransducerArc(arc.label, arc.label, Weight::One(),
                                   arc.nextstate));
    }
    if (!a.IsFinal(q)) continue;
    for (Label m : spec.insertions) {
      t.AddArc(q, TransducerArc(Label::Epsilon(), m, Weight::One(), copy[q]));
    }
    for (Label m : spec.deletions) {
      t.AddArc(q, TransducerArc(m, Label::Epsilon(), Weight::One(), copy[q]));
    }
  }
  return t;
}

Transducer Filter(const Automaton &a, Label marker, bool at_final) {
  Transducer t;
  t.ReserveStates(a.NumStates());
  for (size_t q = 0; q < a.NumStates(); ++q) t.AddState();
  t.SetStart(a.Start());
  for (StateId q = 0; q < static_cast<StateId>(a.NumStates()); ++q) {
    t.SetFinal(q);
    for (const AcceptorArc &arc : a.Arcs(q)) {
      t.AddArc(q, TransducerArc(arc.label, arc.label, Weight::One(),
                                arc.nextstate));
    }
    if (a.IsFinal(q) == at_final) {
      t.AddArc(q, TransducerArc(marker, Label::Epsilon(), Weight::One(), q));
    }
  }
  return t;
}

}  // namespace

Transducer Marker(const Dfa &alpha, const MarkerSpec &spec,
                  std::span<const Label> alphabet) {
  CheckSpec(spec);
  CheckDeterministic(alpha.fsa());
  if (spec.kind == MarkerKind::kType3) {
    return Filter(Complete(alpha, alphabet).fsa(), spec.deletions[0], false);
  }
  if (!IsComplete(alpha, alphabet)) {
    throw Error(ErrorCode::kNotComplete,
                "marker input is not complete over the working alphabet");
  }
  if (spec.kind == MarkerKind::kType1) return Type1(alpha.fsa(), spec);
  return Filter(alpha.fsa(), spec.deletions[0], true);
}

Transducer Marker(const Automaton &alpha, const MarkerSpec &spec,
                  std::span<const Label> alphabet) {
  return Marker(Dfa::Certify(alpha), spec, alphabet);
}

}  // namespace rwc
