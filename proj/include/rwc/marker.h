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

// Marker transducers built from a deterministic automaton alpha for a
// prefix language Sigma* beta.
//
//   Type1  identity, plus a marker emitted (or, with deletions, consumed)
//          right after every prefix in L(alpha).
//   Type2  filter: a marker may only follow a prefix in L(alpha); it is
//          deleted.
//   Type3  filter: a marker may only follow a prefix not in L(alpha); it is
//          deleted.

#ifndef RWC_MARKER_H_
#define RWC_MARKER_H_

#include <span>
#include <vector>

#include "rwc/boolean.h"
#include "rwc/fst.h"
#include "rwc/label.h"

namespace rwc {

enum class MarkerKind { kType1, kType2, kType3 };

struct MarkerSpec {
  MarkerKind kind = MarkerKind::kType1;
  std::vector<Label> insertions;
  std::vector<Label> deletions;
};

// `alphabet` is the working alphabet alpha reads. Type1 and Type2 require
// alpha to be complete over it (E_NOT_COMPLETE); Type3 completes alpha with
// a non-final sink. Throws E_BAD_SPEC for an ill-formed spec and
// E_NOT_DETERMINISTIC if alpha is not deterministic.
Transducer Marker(const Dfa &alpha, const MarkerSpec &spec,
                  std::span<const Label> alphabet);

// Convenience overload that certifies `alpha` first.
Transducer Marker(const Automaton &alpha, const MarkerSpec &spec,
                  std::span<const Label> alphabet);

}  // namespace rwc

#endif  // RWC_MARKER_H_
