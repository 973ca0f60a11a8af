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
// Vector-backed acceptors and transducers over the tropical semiring.
// Machines are built with the mutators below and then treated as values:
// every algorithm in this library returns a fresh machine.

#ifndef RWC_FST_H_
#define RWC_FST_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rwc/label.h"
#include "rwc/weight.h"

namespace rwc {

using StateId = int32_t;
inline constexpr StateId kNoStateId = -1;

struct AcceptorArc {
  Label label;
  Weight weight;
  StateId nextstate = kNoStateId;

  Label ilabel() const { return label; }
  Label olabel() const { return label; }
  bool IsEpsilon() const { return label.IsEpsilon(); }

  friend bool operator==(const AcceptorArc &, const AcceptorArc &) = default;
};

struct TransducerArc {
  Label in;
  Label out;
  Weight weight;
  StateId nextstate = kNoStateId;

  TransducerArc() = default;
  TransducerArc(Label i, Label o, Weight w, StateId next)
      : in(i), out(o), weight(w), nextstate(next) {}

  Label ilabel() const { return in; }
  Label olabel() const { return out; }
  bool IsEpsilon() const { return in.IsEpsilon() && out.IsEpsilon(); }

  friend bool operator==(const TransducerArc &, const TransducerArc &) =
      default;
};

template <class A>
class Fst {
 public:
  using Arc = A;

  StateId AddState() {
    states_.emplace_back();
    return static_cast<StateId>(states_.size() - 1);
  }
  void ReserveStates(size_t n) { states_.reserve(n); }

  void SetStart(StateId s) { start_ = s; }
  void SetFinal(StateId s, Weight w = Weight::One()) { states_[s].final = w; }
  void AddArc(StateId s, const Arc &arc) { states_[s].arcs.push_back(arc); }
  std::vector<Arc> &MutableArcs(StateId s) { return states_[s].arcs; }

  StateId Start() const { return start_; }
  Weight Final(StateId s) const { return states_[s].final; }
  bool IsFinal(StateId s) const { return !states_[s].final.IsZero(); }
  std::span<const Arc> Arcs(StateId s) const { return states_[s].arcs; }
  size_t NumArcs(StateId s) const { return states_[s].arcs.size(); }

  size_t NumStates() const { return states_.size(); }
  size_t NumArcs() const {
    size_t n = 0;
    for (const auto &st : states_) n += st.arcs.size();
    return n;
  }

  // True if any arc or final weight differs from One().
  bool IsWeighted() const {
    for (const auto &st : states_) {
      if (!st.final.IsZero() && !st.final.IsOne()) return true;
      for (const auto &a : st.arcs) {
        if (!a.weight.IsOne()) return true;
      }
    }
    return false;
  }

  bool HasEpsilons() const {
    for (const auto &st : states_) {
      for (const auto &a : st.arcs) {
        if (a.IsEpsilon()) return true;
      }
    }
    return false;
  }

 private:
  struct State {
    Weight final = Weight::Zero();
    std::vector<Arc> arcs;
  };
  std::vector<State> states_;
  StateId start_ = kNoStateId;
};

using Automaton = Fst<AcceptorArc>;
using Transducer = Fst<TransducerArc>;

}  // namespace rwc

#endif  // RWC_FST_H_
