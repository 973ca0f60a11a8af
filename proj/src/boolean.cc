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

#include "rwc/boolean.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/instrument.h"

namespace rwc {
namespace {

template <class T>
struct VectorHash {
  size_t operator()(const std::vector<T> &v) const {
    uint64_t h = 1469598103934665603ull;
    for (const T &x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

bool LabelsSorted(const Automaton &a, StateId s) {
  auto arcs = a.Arcs(s);
  for (size_t i = 1; i < arcs.size(); ++i) {
    if (!(arcs[i - 1].label < arcs[i].label)) return false;
  }
  return true;
}

}  // namespace

Dfa Dfa::Certify(Automaton a) {
  if (a.Start() == kNoStateId) {
    throw Error(ErrorCode::kNotDeterministic, "automaton has no start state");
  }
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    std::vector<Label> labels;
    for (const AcceptorArc &arc : a.Arcs(s)) {
      if (arc.label.IsEpsilon()) {
        throw Error(ErrorCode::kNotDeterministic, "epsilon transition");
      }
      labels.push_back(arc.label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      throw Error(ErrorCode::kNotDeterministic,
                  "two transitions share a label at state " +
                      std::to_string(s));
    }
  }
  // Accessibility: every state reachable from the start.
  std::vector<char> seen(a.NumStates(), 0);
  std::vector<StateId> stack{a.Start()};
  seen[a.Start()] = 1;
  size_t count = 1;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const AcceptorArc &arc : a.Arcs(s)) {
      if (!seen[arc.nextstate]) {
        seen[arc.nextstate] = 1;
        ++count;
        stack.push_back(arc.nextstate);
      }
    }
  }
  if (count != a.NumStates()) {
    throw Error(ErrorCode::kNotDeterministic, "inaccessible states");
  }
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    if (!LabelsSorted(a, s)) {
      auto &arcs = a.MutableArcs(s);
      std::sort(arcs.begin(), arcs.end(),
                [](const AcceptorArc &x, const AcceptorArc &y) {
                  return x.label < y.label;
                });
    }
  }
  return Dfa(std::move(a));
}

StateId Dfa::Next(StateId s, Label l) const {
  auto arcs = fsa_.Arcs(s);
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), l,
      [](const AcceptorArc &a, Label x) { return a.label < x; });
  if (it == arcs.end() || it->label != l) return kNoStateId;
  return it->nextstate;
}

Dfa Determinize(const Automaton &a) {
  ++ThreadOpCounters().determinizations;
  Automaton out;
  if (a.Start() == kNoStateId) {
    out.SetStart(out.AddState());
    return Dfa::Certify(std::move(out));
  }
  const size_t n = a.NumStates();
  std::vector<uint32_t> stamp(n, 0);
  uint32_t generation = 0;
  std::vector<StateId> stack;
  // Sorted epsilon closure of `set`, in place.
  auto close = [&](std::vector<StateId> *set) {
    ++generation;
    stack.clear();
    for (StateId s : *set) {
      if (stamp[s] != generation) {
        stamp[s] = generation;
        stack.push_back(s);
      }
    }
    set->clear();
    while (!stack.empty()) {
      const StateId s = stack.back();
      stack.pop_back();
      set->push_back(s);
      for (const AcceptorArc &arc : a.Arcs(s)) {
        if (arc.label.IsEpsilon() && stamp[arc.nextstate] != generation) {
          stamp[arc.nextstate] = generation;
          stack.push_back(arc.nextstate);
        }
      }
    }
    std::sort(set->begin(), set->end());
  };

  std::unordered_map<std::vector<StateId>, StateId, VectorHash<StateId>> ids;
  std::vector<const std::vector<StateId> *> queue;
  auto id_of = [&](std::vector<StateId> &&set) {
    auto [it, inserted] = ids.emplace(std::move(set), 0);
    if (inserted) {
      it->second = out.AddState();
      queue.push_back(&it->first);
    }
    return it->second;
  };
  std::vector<StateId> init{a.Start()};
  close(&init);
  out.SetStart(id_of(std::move(init)));

  std::vector<std::pair<Label, StateId>> moves;
  for (size_t head = 0; head < queue.size(); ++head) {
    CheckDeadline();
    const std::vector<StateId> &subset = *queue[head];
    const StateId src = static_cast<StateId>(head);
    moves.clear();
    for (StateId s : subset) {
      if (a.IsFinal(s)) out.SetFinal(src);
      for (const AcceptorArc &arc : a.Arcs(s)) {
        if (!arc.label.IsEpsilon()) moves.emplace_back(arc.label, arc.nextstate);
      }
    }
    std::sort(moves.begin(), moves.end());
    for (size_t i = 0; i < moves.size();) {
      const Label l = moves[i].first;
      std::vector<StateId> target;
      for (; i < moves.size() && moves[i].first == l; ++i) {
        if (target.empty() || target.back() != moves[i].second) {
          target.push_back(moves[i].second);
        }
      }
      close(&target);
      const StateId dst = id_of(std::move(target));
      out.AddArc(src, {l, Weight::One(), dst});
    }
  }
  return Dfa(std::move(out));
}

bool IsComplete(const Dfa &d, std::span<const Label> alphabet) {
  for (StateId s = 0; s < static_cast<StateId>(d.NumStates()); ++s) {
    for (Label l : alphabet) {
      if (d.Next(s, l) == kNoStateId) return false;
    }
  }
  return true;
}

Dfa Complete(const Dfa &d, std::span<const Label> alphabet) {
  if (IsComplete(d, alphabet)) return d;
  std::vector<Label> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Automaton &in = d.fsa();
  Automaton out;
  for (size_t s = 0; s < in.NumStates(); ++s) out.AddState();
  const StateId sink = out.AddState();
  out.SetStart(in.Start());
  for (StateId s = 0; s < static_cast<StateId>(in.NumStates()); ++s) {
    out.SetFinal(s, in.Final(s));
    auto arcs = in.Arcs(s);
    size_t j = 0;
    // Merge existing arcs with sink arcs, keeping label order.
    for (Label l : sorted) {
      while (j < arcs.size() && arcs[j].label < l) out.AddArc(s, arcs[j++]);
      if (j < arcs.size() && arcs[j].label == l) {
        out.AddArc(s, arcs[j++]);
      } else {
        out.AddArc(s, {l, Weight::One(), sink});
      }
    }
    while (j < arcs.size()) out.AddArc(s, arcs[j++]);
  }
  for (Label l : sorted) out.AddArc(sink, {l, Weight::One(), sink});
  return Dfa(std::move(out));
}

Dfa Complement(const Dfa &d, std::span<const Label> alphabet) {
  ++ThreadOpCounters().complements;
  std::vector<Label> sorted(alphabet.begin(), alphabet.end());
  std::sort(sorted.begin(), sorted.end());
  for (StateId s = 0; s < static_cast<StateId>(d.NumStates()); ++s) {
    for (const AcceptorArc &arc : d.fsa().Arcs(s)) {
      if (!std::binary_search(sorted.begin(), sorted.end(), arc.label)) {
        throw Error(ErrorCode::kBadSpec,
                    "complement: label outside the working alphabet");
      }
    }
  }
  Dfa c = Complete(d, alphabet);
  Automaton out = c.fsa();
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    out.SetFinal(s, out.IsFinal(s) ? Weight::Zero() : Weight::One());
  }
  return Dfa(std::move(out));
}

Automaton Intersect(const Automaton &a_in, const Automaton &b_in) {
  ++ThreadOpCounters().intersections;
  const Automaton a = a_in.HasEpsilons() ? RemoveEpsilon(a_in) : a_in;
  const Automaton b = b_in.HasEpsilons() ? RemoveEpsilon(b_in) : b_in;
  Automaton out;
  if (a.Start() == kNoStateId || b.Start() == kNoStateId) {
    out.SetStart(out.AddState());
    return out;
  }
  std::vector<std::vector<AcceptorArc>> sorted_b(b.NumStates());
  for (StateId s = 0; s < static_cast<StateId>(b.NumStates()); ++s) {
    auto arcs = b.Arcs(s);
    sorted_b[s].assign(arcs.begin(), arcs.end());
    std::sort(sorted_b[s].begin(), sorted_b[s].end(),
              [](const AcceptorArc &x, const AcceptorArc &y) {
                return x.label < y.label;
              });
  }
  std::unordered_map<uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> queue;
  auto id_of = [&](StateId p, StateId q) {
    const uint64_t key = (static_cast<uint64_t>(p) << 32) |
                         static_cast<uint32_t>(q);
    auto [it, inserted] = ids.emplace(key, 0);
    if (inserted) {
      it->second = out.AddState();
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  out.SetStart(id_of(a.Start(), b.Start()));
  for (size_t head = 0; head < queue.size(); ++head) {
    CheckDeadline();
    const auto [p, q] = queue[head];
    const StateId src = static_cast<StateId>(head);
    const Weight fin = Times(a.Final(p), b.Final(q));
    if (!fin.IsZero()) out.SetFinal(src, fin);
    const auto &bs = sorted_b[q];
    for (const AcceptorArc &x : a.Arcs(p)) {
      auto it = std::lower_bound(
          bs.begin(), bs.end(), x.label,
          [](const AcceptorArc &y, Label l) { return y.label < l; });
      for (; it != bs.end() && it->label == x.label; ++it) {
        out.AddArc(src, {x.label, Times(x.weight, it->weight),
                         id_of(x.nextstate, it->nextstate)});
      }
    }
  }
  return Trim(out);
}

Automaton Subtract(const Automaton &a, const Automaton &b) {
  std::vector<Label> alphabet = ArcLabels(a);
  for (Label l : ArcLabels(b)) alphabet.push_back(l);
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return Intersect(a, Complement(Determinize(b), alphabet).fsa());
}

Dfa Minimize(const Dfa &d) {
  const Automaton a = Trim(d.fsa());
  const StateId n = static_cast<StateId>(a.NumStates());
  std::vector<int32_t> cls(n);
  int32_t num_classes = 0;
  {
    bool has_final = false, has_nonfinal = false;
    for (StateId s = 0; s < n; ++s) {
      cls[s] = a.IsFinal(s) ? 1 : 0;
      (a.IsFinal(s) ? has_final : has_nonfinal) = true;
    }
    num_classes = (has_final ? 1 : 0) + (has_nonfinal ? 1 : 0);
  }
  // Moore refinement on (class, sorted (label, successor class)) signatures.
  std::vector<int64_t> sig;
  while (true) {
    CheckDeadline();
    std::unordered_map<std::vector<int64_t>, int32_t, VectorHash<int64_t>>
        index;
    std::vector<int32_t> next(n);
    for (StateId s = 0; s < n; ++s) {
      sig.clear();
      sig.push_back(cls[s]);
      for (const AcceptorArc &arc : a.Arcs(s)) {
        sig.push_back((static_cast<int64_t>(arc.label.value()) << 32) |
                      static_cast<uint32_t>(cls[arc.nextstate]));
      }
      std::sort(sig.begin() + 1, sig.end());
      auto [it, inserted] =
          index.emplace(sig, static_cast<int32_t>(index.size()));
      next[s] = it->second;
    }
    const int32_t count = static_cast<int32_t>(index.size());
    cls = std::move(next);
    if (count == num_classes) break;
    num_classes = count;
  }
  // Rebuild in breadth-first order from the start class.
  std::vector<StateId> rep(num_classes, kNoStateId);
  for (StateId s = 0; s < n; ++s) {
    if (rep[cls[s]] == kNoStateId) rep[cls[s]] = s;
  }
  std::vector<StateId> order(num_classes, kNoStateId);
  Automaton out;
  std::vector<int32_t> queue{cls[a.Start()]};
  order[cls[a.Start()]] = out.AddState();
  out.SetStart(0);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int32_t c = queue[head];
    const StateId s = rep[c];
    if (a.IsFinal(s)) out.SetFinal(order[c]);
    std::vector<AcceptorArc> arcs(a.Arcs(s).begin(), a.Arcs(s).end());
    std::sort(arcs.begin(), arcs.end(),
              [](const AcceptorArc &x, const AcceptorArc &y) {
                return x.label < y.label;
              });
    for (const AcceptorArc &arc : arcs) {
      const int32_t t = cls[arc.nextstate];
      if (order[t] == kNoStateId) {
        order[t] = out.AddState();
        queue.push_back(t);
      }
      out.AddArc(order[c], {arc.label, Weight::One(), order[t]});
    }
  }
  return Dfa(std::move(out));
}

Transducer CompactTransducer(const Transducer &t) {
  struct Code {
    Label in, out;
    Weight weight;
    bool final_marker;
  };
  std::map<std::tuple<int32_t, int32_t, double, bool>, int32_t> codes;
  std::vector<Code> table;
  auto encode = [&](Label in, Label out, Weight w, bool final_marker) {
    auto [it, inserted] = codes.emplace(
        std::make_tuple(in.value(), out.value(), w.Value(), final_marker),
        static_cast<int32_t>(table.size()));
    if (inserted) table.push_back({in, out, w, final_marker});
    return Label::Sym(it->second);
  };
  const Transducer trimmed = Trim(t);
  Automaton enc;
  for (size_t s = 0; s < trimmed.NumStates(); ++s) enc.AddState();
  enc.SetStart(trimmed.Start());
  StateId super_final = kNoStateId;
  for (StateId s = 0; s < static_cast<StateId>(trimmed.NumStates()); ++s) {
    for (const TransducerArc &arc : trimmed.Arcs(s)) {
      enc.AddArc(s, {encode(arc.in, arc.out, arc.weight, false), Weight::One(),
                     arc.nextstate});
    }
    const Weight fw = trimmed.Final(s);
    if (fw.IsZero()) continue;
    if (fw.IsOne()) {
      enc.SetFinal(s);
    } else {
      if (super_final == kNoStateId) {
        super_final = enc.AddState();
        enc.SetFinal(super_final);
      }
      enc.AddArc(s, {encode(Label::Epsilon(), Label::Epsilon(), fw, true),
                     Weight::One(), super_final});
    }
  }
  // A subset state may collect several final codes. Only the cheapest one
  // matters; keeping the others would hide state equivalences that only
  // show up once the codes are decoded into a single final weight.
  Automaton pruned = Determinize(enc).fsa();
  for (StateId s = 0; s < static_cast<StateId>(pruned.NumStates()); ++s) {
    std::vector<AcceptorArc> &arcs = pruned.MutableArcs(s);
    const AcceptorArc *best = nullptr;
    for (const AcceptorArc &arc : arcs) {
      const Code &c = table[arc.label.SymbolId()];
      if (c.final_marker &&
          (best == nullptr ||
           c.weight < table[best->label.SymbolId()].weight)) {
        best = &arc;
      }
    }
    if (best == nullptr) continue;
    const AcceptorArc keep = *best;
    std::erase_if(arcs, [&](const AcceptorArc &arc) {
      return table[arc.label.SymbolId()].final_marker && !(arc == keep);
    });
  }
  const Dfa min = Minimize(Dfa::Certify(Trim(pruned)));
  const Automaton &m = min.fsa();
  Transducer out;
  for (size_t s = 0; s < m.NumStates(); ++s) out.AddState();
  out.SetStart(m.Start());
  for (StateId s = 0; s < static_cast<StateId>(m.NumStates()); ++s) {
    Weight final = m.Final(s);
    for (const AcceptorArc &arc : m.Arcs(s)) {
      const Code &c = table[arc.label.SymbolId()];
      if (c.final_marker) {
        // Decoded back into a final weight so a second pass sees the
        // same encoding again.
        final = Plus(final, c.weight);
      } else {
        out.AddArc(s, {c.in, c.out, c.weight, arc.nextstate});
      }
    }
    out.SetFinal(s, final);
  }
  return Trim(out);
}

}  // namespace rwc
