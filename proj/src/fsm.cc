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

#include "rwc/fsm.h"

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "rwc/error.h"
#include "rwc/instrument.h"

namespace rwc {
namespace {

// Appends a copy of `src` to `dst`; returns the state offset.
StateId AppendCopy(const Automaton &src, Automaton *dst) {
  const StateId offset = static_cast<StateId>(dst->NumStates());
  for (size_t s = 0; s < src.NumStates(); ++s) dst->AddState();
  for (StateId s = 0; s < static_cast<StateId>(src.NumStates()); ++s) {
    for (const AcceptorArc &a : src.Arcs(s)) {
      dst->AddArc(s + offset, {a.label, a.weight, a.nextstate + offset});
    }
  }
  return offset;
}

void AddEpsilon(Automaton *a, StateId from, StateId to, Weight w) {
  a->AddArc(from, {Label::Epsilon(), w, to});
}

}  // namespace

Automaton EmptyAcceptor() {
  Automaton a;
  a.SetStart(a.AddState());
  return a;
}

Automaton EpsilonAcceptor() {
  Automaton a;
  const StateId s = a.AddState();
  a.SetStart(s);
  a.SetFinal(s);
  return a;
}

Automaton StringAcceptor(std::span<const Label> labels) {
  Automaton a;
  StateId s = a.AddState();
  a.SetStart(s);
  for (Label l : labels) {
    const StateId n = a.AddState();
    a.AddArc(s, {l, Weight::One(), n});
    s = n;
  }
  a.SetFinal(s);
  return a;
}

Automaton LabelSetAcceptor(std::span<const Label> labels) {
  Automaton a;
  const StateId s = a.AddState();
  const StateId f = a.AddState();
  a.SetStart(s);
  a.SetFinal(f);
  for (Label l : labels) a.AddArc(s, {l, Weight::One(), f});
  return a;
}

Automaton UniversalAcceptor(std::span<const Label> labels) {
  Automaton a;
  const StateId s = a.AddState();
  a.SetStart(s);
  a.SetFinal(s);
  for (Label l : labels) a.AddArc(s, {l, Weight::One(), s});
  return a;
}

Automaton Concat(const Automaton &a, const Automaton &b) {
  Automaton out;
  const StateId oa = AppendCopy(a, &out);
  const StateId ob = AppendCopy(b, &out);
  out.SetStart(a.Start() + oa);
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    if (a.IsFinal(s)) AddEpsilon(&out, s + oa, b.Start() + ob, a.Final(s));
  }
  for (StateId s = 0; s < static_cast<StateId>(b.NumStates()); ++s) {
    if (b.IsFinal(s)) out.SetFinal(s + ob, b.Final(s));
  }
  return out;
}

Automaton Union(const Automaton &a, const Automaton &b) {
  Automaton out;
  const StateId start = out.AddState();
  out.SetStart(start);
  for (const Automaton *m : {&a, &b}) {
    const StateId off = AppendCopy(*m, &out);
    AddEpsilon(&out, start, m->Start() + off, Weight::One());
    for (StateId s = 0; s < static_cast<StateId>(m->NumStates()); ++s) {
      if (m->IsFinal(s)) out.SetFinal(s + off, m->Final(s));
    }
  }
  return out;
}

Automaton Closure(const Automaton &a) {
  Automaton out;
  const StateId start = out.AddState();
  out.SetStart(start);
  out.SetFinal(start);
  const StateId off = AppendCopy(a, &out);
  AddEpsilon(&out, start, a.Start() + off, Weight::One());
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    if (a.IsFinal(s)) AddEpsilon(&out, s + off, start, a.Final(s));
  }
  return out;
}

Automaton ClosurePlus(const Automaton &a) {
  Automaton out;
  const StateId off = AppendCopy(a, &out);
  out.SetStart(a.Start() + off);
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    if (a.IsFinal(s)) {
      out.SetFinal(s + off, a.Final(s));
      AddEpsilon(&out, s + off, a.Start() + off, a.Final(s));
    }
  }
  return out;
}

Automaton Optional(const Automaton &a) { return Union(a, EpsilonAcceptor()); }

namespace {

Label ResolveName(const std::string &name, const Alphabet &alphabet,
                  const RegexOptions &options) {
  if (options.allow_markers) {
    if (name == ">") return Label::Rb();
    if (name == "<1") return Label::Lb1();
    if (name == "<2") return Label::Lb2();
  }
  return alphabet.Lookup(name);
}

}  // namespace

Automaton CompileRegex(const Expr &expr, const Alphabet &alphabet,
                       const RegexOptions &options) {
  switch (expr.kind()) {
    case Expr::Kind::kSymbol: {
      const Label l = ResolveName(expr.name(), alphabet, options);
      return StringAcceptor(std::span<const Label>(&l, 1));
    }
    case Expr::Kind::kEpsilon:
      return EpsilonAcceptor();
    case Expr::Kind::kClass: {
      std::vector<Label> labels;
      for (const std::string &n : expr.class_names()) {
        labels.push_back(ResolveName(n, alphabet, options));
      }
      return LabelSetAcceptor(labels);
    }
    case Expr::Kind::kConcat: {
      Automaton out = CompileRegex(expr.children().front(), alphabet, options);
      for (size_t i = 1; i < expr.children().size(); ++i) {
        out = Concat(out, CompileRegex(expr.children()[i], alphabet, options));
      }
      return out;
    }
    case Expr::Kind::kUnion: {
      Automaton out = CompileRegex(expr.children().front(), alphabet, options);
      for (size_t i = 1; i < expr.children().size(); ++i) {
        out = Union(out, CompileRegex(expr.children()[i], alphabet, options));
      }
      return out;
    }
    case Expr::Kind::kStar:
      return Closure(CompileRegex(expr.child(), alphabet, options));
    case Expr::Kind::kPlus:
      return ClosurePlus(CompileRegex(expr.child(), alphabet, options));
    case Expr::Kind::kOptional:
      return Optional(CompileRegex(expr.child(), alphabet, options));
    case Expr::Kind::kWeighted: {
      if (!(expr.weight() >= 0.0)) {
        throw Error(ErrorCode::kNegativeWeight, "negative series weight");
      }
      Automaton inner = CompileRegex(expr.child(), alphabet, options);
      Automaton out;
      const StateId start = out.AddState();
      out.SetStart(start);
      const StateId off = AppendCopy(inner, &out);
      AddEpsilon(&out, start, inner.Start() + off, Weight(expr.weight()));
      for (StateId s = 0; s < static_cast<StateId>(inner.NumStates()); ++s) {
        if (inner.IsFinal(s)) out.SetFinal(s + off, inner.Final(s));
      }
      return out;
    }
  }
  return EmptyAcceptor();
}

Transducer IdTransducer(const Automaton &a) {
  Transducer t;
  for (size_t s = 0; s < a.NumStates(); ++s) t.AddState();
  t.SetStart(a.Start());
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    t.SetFinal(s, a.Final(s));
    for (const AcceptorArc &arc : a.Arcs(s)) {
      t.AddArc(s, {arc.label, arc.label, arc.weight, arc.nextstate});
    }
  }
  return t;
}

Transducer CrossProduct(const Automaton &phi_in, const Automaton &psi_in) {
  const Automaton phi = RemoveEpsilon(phi_in);
  const Automaton psi = RemoveEpsilon(psi_in);
  if (IsEmptyLanguage(phi) || IsEmptyLanguage(psi)) {
    throw Error(ErrorCode::kEmptyLanguage,
                "cross product of an empty language");
  }
  // Mode 0: both sides advance together. Mode 1: psi has finished and phi
  // continues against epsilon. Mode 2: phi has finished and psi continues.
  using Key = std::tuple<StateId, StateId, int>;
  std::map<Key, StateId> ids;
  std::vector<Key> queue;
  Transducer out;
  auto id_of = [&](StateId p, StateId q, int mode) {
    const Key key{p, q, mode};
    auto [it, inserted] = ids.emplace(key, 0);
    if (inserted) {
      it->second = out.AddState();
      queue.push_back(key);
    }
    return it->second;
  };
  out.SetStart(id_of(phi.Start(), psi.Start(), 0));
  for (size_t head = 0; head < queue.size(); ++head) {
    const auto [p, q, mode] = queue[head];
    const StateId src = ids[queue[head]];
    if (phi.IsFinal(p) && psi.IsFinal(q)) {
      out.SetFinal(src, mode == 1 ? Weight::One() : psi.Final(q));
    }
    if (mode == 0) {
      for (const AcceptorArc &a : phi.Arcs(p)) {
        for (const AcceptorArc &b : psi.Arcs(q)) {
          out.AddArc(src, {a.label, b.label, b.weight,
                           id_of(a.nextstate, b.nextstate, 0)});
        }
      }
    }
    if ((mode == 0 || mode == 1) && psi.IsFinal(q)) {
      for (const AcceptorArc &a : phi.Arcs(p)) {
        // The psi final weight is charged once, when entering mode 1.
        const Weight w = mode == 0 ? psi.Final(q) : Weight::One();
        out.AddArc(src, {a.label, Label::Epsilon(), w,
                         id_of(a.nextstate, q, 1)});
      }
    }
    if ((mode == 0 || mode == 2) && phi.IsFinal(p)) {
      for (const AcceptorArc &b : psi.Arcs(q)) {
        out.AddArc(src, {Label::Epsilon(), b.label, b.weight,
                         id_of(p, b.nextstate, 2)});
      }
    }
  }
  return Trim(out);
}

namespace {

template <class A>
Fst<A> ReverseImpl(const Fst<A> &m) {
  Fst<A> out;
  const StateId super = out.AddState();
  for (size_t s = 0; s < m.NumStates(); ++s) out.AddState();
  out.SetStart(super);
  if (m.Start() == kNoStateId) return out;
  for (StateId s = 0; s < static_cast<StateId>(m.NumStates()); ++s) {
    for (const A &arc : m.Arcs(s)) {
      A r = arc;
      r.nextstate = s + 1;
      out.AddArc(arc.nextstate + 1, r);
    }
    if (m.IsFinal(s)) {
      A eps{};
      eps.weight = m.Final(s);
      eps.nextstate = s + 1;
      out.AddArc(super, eps);
    }
  }
  out.SetFinal(m.Start() + 1);
  return out;
}

template <class A>
Fst<A> TrimImpl(const Fst<A> &m) {
  const StateId n = static_cast<StateId>(m.NumStates());
  Fst<A> out;
  if (m.Start() == kNoStateId || n == 0) {
    out.SetStart(out.AddState());
    return out;
  }
  std::vector<char> access(n, 0), coaccess(n, 0);
  std::vector<StateId> stack{m.Start()};
  access[m.Start()] = 1;
  std::vector<std::vector<StateId>> preds(n);
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const A &a : m.Arcs(s)) {
      preds[a.nextstate].push_back(s);
      if (!access[a.nextstate]) {
        access[a.nextstate] = 1;
        stack.push_back(a.nextstate);
      }
    }
  }
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && m.IsFinal(s)) {
      coaccess[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!coaccess[p]) {
        coaccess[p] = 1;
        stack.push_back(p);
      }
    }
  }
  if (!coaccess[m.Start()]) {
    out.SetStart(out.AddState());
    return out;
  }
  std::vector<StateId> remap(n, kNoStateId);
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && coaccess[s]) remap[s] = out.AddState();
  }
  out.SetStart(remap[m.Start()]);
  for (StateId s = 0; s < n; ++s) {
    if (remap[s] == kNoStateId) continue;
    out.SetFinal(remap[s], m.Final(s));
    for (const A &a : m.Arcs(s)) {
      if (remap[a.nextstate] == kNoStateId) continue;
      A c = a;
      c.nextstate = remap[a.nextstate];
      out.AddArc(remap[s], c);
    }
  }
  return out;
}

template <class A>
auto ArcKey(const A &a) {
  return std::make_tuple(a.ilabel().value(), a.olabel().value(), a.nextstate);
}

template <class A>
Fst<A> RemoveEpsilonImpl(const Fst<A> &m) {
  const StateId n = static_cast<StateId>(m.NumStates());
  Fst<A> out;
  for (StateId s = 0; s < n; ++s) out.AddState();
  out.SetStart(m.Start());
  if (m.Start() == kNoStateId) return TrimImpl(out);
  std::vector<Weight> dist(n, Weight::Zero());
  std::vector<StateId> touched;
  using Entry = std::pair<double, StateId>;
  for (StateId q = 0; q < n; ++q) {
    // Dijkstra over epsilon arcs; weights are non-negative.
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[q] = Weight::One();
    touched.push_back(q);
    heap.push({0.0, q});
    while (!heap.empty()) {
      const auto [d, s] = heap.top();
      heap.pop();
      if (d > dist[s].Value()) continue;
      for (const A &a : m.Arcs(s)) {
        if (!a.IsEpsilon()) continue;
        const Weight nd = Times(dist[s], a.weight);
        if (nd < dist[a.nextstate]) {
          if (dist[a.nextstate].IsZero()) touched.push_back(a.nextstate);
          dist[a.nextstate] = nd;
          heap.push({nd.Value(), a.nextstate});
        }
      }
    }
    Weight final = Weight::Zero();
    std::map<std::tuple<int32_t, int32_t, StateId>, A> arcs;
    for (StateId p : touched) {
      final = Plus(final, Times(dist[p], m.Final(p)));
      for (const A &a : m.Arcs(p)) {
        if (a.IsEpsilon()) continue;
        A c = a;
        c.weight = Times(dist[p], a.weight);
        auto [it, inserted] = arcs.emplace(ArcKey(c), c);
        if (!inserted && c.weight < it->second.weight) it->second = c;
      }
    }
    out.SetFinal(q, final);
    for (const auto &[key, a] : arcs) out.AddArc(q, a);
    for (StateId p : touched) dist[p] = Weight::Zero();
    touched.clear();
    CheckDeadline();
  }
  return TrimImpl(out);
}

}  // namespace

Automaton Reverse(const Automaton &a) { return ReverseImpl(a); }
Transducer Reverse(const Transducer &t) { return ReverseImpl(t); }
Automaton Trim(const Automaton &a) { return TrimImpl(a); }
Transducer Trim(const Transducer &t) { return TrimImpl(t); }
Automaton RemoveEpsilon(const Automaton &a) { return RemoveEpsilonImpl(a); }
Transducer RemoveEpsilon(const Transducer &t) { return RemoveEpsilonImpl(t); }

Transducer AddLoops(const Transducer &t,
                    std::span<const std::pair<Label, Label>> pairs) {
  Transducer out = t;
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    for (const auto &[in, o] : pairs) out.AddArc(s, {in, o, Weight::One(), s});
  }
  return out;
}

Automaton AddLoops(const Automaton &a, std::span<const Label> labels) {
  Automaton out = a;
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    for (Label l : labels) out.AddArc(s, {l, Weight::One(), s});
  }
  return out;
}

Transducer Compose(const Transducer &t1, const Transducer &t2) {
  ++ThreadOpCounters().compositions;
  Transducer out;
  if (t1.Start() == kNoStateId || t2.Start() == kNoStateId) {
    out.SetStart(out.AddState());
    return out;
  }
  // Arcs of t2 sorted by input label, for matching.
  std::vector<std::vector<TransducerArc>> sorted2(t2.NumStates());
  for (StateId s = 0; s < static_cast<StateId>(t2.NumStates()); ++s) {
    auto arcs = t2.Arcs(s);
    sorted2[s].assign(arcs.begin(), arcs.end());
    std::stable_sort(sorted2[s].begin(), sorted2[s].end(),
                     [](const TransducerArc &a, const TransducerArc &b) {
                       return a.in < b.in;
                     });
  }
  struct KeyHash {
    size_t operator()(const std::tuple<StateId, StateId, int> &k) const {
      const auto [a, b, c] = k;
      return (static_cast<size_t>(a) * 1000003u) ^
             (static_cast<size_t>(b) * 7919u) ^ static_cast<size_t>(c);
    }
  };
  using Key = std::tuple<StateId, StateId, int>;
  std::unordered_map<Key, StateId, KeyHash> ids;
  std::vector<Key> queue;
  auto id_of = [&](StateId a, StateId b, int f) {
    auto [it, inserted] = ids.emplace(Key{a, b, f}, 0);
    if (inserted) {
      it->second = out.AddState();
      queue.push_back(it->first);
    }
    return it->second;
  };
  out.SetStart(id_of(t1.Start(), t2.Start(), 0));
  auto eps_begin = [](const std::vector<TransducerArc> &arcs) {
    return std::lower_bound(arcs.begin(), arcs.end(), Label::Epsilon(),
                            [](const TransducerArc &a, Label l) {
                              return a.in < l;
                            });
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    CheckDeadline();
    const auto [s1, s2, filter] = queue[head];
    const StateId src = static_cast<StateId>(head);
    const Weight fin = Times(t1.Final(s1), t2.Final(s2));
    if (!fin.IsZero()) out.SetFinal(src, fin);
    const auto &arcs2 = sorted2[s2];
    for (const TransducerArc &a1 : t1.Arcs(s1)) {
      if (a1.out.IsEpsilon()) {
        // t1 moves alone.
        if (filter != 2) {
          out.AddArc(src, {a1.in, Label::Epsilon(), a1.weight,
                           id_of(a1.nextstate, s2, 1)});
        }
        // Both move on epsilon together.
        if (filter == 0) {
          for (auto it = eps_begin(arcs2);
               it != arcs2.end() && it->in.IsEpsilon(); ++it) {
            out.AddArc(src, {a1.in, it->out, Times(a1.weight, it->weight),
                             id_of(a1.nextstate, it->nextstate, 0)});
          }
        }
        continue;
      }
      auto it = std::lower_bound(
          arcs2.begin(), arcs2.end(), a1.out,
          [](const TransducerArc &a, Label l) { return a.in < l; });
      for (; it != arcs2.end() && it->in == a1.out; ++it) {
        out.AddArc(src, {a1.in, it->out, Times(a1.weight, it->weight),
                         id_of(a1.nextstate, it->nextstate, 0)});
      }
    }
    // t2 moves alone on an input epsilon.
    if (filter != 1) {
      for (auto it = eps_begin(arcs2);
           it != arcs2.end() && it->in.IsEpsilon(); ++it) {
        out.AddArc(src, {Label::Epsilon(), it->out, it->weight,
                         id_of(s1, it->nextstate, 2)});
      }
    }
  }
  return Trim(out);
}

Automaton Project(const Transducer &t, ProjectType side) {
  Automaton a;
  for (size_t s = 0; s < t.NumStates(); ++s) a.AddState();
  a.SetStart(t.Start());
  for (StateId s = 0; s < static_cast<StateId>(t.NumStates()); ++s) {
    a.SetFinal(s, t.Final(s));
    for (const TransducerArc &arc : t.Arcs(s)) {
      a.AddArc(s, {side == ProjectType::kInput ? arc.in : arc.out, arc.weight,
                   arc.nextstate});
    }
  }
  return a;
}

Transducer Invert(const Transducer &t) {
  Transducer out = t;
  for (StateId s = 0; s < static_cast<StateId>(out.NumStates()); ++s) {
    for (TransducerArc &arc : out.MutableArcs(s)) std::swap(arc.in, arc.out);
  }
  return out;
}

namespace {

// Relaxes epsilon arcs from the weighted frontier in place.
void EpsilonClosure(const Automaton &a, std::vector<Weight> *dist) {
  using Entry = std::pair<double, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (StateId s = 0; s < static_cast<StateId>(dist->size()); ++s) {
    if (!(*dist)[s].IsZero()) heap.push({(*dist)[s].Value(), s});
  }
  while (!heap.empty()) {
    const auto [d, s] = heap.top();
    heap.pop();
    if (d > (*dist)[s].Value()) continue;
    for (const AcceptorArc &arc : a.Arcs(s)) {
      if (!arc.label.IsEpsilon()) continue;
      const Weight nd = Times((*dist)[s], arc.weight);
      if (nd < (*dist)[arc.nextstate]) {
        (*dist)[arc.nextstate] = nd;
        heap.push({nd.Value(), arc.nextstate});
      }
    }
  }
}

}  // namespace

Weight AcceptanceWeight(const Automaton &a, std::span<const Label> input) {
  if (a.Start() == kNoStateId) return Weight::Zero();
  std::vector<Weight> dist(a.NumStates(), Weight::Zero());
  dist[a.Start()] = Weight::One();
  EpsilonClosure(a, &dist);
  for (Label l : input) {
    std::vector<Weight> next(a.NumStates(), Weight::Zero());
    bool any = false;
    for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
      if (dist[s].IsZero()) continue;
      for (const AcceptorArc &arc : a.Arcs(s)) {
        if (arc.label != l) continue;
        next[arc.nextstate] =
            Plus(next[arc.nextstate], Times(dist[s], arc.weight));
        any = true;
      }
    }
    if (!any) return Weight::Zero();
    EpsilonClosure(a, &next);
    dist = std::move(next);
  }
  Weight total = Weight::Zero();
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    total = Plus(total, Times(dist[s], a.Final(s)));
  }
  return total;
}

bool Accepts(const Automaton &a, std::span<const Label> input) {
  return !AcceptanceWeight(a, input).IsZero();
}

bool AcceptsEmptyString(const Automaton &a) { return Accepts(a, {}); }

bool IsEmptyLanguage(const Automaton &a) {
  // Trimming leaves a final state iff some string is accepted.
  const Automaton t = Trim(a);
  for (StateId s = 0; s < static_cast<StateId>(t.NumStates()); ++s) {
    if (t.IsFinal(s)) return false;
  }
  return true;
}

bool IsEmptyRelation(const Transducer &t) {
  const Transducer x = Trim(t);
  for (StateId s = 0; s < static_cast<StateId>(x.NumStates()); ++s) {
    if (x.IsFinal(s)) return false;
  }
  return true;
}

std::vector<Label> ArcLabels(const Automaton &a) {
  std::vector<Label> out;
  for (StateId s = 0; s < static_cast<StateId>(a.NumStates()); ++s) {
    for (const AcceptorArc &arc : a.Arcs(s)) {
      if (!arc.label.IsEpsilon()) out.push_back(arc.label);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rwc
