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

#include "rwc/kk.h"

#include <algorithm>
#include <vector>

#include "rwc/boolean.h"
#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

using B = Label::Bracket;

Label Br(B b) { return Label::Of(b); }

struct Sets {
  std::vector<Label> sigma;     // user symbols
  std::vector<Label> brackets;  // the six brackets
  std::vector<Label> d;         // brackets and 0
  std::vector<Label> left;
  std::vector<Label> right;
  std::vector<Label> d_minus_right;
  std::vector<Label> gamma;     // sigma and d

  explicit Sets(const Alphabet &alphabet) : sigma(alphabet.Labels()) {
    left = {Br(B::kLeftApply), Br(B::kLeftIgnore), Br(B::kLeftContext)};
    right = {Br(B::kRightApply), Br(B::kRightIgnore), Br(B::kRightContext)};
    brackets = left;
    brackets.insert(brackets.end(), right.begin(), right.end());
    d = brackets;
    d.push_back(Br(B::kDeleted));
    d_minus_right = left;
    d_minus_right.push_back(Br(B::kDeleted));
    gamma = sigma;
    gamma.insert(gamma.end(), d.begin(), d.end());
  }
};

class Builder {
 public:
  explicit Builder(const Alphabet &alphabet) : s_(alphabet) {}

  const Sets &sets() const { return s_; }

  Automaton Star(const std::vector<Label> &labels) const {
    return UniversalAcceptor(labels);
  }
  Automaton One(const std::vector<Label> &labels) const {
    return LabelSetAcceptor(labels);
  }
  Automaton Pi() const { return Star(s_.gamma); }
  Automaton Ignoring(const Automaton &a, const std::vector<Label> &l) const {
    return AddLoops(a, l);
  }

  // Minimal DFA of the complement over gamma.
  Automaton Comp(const Automaton &a) const {
    return Minimize(Complement(Determinize(a), s_.gamma)).fsa();
  }
  Automaton IfPThenS(const Automaton &p, const Automaton &s) const {
    return Comp(Concat(p, Comp(s)));
  }
  Automaton IfSThenP(const Automaton &p, const Automaton &s) const {
    return Comp(Concat(Comp(p), s));
  }

  // (rho Sigma*) with every bracket ignored.
  Automaton RhoAhead(const Automaton &rho) const {
    return Ignoring(Concat(rho, Star(s_.sigma)), s_.d);
  }

  // Pi R D*
  Automaton AfterRight() const {
    return Concat(Concat(Pi(), One(s_.right)), Star(s_.d));
  }

  // (D - R)* ((rho Sigma*)_D  n  (eps + Sigma Pi))
  Automaton RightSuffix(const Automaton &rho) const {
    const Automaton starts =
        Union(EpsilonAcceptor(), Concat(One(s_.sigma), Pi()));
    return Concat(Star(s_.d_minus_right), Intersect(RhoAhead(rho), starts));
  }

 private:
  Sets s_;
};

// a restricted so that `extra` symbols only occur strictly inside.
Automaton Interior(const Automaton &a, const std::vector<Label> &sigma,
                   Label extra) {
  std::vector<Label> with = sigma;
  with.push_back(extra);
  const Label e[] = {extra};
  const Automaton one = LabelSetAcceptor(sigma);
  const Automaton shape =
      Union(Concat(Concat(one, UniversalAcceptor(with)), one), one);
  return Intersect(AddLoops(a, e), shape);
}

Transducer Loops(const std::vector<std::pair<Label, Label>> &pairs) {
  Transducer t;
  const StateId s = t.AddState();
  t.SetStart(s);
  t.SetFinal(s);
  for (const auto &[i, o] : pairs) {
    t.AddArc(s, TransducerArc(i, o, Weight::One(), s));
  }
  return t;
}

}  // namespace

Transducer KkCompileRule(const Rule &rule, const Alphabet &alphabet,
                         const KkOptions &options) {
  if (rule.psi.HasWeights()) {
    throw Error(ErrorCode::kBadSpec, "weighted replacement is not supported");
  }
  const Automaton phi = CompileRegex(rule.phi, alphabet);
  if (AcceptsEmptyString(phi)) {
    throw Error(ErrorCode::kPhiNullable,
                "left-hand side matches the empty string");
  }
  const Automaton psi = CompileRegex(rule.psi, alphabet);
  if (IsEmptyLanguage(psi)) {
    throw Error(ErrorCode::kPsiEmpty, "replacement denotes no string");
  }
  const Automaton rho = CompileRegex(rule.rho, alphabet);
  const Automaton lambda = CompileRegex(rule.lambda, alphabet);

  const Builder b(alphabet);
  const Sets &s = b.sets();
  const Automaton pi = b.Pi();

  // Obligatory: no <i phi_D R.
  const Automaton obligatory = b.Comp(Concat(
      Concat(Concat(Concat(pi, StringAcceptor(std::vector{
                                   Br(B::kLeftIgnore)})),
                    b.Ignoring(phi, s.d)),
             b.One(s.right)),
      pi));

  // Rightcontext: every right bracket is followed by rho, every position
  // where rho begins holds a right bracket, and no position holds two.
  const Automaton right1 =
      b.IfPThenS(Concat(pi, b.One(s.right)), b.RhoAhead(rho));
  const Automaton right2 = b.IfSThenP(b.AfterRight(), b.RightSuffix(rho));
  const Automaton right3 = b.Comp(Concat(
      Concat(Concat(Concat(pi, b.One(s.right)), b.Star(s.d)), b.One(s.right)),
      pi));
  const Automaton rightcontext = Intersect(Intersect(right1, right2), right3);

  // Leftcontext, on the output: positions are separated by symbols and 0.
  std::vector<Label> sigma0 = s.sigma;
  sigma0.push_back(Br(B::kDeleted));
  const Automaton lambda_end =
      b.Ignoring(Concat(b.Star(s.sigma), lambda), s.d);
  const Automaton left_all = Concat(b.One(s.left), pi);
  const Automaton left3 = b.IfSThenP(lambda_end, left_all);
  const Automaton at_boundary =
      Union(EpsilonAcceptor(), Concat(pi, b.One(sigma0)));
  const Automaton left4 =
      b.IfPThenS(Intersect(lambda_end, at_boundary),
                 Concat(b.Star(s.brackets), left_all));
  const Automaton left5 = b.Comp(Concat(
      Concat(Concat(Concat(pi, b.One(s.left)), b.Star(s.brackets)),
             b.One(s.left)),
      pi));
  const Automaton leftcontext = Intersect(Intersect(left3, left4), left5);

  // Replace.
  const Automaton span_in = Interior(phi, s.sigma, Br(B::kRightContext));
  Automaton span_out = Interior(psi, s.sigma, Br(B::kLeftContext));
  if (AcceptsEmptyString(psi)) {
    span_out = Union(span_out, StringAcceptor(std::vector{Br(B::kDeleted)}));
  }
  const Transducer span = CrossProduct(span_in, span_out);
  Transducer replace;
  const StateId base = replace.AddState();
  replace.SetStart(base);
  replace.SetFinal(base);
  std::vector<Label> base_loops = s.sigma;
  base_loops.push_back(Br(B::kLeftIgnore));
  base_loops.push_back(Br(B::kRightIgnore));
  for (Label l : base_loops) {
    replace.AddArc(base, TransducerArc(l, l, Weight::One(), base));
  }
  const StateId offset = static_cast<StateId>(replace.NumStates());
  for (size_t i = 0; i < span.NumStates(); ++i) replace.AddState();
  replace.AddArc(base, TransducerArc(Br(B::kLeftApply), Br(B::kLeftApply),
                                     Weight::One(), span.Start() + offset));
  for (StateId q = 0; q < static_cast<StateId>(span.NumStates()); ++q) {
    for (const TransducerArc &arc : span.Arcs(q)) {
      replace.AddArc(q + offset, TransducerArc(arc.in, arc.out, arc.weight,
                                               arc.nextstate + offset));
    }
    if (span.IsFinal(q)) {
      replace.AddArc(q + offset,
                     TransducerArc(Br(B::kRightApply), Br(B::kRightApply),
                                   Weight::One(), base));
    }
  }

  std::vector<std::pair<Label, Label>> pro, epi;
  for (Label l : s.sigma) {
    pro.push_back({l, l});
    epi.push_back({l, l});
  }
  for (Label l : s.brackets) pro.push_back({Label::Epsilon(), l});
  for (Label l : s.d) epi.push_back({l, Label::Epsilon()});
  const Transducer prologue = Loops(pro);
  const Transducer prologue_inv = Loops(epi);

  Transducer t = Compose(prologue, IdTransducer(obligatory));
  t = Compose(t, IdTransducer(rightcontext));
  t = Compose(t, replace);
  t = Compose(t, IdTransducer(leftcontext));
  t = Trim(Compose(t, prologue_inv));
  if (options.compact) t = CompactTransducer(t);
  return t;
}

Transducer KkCompileRuleset(const RuleSet &rules, const KkOptions &options) {
  if (rules.rules.empty()) {
    return IdTransducer(UniversalAcceptor(rules.alphabet.Labels()));
  }
  Transducer acc = KkCompileRule(rules.rules[0], rules.alphabet, options);
  for (size_t i = 1; i < rules.rules.size(); ++i) {
    acc = Compose(acc, KkCompileRule(rules.rules[i], rules.alphabet, options));
    if (options.compact) acc = CompactTransducer(acc);
  }
  return acc;
}

KkProbe KkRightContextProbe(const Expr &rho, const Alphabet &alphabet) {
  const Builder b(alphabet);
  const Automaton nfa =
      Concat(b.Comp(b.AfterRight()), b.RightSuffix(CompileRegex(rho, alphabet)));
  KkProbe probe;
  probe.nfa_arcs = nfa.NumArcs();
  probe.dfa_arcs = Determinize(nfa).NumArcs();
  return probe;
}

}  // namespace rwc
