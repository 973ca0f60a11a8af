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

#include "rwc/compiler.h"

#include <chrono>

#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/instrument.h"
#include "rwc/marker.h"

namespace rwc {
namespace {

std::vector<Label> WithRb(const Alphabet &alphabet) {
  std::vector<Label> labels = alphabet.Labels();
  labels.push_back(Label::Rb());
  return labels;
}

// phi with > allowed between (never before or after) its symbols.
Automaton PhiIgnoringRb(const Automaton &phi, const Alphabet &alphabet) {
  const std::vector<Label> sigma = alphabet.Labels();
  const std::vector<Label> sigma_rb = WithRb(alphabet);
  const Label rb[] = {Label::Rb()};
  const Automaton one = LabelSetAcceptor(sigma);
  const Automaton interior = Union(
      Concat(Concat(one, UniversalAcceptor(sigma_rb)), one), one);
  return Intersect(AddLoops(phi, rb), interior);
}

void CheckPhi(const Automaton &phi) {
  if (AcceptsEmptyString(phi)) {
    throw Error(ErrorCode::kPhiNullable,
                "left-hand side matches the empty string");
  }
  if (IsEmptyLanguage(phi)) {
    throw Error(ErrorCode::kEmptyLanguage, "left-hand side is empty");
  }
}

}  // namespace

Transducer BuildR(const Expr &rho, const Alphabet &alphabet) {
  const std::vector<Label> sigma = alphabet.Labels();
  const Automaton rev_rho = Reverse(CompileRegex(rho, alphabet));
  const Dfa alpha = Determinize(Concat(UniversalAcceptor(sigma), rev_rho));
  const MarkerSpec spec{MarkerKind::kType1, {Label::Rb()}, {}};
  return Reverse(Marker(alpha, spec, sigma));
}

Transducer BuildF(const Expr &phi, const Alphabet &alphabet) {
  const Automaton phi_fsa = CompileRegex(phi, alphabet);
  CheckPhi(phi_fsa);
  const std::vector<Label> sigma_rb = WithRb(alphabet);
  const Label rb[] = {Label::Rb()};
  const Automaton suffix =
      Concat(StringAcceptor(rb), Reverse(PhiIgnoringRb(phi_fsa, alphabet)));
  const Dfa alpha = Determinize(Concat(UniversalAcceptor(sigma_rb), suffix));
  const MarkerSpec spec{MarkerKind::kType1, {Label::Lb1(), Label::Lb2()}, {}};
  return Reverse(Marker(alpha, spec, sigma_rb));
}

Transducer BuildReplace(const Expr &phi, const Automaton &psi_wfsa,
                        const Alphabet &alphabet) {
  const Automaton phi_fsa = CompileRegex(phi, alphabet);
  CheckPhi(phi_fsa);
  if (IsEmptyLanguage(psi_wfsa)) {
    throw Error(ErrorCode::kPsiEmpty, "replacement denotes no string");
  }
  const Transducer block = CrossProduct(phi_fsa, psi_wfsa);

  Transducer t;
  const StateId base = t.AddState();
  t.SetStart(base);
  t.SetFinal(base);
  for (Label a : alphabet.Labels()) {
    t.AddArc(base, TransducerArc(a, a, Weight::One(), base));
  }
  t.AddArc(base, TransducerArc(Label::Rb(), Label::Epsilon(), Weight::One(),
                               base));
  t.AddArc(base, TransducerArc(Label::Lb2(), Label::Lb2(), Weight::One(),
                               base));

  const StateId offset = static_cast<StateId>(t.NumStates());
  for (size_t s = 0; s < block.NumStates(); ++s) t.AddState();
  t.AddArc(base, TransducerArc(Label::Lb1(), Label::Lb1(), Weight::One(),
                               block.Start() + offset));
  for (StateId s = 0; s < static_cast<StateId>(block.NumStates()); ++s) {
    const StateId u = s + offset;
    for (const TransducerArc &arc : block.Arcs(s)) {
      t.AddArc(u, TransducerArc(arc.in, arc.out, arc.weight,
                                arc.nextstate + offset));
    }
    for (Label m : {Label::Rb(), Label::Lb1(), Label::Lb2()}) {
      t.AddArc(u, TransducerArc(m, Label::Epsilon(), Weight::One(), u));
    }
    if (block.IsFinal(s)) {
      t.AddArc(u, TransducerArc(Label::Rb(), Label::Epsilon(), block.Final(s),
                                base));
    }
  }
  return t;
}

Dfa LambdaDfa(const Expr &lambda, const Alphabet &alphabet) {
  const std::vector<Label> sigma = alphabet.Labels();
  const Dfa d = Determinize(
      Concat(UniversalAcceptor(sigma), CompileRegex(lambda, alphabet)));
  // Only an empty lambda language leaves the result incomplete.
  return Complete(d, sigma);
}

Transducer BuildL1(const Dfa &lambda_dfa, const Alphabet &alphabet) {
  const MarkerSpec spec{MarkerKind::kType2, {}, {Label::Lb1()}};
  const std::pair<Label, Label> lb2[] = {{Label::Lb2(), Label::Lb2()}};
  return AddLoops(Marker(lambda_dfa, spec, alphabet.Labels()), lb2);
}

Transducer BuildL2(const Dfa &lambda_dfa, const Alphabet &alphabet) {
  const MarkerSpec spec{MarkerKind::kType3, {}, {Label::Lb2()}};
  return Marker(lambda_dfa, spec, alphabet.Labels());
}

Transducer BuildL1(const Expr &lambda, const Alphabet &alphabet) {
  return BuildL1(LambdaDfa(lambda, alphabet), alphabet);
}

Transducer BuildL2(const Expr &lambda, const Alphabet &alphabet) {
  return BuildL2(LambdaDfa(lambda, alphabet), alphabet);
}

CompiledRule CompileRule(const Rule &rule, const Alphabet &alphabet,
                         const CompileOptions &options) {
  const auto t0 = Clock::now();
  const uint64_t det0 = ThreadOpCounters().determinizations;

  const Automaton psi = SeriesToWfsa(rule.psi, alphabet);
  const Transducer r = BuildR(rule.rho, alphabet);
  const Transducer f = BuildF(rule.phi, alphabet);
  const Transducer replace = BuildReplace(rule.phi, psi, alphabet);
  const Dfa lambda = LambdaDfa(rule.lambda, alphabet);
  const Transducer l1 = BuildL1(lambda, alphabet);
  const Transducer l2 = BuildL2(lambda, alphabet);

  CompiledRule out;
  out.source = rule;
  out.stats.determinizations = ThreadOpCounters().determinizations - det0;

  Transducer t = Compose(Compose(Compose(Compose(r, f), replace), l1), l2);
  t = Trim(t);
  if (options.compact) t = CompactTransducer(t);
  out.stats.states = t.NumStates();
  out.stats.arcs = t.NumArcs();
  out.transducer = std::move(t);
  out.stats.ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return out;
}

Transducer CompileRuleset(const RuleSet &rules, const CompileOptions &options) {
  if (rules.rules.empty()) {
    return IdTransducer(UniversalAcceptor(rules.alphabet.Labels()));
  }
  Transducer acc;
  bool first = true;
  for (const Rule &rule : rules.rules) {
    Transducer t = CompileRule(rule, rules.alphabet, options).transducer;
    if (first) {
      acc = std::move(t);
      first = false;
      continue;
    }
    acc = Compose(acc, t);
    if (options.compact) acc = CompactTransducer(acc);
  }
  return acc;
}

bool HasMarkerLabels(const Transducer &t) {
  for (StateId s = 0; s < static_cast<StateId>(t.NumStates()); ++s) {
    for (const TransducerArc &arc : t.Arcs(s)) {
      if (arc.in.IsMarker() || arc.out.IsMarker()) return true;
    }
  }
  return false;
}

}  // namespace rwc
