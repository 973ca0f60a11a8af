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

#include <string>

#include "doctest.h"
#include "rwc/bench.h"
#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/instrument.h"
#include "rwc/kk.h"
#include "rwc/oracle.h"
#include "rwc/random_rules.h"
#include "rwc/rulespec.h"
#include "test_util.h"

namespace rwc {
namespace {

using testing::CodeOf;
using testing::L;

RuleSet Parse(const std::string &text) { return ParseRuleFile(text); }

void CheckAgainstNew(const Rule &rule, const Alphabet &al, int max_len) {
  const Transducer kk = KkCompileRule(rule, al);
  const Transducer fresh = CompileRule(rule, al).transducer;
  const EquivalenceReport rep = EquivalentOn(kk, fresh, al, max_len);
  if (!rep.equivalent) FAIL(ToString(rule) << "\n" << rep.Describe(al));
  CHECK_FALSE(HasMarkerLabels(kk));
  for (StateId s = 0; s < static_cast<StateId>(kk.NumStates()); ++s) {
    for (const TransducerArc &a : kk.Arcs(s)) {
      CHECK_FALSE(a.in.IsBracket());
      CHECK_FALSE(a.out.IsBracket());
    }
  }
}

TEST_CASE("kk examples") {
  const RuleSet between = Parse("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const Transducer t = KkCompileRule(between.rules[0], between.alphabet);
  const Alphabet &al = between.alphabet;
  CHECK(SameWeightedSets(Apply(t, L(al, "cad")).outputs,
                         {{L(al, "cbd"), Weight::One()}}));
  CHECK(SameWeightedSets(Apply(t, L(al, "cadcad")).outputs,
                         {{L(al, "cbdcbd"), Weight::One()}}));
  CheckAgainstNew(between.rules[0], al, 6);

  const RuleSet bare = Parse("alphabet: a b ;\na -> b ;\n");
  const Transducer u = KkCompileRule(bare.rules[0], bare.alphabet);
  CHECK(SameWeightedSets(Apply(u, L(bare.alphabet, "aa")).outputs,
                         {{L(bare.alphabet, "bb"), Weight::One()}}));

  const RuleSet feed = Parse("alphabet: a b ;\na -> b / b _ ;\n");
  const Transducer f = KkCompileRule(feed.rules[0], feed.alphabet);
  CHECK(SameWeightedSets(Apply(f, L(feed.alphabet, "baa")).outputs,
                         {{L(feed.alphabet, "bbb"), Weight::One()}}));
}

TEST_CASE("kk matches the new compiler on the context-length families") {
  for (int k = 0; k <= 3; ++k) {
    for (const BenchFamily fam : {BenchFamily::kLeft, BenchFamily::kRight}) {
      const Alphabet bal({"a", "b", "c"});
      Rule r;
      r.phi = Expr::Symbol("a");
      r.psi = Expr::Symbol("b");
      std::vector<Expr> cs(static_cast<size_t>(k), Expr::Symbol("c"));
      Expr ctx = k == 0 ? Expr::Epsilon() : Expr::Concat(cs);
      (fam == BenchFamily::kLeft ? r.lambda : r.rho) = ctx;
      CheckAgainstNew(r, bal, 6);
    }
  }
}

TEST_CASE("kk deletions, insertions of several symbols and classes") {
  for (const char *text : {
           "alphabet: a b c ;\na b + b -> 0 + c / a _ ;\n",
           "alphabet: a b c ;\na -> b c / _ [b c] ;\n",
           "alphabet: a b c ;\na+ -> c b / _ b ;\n",
           "alphabet: a b c ;\n[^c] -> c / c _ c ;\n",
           "alphabet: a b ;\na b* -> b a / b* _ a* ;\n",
       }) {
    const RuleSet rs = Parse(text);
    CheckAgainstNew(rs.rules[0], rs.alphabet, 6);
  }
}

TEST_CASE("kk agrees with the new compiler on random unweighted rules") {
  Rng rng(61);
  RandomRuleOptions o;
  o.weighted = false;
  for (int i = 0; i < 12; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 3);
    CheckAgainstNew(RandomRule(rng, al, o), al, 5);
  }
}

TEST_CASE("kk operation counts") {
  const RuleSet rs = Parse("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const OpCounters before = ThreadOpCounters();
  KkCompileRule(rs.rules[0], rs.alphabet);
  const OpCounters used = ThreadOpCounters() - before;
  CHECK(used.complements >= 11);
  CHECK(used.intersections >= 4);
}

TEST_CASE("kk rejects what it cannot compile") {
  const RuleSet w = Parse("alphabet: a b ;\na -> <1> b ;\n");
  CHECK(CodeOf([&] { KkCompileRule(w.rules[0], w.alphabet); }) ==
        ErrorCode::kBadSpec);
  Rule r;
  r.phi = ParseRegex("a*", w.alphabet);
  r.psi = Expr::Symbol("b");
  CHECK(CodeOf([&] { KkCompileRule(r, w.alphabet); }) ==
        ErrorCode::kPhiNullable);
}

TEST_CASE("kk ruleset chains rules in order") {
  const RuleSet rs = Parse("alphabet: a b c ;\na -> b / _ ;\nb -> c / _ ;\n");
  const Transducer t = KkCompileRuleset(rs);
  CHECK(EquivalentOn(t, CompileRuleset(rs), rs.alphabet, 5).equivalent);
  CHECK(SameWeightedSets(Apply(t, L(rs.alphabet, "ab")).outputs,
                         {{L(rs.alphabet, "cc"), Weight::One()}}));
}

TEST_CASE("right-context probe") {
  const Alphabet al = BenchAlphabet(194);
  const KkProbe p0 =
      KkRightContextProbe(BenchRule(BenchFamily::kRight, 0, al).rho, al);
  // Regression baseline recorded from the first run.
  CHECK(p0.nfa_arcs == 1004);
  CHECK(p0.dfa_arcs == 1206);
  size_t last = p0.dfa_arcs;
  for (int k = 1; k <= 4; ++k) {
    const KkProbe p =
        KkRightContextProbe(BenchRule(BenchFamily::kRight, k, al).rho, al);
    CHECK(p.dfa_arcs > last);
    last = p.dfa_arcs;
  }
}

TEST_CASE("kk compilation honors a deadline") {
  const Alphabet al = BenchAlphabet(194);
  const Rule r = BenchRule(BenchFamily::kRight, 10, al);
  const ScopedDeadline deadline(Clock::now() + std::chrono::milliseconds(50));
  CHECK(CodeOf([&] { KkCompileRule(r, al); }) == ErrorCode::kTimeout);
}

}  // namespace
}  // namespace rwc
