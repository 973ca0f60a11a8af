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

#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/oracle.h"
#include "rwc/random_rules.h"
#include "rwc/rulespec.h"
#include "test_util.h"

namespace rwc {
namespace {

using testing::CodeOf;
using testing::L;

RuleSet Parse(const std::string &text) { return ParseRuleFile(text); }

WeightedStringSet One(const Alphabet &al, const std::string &s,
                      double w = 0.0) {
  return {{L(al, s), Weight(w)}};
}

TEST_CASE("oracle examples") {
  const RuleSet between = Parse("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const Alphabet &al = between.alphabet;
  const RuleOracle o(between.rules[0], al);
  CHECK(SameWeightedSets(o.Rewrite(L(al, "cad")), One(al, "cbd")));
  CHECK(SameWeightedSets(o.Rewrite(L(al, "ad")), One(al, "ad")));
  CHECK(SameWeightedSets(o.Rewrite(L(al, "cadcad")), One(al, "cbdcbd")));

  const RuleSet feed = Parse("alphabet: a b ;\na -> b / b _ ;\n");
  CHECK(SameWeightedSets(
      OracleRewrite(feed.rules[0], feed.alphabet, L(feed.alphabet, "baa")),
      One(feed.alphabet, "bbb")));

  const RuleSet look = Parse("alphabet: a b ;\na -> b / _ a ;\n");
  CHECK(SameWeightedSets(
      OracleRewrite(look.rules[0], look.alphabet, L(look.alphabet, "aaa")),
      One(look.alphabet, "bba")));

  const RuleSet nasal = Parse(
      "alphabet: b m n p N a ;\n"
      "N -> <0.10536051565782628> m + <2.3025850929940459> n / _ [b m p] ;\n");
  const Alphabet &nal = nasal.alphabet;
  const RuleOracle n(nasal.rules[0], nal);
  WeightedStringSet want;
  want[L(nal, "mb")] = Weight(-std::log(0.9));
  want[L(nal, "nb")] = Weight(-std::log(0.1));
  CHECK(SameWeightedSets(n.Rewrite(L(nal, "Nb")), want));
  CHECK(SameWeightedSets(n.Rewrite(L(nal, "Na")), One(nal, "Na")));
  CHECK(n.PsiStrings().size() == 2);
}

TEST_CASE("oracle keeps every match length") {
  const RuleSet rs = Parse("alphabet: a b c ;\na+ -> c / _ ;\n");
  const Alphabet &al = rs.alphabet;
  WeightedStringSet want;
  for (const char *s : {"c", "cc", "ccc"}) want[L(al, s)] = Weight::One();
  CHECK(SameWeightedSets(OracleRewrite(rs.rules[0], al, L(al, "aaa")), want));
}

TEST_CASE("oracle rejects infinite replacements") {
  const RuleSet rs = Parse("alphabet: a b ;\na -> b* a ;\n");
  CHECK(CodeOf([&] { RuleOracle(rs.rules[0], rs.alphabet); }) ==
        ErrorCode::kDivergent);
}

TEST_CASE("apply examples") {
  const Alphabet al({"a", "b", "c", "d"});
  const Transducer id = IdTransducer(UniversalAcceptor(al.Labels()));
  CHECK(SameWeightedSets(Apply(id, L(al, "ab")).outputs, One(al, "ab")));

  const RuleSet between = Parse("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const Transducer t = CompileRuleset(between);
  CHECK(SameWeightedSets(Apply(t, L(al, "cadcad")).outputs,
                         One(al, "cbdcbd")));

  const RuleSet nasal = Parse(
      "alphabet: b m n p N a ;\n"
      "N -> <0.10536051565782628> m + <2.3025850929940459> n / _ [b m p] ;\n");
  CHECK(SameWeightedSets(
      Apply(CompileRuleset(nasal), L(nasal.alphabet, "Na")).outputs,
      One(nasal.alphabet, "Na")));

  // a -> b* produces infinitely many outputs.
  const Transducer inf =
      CrossProduct(StringAcceptor(L(al, "a")),
                   CompileRegex(ParseRegex("b*", al), al));
  const ApplyResult r = Apply(inf, L(al, "a"), 10);
  CHECK(r.truncated);
  CHECK(r.outputs.size() == 10);
  CHECK(Apply(inf, L(al, "b"), 10).outputs.empty());
}

TEST_CASE("equivalent_on detects a removed final state") {
  const RuleSet rs = Parse("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const Transducer t = CompileRuleset(rs);
  const EquivalenceReport self = EquivalentOn(t, t, rs.alphabet, 5);
  CHECK(self.equivalent);
  CHECK(self.strings_checked == 1 + 4 + 16 + 64 + 256 + 1024);

  Transducer broken = t;
  for (StateId s = 0; s < static_cast<StateId>(broken.NumStates()); ++s) {
    if (broken.IsFinal(s)) {
      broken.SetFinal(s, Weight::Zero());
      break;
    }
  }
  const EquivalenceReport rep = EquivalentOn(t, broken, rs.alphabet, 5);
  CHECK_FALSE(rep.equivalent);
  CHECK(rep.mismatches > 0);
  CHECK_FALSE(rep.counterexamples.empty());
  CHECK(rep.counterexamples.size() <= 10);
  CHECK_FALSE(rep.Describe(rs.alphabet).empty());
}

TEST_CASE("runner and apply agree") {
  Rng rng(71);
  std::mt19937_64 pick(72);
  for (int i = 0; i < 20; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 3);
    const Transducer t = CompileRule(RandomRule(rng, al), al).transducer;
    TransducerRunner runner(t);
    ForEachString(al.Labels(), 5, [&](const LabelString &s) {
      const ApplyResult a = Apply(t, s);
      if (a.truncated) return;
      if (!SameWeightedSets(runner.Run(s), a.outputs)) {
        FAIL("runner and apply differ on " << al.Render(s));
      }
    });
    CHECK_FALSE(runner.truncated());
  }
}

TEST_CASE("oracle is total") {
  Rng rng(73);
  for (int i = 0; i < 40; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 3);
    const RuleOracle o(RandomRule(rng, al), al);
    ForEachString(al.Labels(), 5, [&](const LabelString &s) {
      if (o.Rewrite(s).empty()) FAIL("empty output for " << al.Render(s));
    });
  }
}

// For phi a single symbol and empty contexts every occurrence is rewritten
// independently, so outputs are products of psi strings.
TEST_CASE("output weights add up over applications") {
  Rng rng(74);
  for (int i = 0; i < 30; ++i) {
    const Alphabet al = LetterAlphabet(3);
    Rule rule;
    rule.phi = Expr::Symbol("a");
    rule.psi = RandomSeries(rng, al, 2, true);
    if (IsEmptyLanguage(SeriesToWfsa(rule.psi, al))) continue;
    const RuleOracle o(rule, al);
    const WeightedStringSet &psi = o.PsiStrings();
    if (psi.size() > 4) continue;
    const Transducer t = CompileRule(rule, al).transducer;
    ForEachString(al.Labels(), 4, [&](const LabelString &s) {
      WeightedStringSet want{{{}, Weight::One()}};
      for (const Label l : s) {
        WeightedStringSet next;
        for (const auto &[prefix, w] : want) {
          if (l == al.Lookup("a")) {
            for (const auto &[p, pw] : psi) {
              LabelString x = prefix;
              x.insert(x.end(), p.begin(), p.end());
              testing::Relax(next, x, Times(w, pw));
            }
          } else {
            LabelString x = prefix;
            x.push_back(l);
            testing::Relax(next, x, w);
          }
        }
        want = std::move(next);
      }
      const WeightedStringSet got = o.Rewrite(s);
      if (!SameWeightedSets(got, want)) {
        FAIL(ToString(rule) << " on " << al.Render(s) << ": "
                            << FormatWeightedSet(got, al) << " vs "
                            << FormatWeightedSet(want, al));
      }
      const ApplyResult a = Apply(t, s);
      CHECK(SameWeightedSets(a.outputs, want));
    });
  }
}

}  // namespace
}  // namespace rwc
