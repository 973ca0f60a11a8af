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
#include <set>
#include <string>

#include "doctest.h"
#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/instrument.h"
#include "rwc/oracle.h"
#include "rwc/random_rules.h"
#include "rwc/rulespec.h"
#include "test_util.h"

namespace rwc {
namespace {

using testing::CodeOf;
using testing::L;

const Alphabet &Abcd() {
  static const Alphabet a({"a", "b", "c", "d"});
  return a;
}

// Single-character symbols plus the markers "<1", "<2" and ">".
LabelString Marked(const Alphabet &al, const std::string &text) {
  LabelString out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 2, "<1") == 0) {
      out.push_back(Label::Lb1());
      ++i;
    } else if (text.compare(i, 2, "<2") == 0) {
      out.push_back(Label::Lb2());
      ++i;
    } else if (text[i] == '>') {
      out.push_back(Label::Rb());
    } else {
      out.push_back(al.Lookup(std::string(1, text[i])));
    }
  }
  return out;
}

WeightedStringSet Run(const Transducer &t, const LabelString &in) {
  const ApplyResult r = Apply(t, in);
  REQUIRE_FALSE(r.truncated);
  return r.outputs;
}

WeightedStringSet Set(const Alphabet &al,
                      std::initializer_list<std::pair<std::string, double>>
                          items) {
  WeightedStringSet out;
  for (const auto &[s, w] : items) out[Marked(al, s)] = Weight(w);
  return out;
}

Rule MakeRule(const Alphabet &al, const std::string &phi,
              const std::string &psi, const std::string &lambda,
              const std::string &rho) {
  Rule r;
  r.phi = ParseRegex(phi, al);
  r.psi = ParseSeries(psi, al);
  r.lambda = lambda.empty() ? Expr::Epsilon() : ParseRegex(lambda, al);
  r.rho = rho.empty() ? Expr::Epsilon() : ParseRegex(rho, al);
  return r;
}

TEST_CASE("build_r examples") {
  const Alphabet &al = Abcd();
  const Transducer c = BuildR(Expr::Symbol("c"), al);
  CHECK(SameWeightedSets(Run(c, L(al, "acca")), Set(al, {{"a>c>ca", 0}})));
  const Transducer eps = BuildR(Expr::Epsilon(), al);
  CHECK(SameWeightedSets(Run(eps, L(al, "ab")), Set(al, {{">a>b>", 0}})));
  const Transducer cd = BuildR(ParseRegex("c d", al), al);
  CHECK(SameWeightedSets(Run(cd, L(al, "acd")), Set(al, {{"a>cd", 0}})));
}

TEST_CASE("build_f examples") {
  const Alphabet &al = Abcd();
  const Transducer a = BuildF(Expr::Symbol("a"), al);
  CHECK(SameWeightedSets(Run(a, Marked(al, "a>c")),
                         Set(al, {{"<1a>c", 0}, {"<2a>c", 0}})));
  CHECK(SameWeightedSets(Run(a, L(al, "ab")), Set(al, {{"ab", 0}})));
  const Transducer ab = BuildF(ParseRegex("a b", al), al);
  CHECK(SameWeightedSets(Run(ab, Marked(al, "a>b>")),
                         Set(al, {{"<1a>b>", 0}, {"<2a>b>", 0}})));
}

TEST_CASE("build_replace examples") {
  const Alphabet &al = Abcd();
  const Transducer t =
      BuildReplace(Expr::Symbol("a"), StringAcceptor(L(al, "b")), al);
  CHECK(SameWeightedSets(Run(t, Marked(al, "<1a>")), Set(al, {{"<1b", 0}})));
  CHECK(SameWeightedSets(Run(t, Marked(al, "<2a")), Set(al, {{"<2a", 0}})));
  CHECK(SameWeightedSets(Run(t, Marked(al, ">")), Set(al, {{"", 0}})));
  CHECK(Run(t, Marked(al, "<1a")).empty());

  const Alphabet nasal({"b", "m", "n", "p", "N", "a"});
  const double alpha = -std::log(0.9), beta = -std::log(0.1);
  const Expr psi = Expr::Union({Expr::Weighted(alpha, Expr::Symbol("m")),
                                Expr::Weighted(beta, Expr::Symbol("n"))});
  const Transducer n =
      BuildReplace(Expr::Symbol("N"), SeriesToWfsa(psi, nasal), nasal);
  LabelString in{Label::Lb1(), nasal.Lookup("N"), Label::Rb()};
  WeightedStringSet want;
  want[{Label::Lb1(), nasal.Lookup("m")}] = Weight(alpha);
  want[{Label::Lb1(), nasal.Lookup("n")}] = Weight(beta);
  CHECK(SameWeightedSets(Run(n, in), want));

  CHECK(CodeOf([&] {
          BuildReplace(ParseRegex("a*", al), StringAcceptor(L(al, "b")), al);
        }) == ErrorCode::kPhiNullable);
  CHECK(CodeOf([&] {
          BuildReplace(Expr::Symbol("a"), EmptyAcceptor(), al);
        }) == ErrorCode::kPsiEmpty);
}

TEST_CASE("build_l1 and build_l2 examples") {
  const Alphabet &al = Abcd();
  const Transducer l1 = BuildL1(Expr::Symbol("c"), al);
  CHECK(SameWeightedSets(Run(l1, Marked(al, "c<1b")), Set(al, {{"cb", 0}})));
  CHECK(Run(l1, Marked(al, "a<1b")).empty());
  CHECK(SameWeightedSets(Run(l1, Marked(al, "a<2b")), Set(al, {{"a<2b", 0}})));
  const Transducer l1e = BuildL1(Expr::Epsilon(), al);
  CHECK(SameWeightedSets(Run(l1e, Marked(al, "<1a<1b<1")),
                         Set(al, {{"ab", 0}})));

  const Transducer l2 = BuildL2(Expr::Symbol("c"), al);
  CHECK(SameWeightedSets(Run(l2, Marked(al, "a<2b")), Set(al, {{"ab", 0}})));
  CHECK(Run(l2, Marked(al, "c<2b")).empty());
  const Transducer l2none = BuildL2(Expr::Class({}), al);
  CHECK(SameWeightedSets(Run(l2none, Marked(al, "<2a<2c<2")),
                         Set(al, {{"ac", 0}})));
}

TEST_CASE("compile_rule examples") {
  const Alphabet &al = Abcd();
  const Transducer t =
      CompileRule(MakeRule(al, "a", "b", "c", "d"), al).transducer;
  CHECK(SameWeightedSets(Run(t, L(al, "cad")), Set(al, {{"cbd", 0}})));
  CHECK(SameWeightedSets(Run(t, L(al, "ad")), Set(al, {{"ad", 0}})));
  CHECK(SameWeightedSets(Run(t, L(al, "cadcad")), Set(al, {{"cbdcbd", 0}})));

  const Alphabet ab({"a", "b"});
  const Transducer feed =
      CompileRule(MakeRule(ab, "a", "b", "b", ""), ab).transducer;
  CHECK(SameWeightedSets(Run(feed, L(ab, "baa")), Set(ab, {{"bbb", 0}})));
  CHECK(SameWeightedSets(Run(feed, L(ab, "aaa")), Set(ab, {{"aaa", 0}})));

  const RuleSet nasal = ParseRuleFile(
      "alphabet: b m n p N a ;\n"
      "N -> <0.10536051565782628> m + <2.3025850929940459> n / _ [b m p] ;\n");
  const Transducer n = CompileRule(nasal.rules[0], nasal.alphabet).transducer;
  const Alphabet &nal = nasal.alphabet;
  WeightedStringSet want;
  want[L(nal, "mb")] = Weight(-std::log(0.9));
  want[L(nal, "nb")] = Weight(-std::log(0.1));
  CHECK(SameWeightedSets(Run(n, L(nal, "Nb")), want));
  CHECK(SameWeightedSets(Run(n, L(nal, "Na")),
                         WeightedStringSet{{L(nal, "Na"), Weight::One()}}));

  CHECK(CodeOf([&] { CompileRule(MakeRule(al, "a?", "b", "", ""), al); }) ==
        ErrorCode::kPhiNullable);
}

TEST_CASE("compile_ruleset examples") {
  const RuleSet one = ParseRuleFile("alphabet: a b c d ;\na -> b / c _ d ;\n");
  const Transducer single = CompileRuleset(one);
  const Transducer direct =
      CompileRule(one.rules[0], one.alphabet).transducer;
  CHECK(EquivalentOn(single, direct, one.alphabet, 6).equivalent);

  const RuleSet chain =
      ParseRuleFile("alphabet: a b c ;\na -> b / _ ;\nb -> c / _ ;\n");
  const Transducer t = CompileRuleset(chain);
  CHECK(SameWeightedSets(Run(t, L(chain.alphabet, "a")),
                         WeightedStringSet{{L(chain.alphabet, "c"),
                                            Weight::One()}}));

  const RuleSet none = ParseRuleFile("alphabet: a b ;\n");
  const Transducer id = CompileRuleset(none);
  ForEachString(none.alphabet.Labels(), 5, [&](const LabelString &s) {
    CHECK(SameWeightedSets(Run(id, s), WeightedStringSet{{s, Weight::One()}}));
  });
}

TEST_CASE("compiled rules: markers, totality and the determinization budget") {
  Rng rng(51);
  std::mt19937_64 pick(52);
  for (int i = 0; i < 30; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 3);
    const Rule rule = RandomRule(rng, al);
    const uint64_t before = ThreadOpCounters().determinizations;
    const CompiledRule c =
        CompileRule(rule, al, CompileOptions{.compact = false});
    CHECK(c.stats.determinizations == 3);
    CHECK(ThreadOpCounters().determinizations - before == 3);
    CHECK_FALSE(HasMarkerLabels(c.transducer));
    CHECK_FALSE(HasMarkerLabels(CompileRule(rule, al).transducer));

    TransducerRunner runner(c.transducer);
    const std::vector<Label> labels = al.Labels();
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<size_t> sym(0, labels.size() - 1);
    for (int j = 0; j < 200; ++j) {
      LabelString s(static_cast<size_t>(len(pick)));
      for (Label &l : s) l = labels[sym(pick)];
      if (runner.Run(s).empty()) {
        FAIL("no output for " << al.Render(s) << " under " << ToString(rule));
      }
    }
  }
}

TEST_CASE("compiled rules agree with the oracle") {
  Rng rng(53);
  for (int i = 0; i < 25; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 3);
    const Rule rule = RandomRule(rng, al);
    const Transducer t = CompileRule(rule, al).transducer;
    const RuleOracle oracle(rule, al);
    const EquivalenceReport rep = EquivalentOn(
        t, [&](std::span<const Label> s) { return oracle.Rewrite(s); }, al,
        6);
    if (!rep.equivalent) {
      FAIL(ToString(rule) << "\n" << rep.Describe(al));
    }
  }
}

TEST_CASE("fixed-length phi and a single psi string give one output") {
  Rng rng(54);
  std::mt19937_64 pick(55);
  for (int i = 0; i < 20; ++i) {
    const Alphabet al = LetterAlphabet(2 + i % 2);
    const std::vector<std::string> names = al.names();
    std::uniform_int_distribution<size_t> sym(0, names.size() - 1);
    std::uniform_int_distribution<int> len(1, 2);
    std::string phi, psi;
    for (int k = len(pick); k > 0; --k) phi += names[sym(pick)] + " ";
    for (int k = len(pick); k > 0; --k) psi += names[sym(pick)] + " ";
    Rule rule = MakeRule(al, phi, psi, "", "");
    rule.lambda = RandomRegex(rng, al, 1);
    rule.rho = RandomRegex(rng, al, 1);
    const Transducer t = CompileRule(rule, al).transducer;
    TransducerRunner runner(t);
    ForEachString(al.Labels(), 6, [&](const LabelString &s) {
      if (runner.Run(s).size() != 1) {
        FAIL(ToString(rule) << " on " << al.Render(s));
      }
    });
  }
}

}  // namespace
}  // namespace rwc
