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

#include <random>
#include <set>

#include "doctest.h"
#include "rwc/boolean.h"
#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/fsm.h"
#include "rwc/random_rules.h"
#include "rwc/rulespec.h"
#include "test_util.h"

namespace rwc {
namespace {

using testing::AllStrings;
using testing::EnumerateLanguage;
using testing::EnumerateRelation;
using testing::L;
using testing::SameMaps;

const Alphabet &Ab() {
  static const Alphabet a({"a", "b"});
  return a;
}
const Alphabet &Abc() {
  static const Alphabet a({"a", "b", "c"});
  return a;
}

std::set<LabelString> Members(const Automaton &a, size_t max_len) {
  std::set<LabelString> out;
  for (const auto &[s, w] : EnumerateLanguage(a, max_len)) out.insert(s);
  return out;
}

Automaton Unweighted(std::mt19937_64 &rng, std::span<const Label> labels,
                     double epsilon = 0.25) {
  testing::RandomMachineOptions o{4, 9, epsilon};
  o.weighted = false;
  return testing::RandomAutomaton(rng, labels, o);
}

Automaton SigmaStar(const Expr &beta, const Alphabet &al) {
  const std::vector<Label> labels = al.Labels();
  return Concat(UniversalAcceptor(labels), CompileRegex(beta, al));
}

TEST_CASE("determinize examples") {
  const std::vector<Label> labels = Ab().Labels();
  const Dfa d = Determinize(SigmaStar(Expr::Symbol("b"), Ab()));
  CHECK(d.NumStates() == 2);
  CHECK(IsComplete(d, labels));
  CHECK_FALSE(d.fsa().HasEpsilons());
  CHECK(Members(d.fsa(), 5) ==
        Members(SigmaStar(Expr::Symbol("b"), Ab()), 5));

  const Dfa again = Determinize(d.fsa());
  CHECK(Members(again.fsa(), 5) == Members(d.fsa(), 5));
  CHECK(again.NumStates() == d.NumStates());
}

TEST_CASE("determinize preserves random languages and is deterministic") {
  std::mt19937_64 rng(1);
  const std::vector<Label> labels = Abc().Labels();
  for (int i = 0; i < 200; ++i) {
    const Automaton a = Unweighted(rng, labels);
    const Dfa d = Determinize(a);
    CHECK(Members(d.fsa(), 5) == Members(a, 5));
    CHECK_NOTHROW(Dfa::Certify(d.fsa()));
  }
  Automaton nd;
  nd.AddState();
  nd.AddState();
  nd.SetStart(0);
  nd.AddArc(0, {Ab().Lookup("a"), Weight::One(), 0});
  nd.AddArc(0, {Ab().Lookup("a"), Weight::One(), 1});
  CHECK(testing::CodeOf([&] { Dfa::Certify(nd); }) ==
        ErrorCode::kNotDeterministic);
}

TEST_CASE("is_complete and complete") {
  const std::vector<Label> labels = Ab().Labels();
  Automaton lone;
  lone.AddState();
  lone.SetStart(0);
  const Dfa bare = Dfa::Certify(lone);
  CHECK_FALSE(IsComplete(bare, labels));
  CHECK(IsComplete(Complete(bare, labels), labels));

  const Dfa full = Determinize(SigmaStar(Expr::Symbol("b"), Ab()));
  CHECK(Complete(full, labels).NumStates() == full.NumStates());

  const Dfa one = Determinize(StringAcceptor(L(Ab(), "a")));
  const Dfa done = Complete(one, labels);
  CHECK(done.NumStates() == one.NumStates() + 1);
  CHECK(IsComplete(done, labels));

  std::mt19937_64 rng(2);
  const std::vector<Label> abc = Abc().Labels();
  for (int i = 0; i < 150; ++i) {
    const Dfa d = Determinize(Unweighted(rng, abc));
    const Dfa c = Complete(d, abc);
    CHECK(IsComplete(c, abc));
    CHECK(Members(c.fsa(), 5) == Members(d.fsa(), 5));
  }
}

TEST_CASE("complement examples and random membership") {
  const std::vector<Label> labels = Abc().Labels();
  const Dfa all = Determinize(UniversalAcceptor(labels));
  CHECK(IsEmptyLanguage(Complement(all, labels).fsa()));

  std::mt19937_64 rng(3);
  const std::vector<LabelString> strings = AllStrings(labels, 5);
  for (int i = 0; i < 150; ++i) {
    const Dfa d = Determinize(Unweighted(rng, labels));
    const Dfa c = Complement(d, labels);
    for (const LabelString &s : strings) {
      if (Accepts(d.fsa(), s) == Accepts(c.fsa(), s)) {
        FAIL("complement membership is not exclusive on instance " << i);
      }
    }
    CHECK(Members(Complement(c, labels).fsa(), 5) == Members(d.fsa(), 5));
  }
}

TEST_CASE("complement respects an extended working alphabet") {
  const std::vector<Label> ext = {Label::Rb(), Ab().Lookup("a"),
                                  Ab().Lookup("b")};
  const Dfa d = Determinize(UniversalAcceptor(Ab().Labels()));
  const Dfa c = Complement(d, ext);
  CHECK(Accepts(c.fsa(), LabelString{Label::Rb()}));
  CHECK_FALSE(Accepts(c.fsa(), L(Ab(), "ab")));
}

TEST_CASE("intersect examples and random membership") {
  const std::vector<Label> labels = Abc().Labels();
  const Automaton b = CompileRegex(ParseRegex("a b* + c", Abc()), Abc());
  CHECK(Members(Intersect(UniversalAcceptor(labels), b), 5) == Members(b, 5));
  CHECK(IsEmptyLanguage(Intersect(StringAcceptor(L(Abc(), "a")),
                                  StringAcceptor(L(Abc(), "b")))));

  std::mt19937_64 rng(4);
  const std::vector<LabelString> strings = AllStrings(labels, 5);
  for (int i = 0; i < 150; ++i) {
    const Automaton x = Unweighted(rng, labels);
    const Automaton y = Unweighted(rng, labels);
    const Automaton z = Intersect(x, y);
    for (const LabelString &s : strings) {
      if (Accepts(z, s) != (Accepts(x, s) && Accepts(y, s))) {
        FAIL("intersection membership differs on instance " << i);
      }
    }
  }
}

TEST_CASE("subtract examples and random membership") {
  const std::vector<Label> labels = Abc().Labels();
  const Automaton a = CompileRegex(ParseRegex("(a + b)* c", Abc()), Abc());
  CHECK(Members(Subtract(a, EmptyAcceptor()), 5) == Members(a, 5));
  CHECK(IsEmptyLanguage(Subtract(a, a)));

  std::mt19937_64 rng(5);
  const std::vector<LabelString> strings = AllStrings(labels, 5);
  for (int i = 0; i < 150; ++i) {
    const Automaton x = Unweighted(rng, labels);
    const Automaton y = Unweighted(rng, labels);
    const Automaton z = Subtract(x, y);
    for (const LabelString &s : strings) {
      if (Accepts(z, s) != (Accepts(x, s) && !Accepts(y, s))) {
        FAIL("difference membership differs on instance " << i);
      }
    }
  }
}

TEST_CASE("subtract and intersect recombine to the original language") {
  std::mt19937_64 rng(6);
  const std::vector<Label> labels = Abc().Labels();
  for (int i = 0; i < 150; ++i) {
    const Automaton a = Unweighted(rng, labels);
    const Automaton b = Unweighted(rng, labels);
    CHECK(Members(Union(Subtract(a, b), Intersect(a, b)), 5) ==
          Members(a, 5));
  }
}

TEST_CASE("minimize examples") {
  const std::vector<Label> labels = Ab().Labels();
  const Dfa m = Minimize(Determinize(SigmaStar(Expr::Symbol("b"), Ab())));
  CHECK(Minimize(m).NumStates() == m.NumStates());
  CHECK(Minimize(m).NumArcs() == m.NumArcs());

  // Two final states with identical futures.
  Automaton a;
  for (int i = 0; i < 3; ++i) a.AddState();
  a.SetStart(0);
  a.SetFinal(1);
  a.SetFinal(2);
  a.AddArc(0, {Ab().Lookup("a"), Weight::One(), 1});
  a.AddArc(0, {Ab().Lookup("b"), Weight::One(), 2});
  const Dfa merged = Minimize(Dfa::Certify(a));
  CHECK(merged.NumStates() == 2);
  CHECK(Members(merged.fsa(), 3) == Members(a, 3));
}

TEST_CASE("minimize on random machines") {
  std::mt19937_64 rng(7);
  const std::vector<Label> labels = Abc().Labels();
  for (int i = 0; i < 200; ++i) {
    const Dfa d = Determinize(Unweighted(rng, labels));
    const Dfa m = Minimize(d);
    CHECK(Members(m.fsa(), 5) == Members(d.fsa(), 5));
    CHECK(m.NumStates() <= d.NumStates());
    const Dfa shuffled = Dfa::Certify(testing::Shuffled(d.fsa(), rng));
    CHECK(Minimize(shuffled).NumStates() == m.NumStates());
    CHECK(Minimize(shuffled).NumArcs() == m.NumArcs());
  }
}

TEST_CASE("determinized sigma-star beta is complete") {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Alphabet &al = i % 2 ? Ab() : Abc();
    const Expr beta = RandomRegex(rng, al, 3);
    const Dfa d = Determinize(SigmaStar(beta, al));
    if (!IsComplete(d, al.Labels())) {
      FAIL("incomplete for beta = " << ToString(beta));
    }
  }
}

TEST_CASE("compact_transducer examples") {
  const std::vector<Label> labels = Ab().Labels();
  // Identity over {a,b}* with a redundant copy of its only state.
  Transducer t;
  t.AddState();
  t.AddState();
  t.SetStart(0);
  t.SetFinal(0);
  t.SetFinal(1);
  for (const Label l : labels) {
    t.AddArc(0, TransducerArc(l, l, Weight::One(), 1));
    t.AddArc(1, TransducerArc(l, l, Weight::One(), 0));
  }
  const Transducer c = CompactTransducer(t);
  CHECK(c.NumStates() == 1);
  CHECK(SameMaps(EnumerateRelation(c, 4, 4), EnumerateRelation(t, 4, 4)));
  const Transducer cc = CompactTransducer(c);
  CHECK(cc.NumStates() == c.NumStates());
  CHECK(cc.NumArcs() == c.NumArcs());
}

TEST_CASE("compact_transducer on random and compiled machines") {
  std::mt19937_64 rng(9);
  const std::vector<Label> labels = Abc().Labels();
  for (int i = 0; i < 150; ++i) {
    const Transducer t = testing::RandomTransducer(rng, labels, {4, 8, 0.3});
    const Transducer c = CompactTransducer(t);
    CHECK(SameMaps(EnumerateRelation(c, 4, 4), EnumerateRelation(t, 4, 4)));
    const Transducer cc = CompactTransducer(c);
    CHECK(cc.NumStates() == c.NumStates());
    CHECK(cc.NumArcs() == c.NumArcs());
  }
  Rng rrng(10);
  for (int i = 0; i < 25; ++i) {
    const Alphabet &al = i % 2 ? Ab() : Abc();
    const Rule rule = RandomRule(rrng, al);
    const Transducer raw =
        CompileRule(rule, al, CompileOptions{.compact = false}).transducer;
    const Transducer small = CompactTransducer(raw);
    CHECK(small.NumStates() <= raw.NumStates());
    CHECK(SameMaps(EnumerateRelation(small, 5, 10),
                   EnumerateRelation(raw, 5, 10)));
  }
}

}  // namespace
}  // namespace rwc
