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

#include "rwc/random_rules.h"

#include <cstdlib>
#include <functional>
#include <string>

#include "rwc/boolean.h"
#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

int Uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(Rng &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

Expr Leaf(Rng &rng, const Alphabet &alphabet) {
  const auto &names = alphabet.names();
  const int n = static_cast<int>(names.size());
  if (n > 1 && Chance(rng, 0.2)) {
    std::vector<std::string> cls;
    for (const std::string &s : names) {
      if (Chance(rng, 0.5)) cls.push_back(s);
    }
    if (cls.size() >= 2) return Expr::Class(std::move(cls));
  }
  return Expr::Symbol(names[Uniform(rng, 0, n - 1)]);
}

Expr Build(Rng &rng, const Alphabet &alphabet, int depth, bool series,
           bool finite) {
  if (depth == 0 || Chance(rng, 0.25)) {
    Expr leaf = Leaf(rng, alphabet);
    if (series && Chance(rng, 0.5)) {
      const double w = Uniform(rng, 0, 40) / 8.0;
      return Expr::Weighted(w, std::move(leaf));
    }
    return leaf;
  }
  const int kinds = finite ? 3 : 5;
  switch (Uniform(rng, 0, kinds - 1)) {
    case 0: {
      std::vector<Expr> c;
      const int k = Uniform(rng, 2, 3);
      for (int i = 0; i < k; ++i) {
        c.push_back(Build(rng, alphabet, depth - 1, series, finite));
      }
      return Expr::Concat(std::move(c));
    }
    case 1: {
      std::vector<Expr> c;
      const int k = Uniform(rng, 2, 3);
      for (int i = 0; i < k; ++i) {
        c.push_back(Build(rng, alphabet, depth - 1, series, finite));
      }
      return Expr::Union(std::move(c));
    }
    case 2:
      return Expr::Optional(Build(rng, alphabet, depth - 1, series, finite));
    case 3:
      return Expr::Star(Build(rng, alphabet, depth - 1, series, finite));
    default:
      return Expr::Plus(Build(rng, alphabet, depth - 1, series, finite));
  }
}

// Number of strings of a finite language, capped at cap + 1.
int CountStrings(const Automaton &a, int cap) {
  const Dfa d = Minimize(Determinize(a));
  const Automaton &f = d.fsa();
  std::vector<long> count(f.NumStates(), -1);
  std::function<long(StateId)> rec = [&](StateId s) -> long {
    if (count[s] >= 0) return count[s];
    count[s] = cap + 1;  // a cycle is an infinite language
    long n = f.IsFinal(s) ? 1 : 0;
    for (const AcceptorArc &arc : f.Arcs(s)) {
      n = std::min<long>(cap + 1, n + rec(arc.nextstate));
    }
    return count[s] = n;
  };
  if (f.Start() == kNoStateId) return 0;
  return static_cast<int>(rec(f.Start()));
}

}  // namespace

Alphabet LetterAlphabet(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  return Alphabet(std::move(names));
}

Expr RandomRegex(Rng &rng, const Alphabet &alphabet, int max_depth) {
  return Build(rng, alphabet, max_depth, false, false);
}

Expr RandomSeries(Rng &rng, const Alphabet &alphabet, int max_depth,
                  bool finite) {
  return Build(rng, alphabet, max_depth, true, finite);
}

Rule RandomRule(Rng &rng, const Alphabet &alphabet,
                const RandomRuleOptions &options) {
  while (true) {
    Rule r;
    r.phi = RandomRegex(rng, alphabet, options.max_depth);
    r.psi = options.weighted
                ? RandomSeries(rng, alphabet, options.max_depth, true)
                : Build(rng, alphabet, options.max_depth, false, true);
    if (!Chance(rng, options.empty_context)) {
      r.lambda = RandomRegex(rng, alphabet, options.max_depth);
    }
    if (!Chance(rng, options.empty_context)) {
      r.rho = RandomRegex(rng, alphabet, options.max_depth);
    }
    if (options.max_psi_strings > 0 &&
        CountStrings(CompileRegex(r.psi, alphabet), options.max_psi_strings) >
            options.max_psi_strings) {
      continue;
    }
    try {
      ValidateRule(r, alphabet);
      return r;
    } catch (const Error &) {
      // nullable phi; draw again
    }
  }
}

uint64_t SeedFromEnv(uint64_t fallback) {
  const char *env = std::getenv("RWC_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  return std::strtoull(env, nullptr, 10);
}

}  // namespace rwc
