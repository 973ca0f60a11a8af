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

#include "rwc/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

// Unweighted epsilon-free NFA over user symbols with bitset state sets.
class BitNfa {
 public:
  using Set = std::vector<uint64_t>;

  BitNfa(const Automaton &a, size_t num_symbols) {
    const Automaton e = RemoveEpsilon(a);
    n_ = e.NumStates();
    words_ = (n_ + 63) / 64;
    symbols_ = num_symbols;
    succ_.assign(n_ * symbols_ * words_, 0);
    start_.assign(words_, 0);
    final_.assign(words_, 0);
    if (e.Start() != kNoStateId) Set1(start_, e.Start());
    for (StateId s = 0; s < static_cast<StateId>(n_); ++s) {
      if (e.IsFinal(s)) Set1(final_, s);
      for (const AcceptorArc &arc : e.Arcs(s)) {
        const size_t sym = arc.label.SymbolId();
        uint64_t *row = &succ_[(s * symbols_ + sym) * words_];
        row[arc.nextstate / 64] |= uint64_t{1} << (arc.nextstate % 64);
      }
    }
  }

  const Set &start() const { return start_; }

  bool Empty(const Set &s) const {
    for (uint64_t w : s) {
      if (w) return false;
    }
    return true;
  }

  bool HasFinal(const Set &s) const {
    for (size_t i = 0; i < words_; ++i) {
      if (s[i] & final_[i]) return true;
    }
    return false;
  }

  void Step(const Set &from, Label l, Set &to) const {
    to.assign(words_, 0);
    const size_t sym = l.SymbolId();
    for (size_t i = 0; i < words_; ++i) {
      uint64_t w = from[i];
      while (w) {
        const size_t s = i * 64 + std::countr_zero(w);
        w &= w - 1;
        const uint64_t *row = &succ_[(s * symbols_ + sym) * words_];
        for (size_t j = 0; j < words_; ++j) to[j] |= row[j];
      }
    }
  }

 private:
  static void Set1(Set &s, StateId q) {
    s[q / 64] |= uint64_t{1} << (q % 64);
  }

  size_t n_ = 0, words_ = 0, symbols_ = 0;
  std::vector<uint64_t> succ_;
  Set start_, final_;
};

WeightedStringSet EnumerateFinite(const Automaton &wfsa, size_t bound) {
  const Automaton a = RemoveEpsilon(Trim(wfsa));
  WeightedStringSet out;
  if (a.Start() == kNoStateId || IsEmptyLanguage(a)) return out;
  // Trimmed and epsilon-free: the language is infinite iff there is a cycle.
  const size_t n = a.NumStates();
  std::vector<int> color(n, 0);
  std::vector<std::pair<StateId, size_t>> stack{{a.Start(), 0}};
  color[a.Start()] = 1;
  while (!stack.empty()) {
    auto &[s, i] = stack.back();
    if (i == a.NumArcs(s)) {
      color[s] = 2;
      stack.pop_back();
      continue;
    }
    const StateId next = a.Arcs(s)[i++].nextstate;
    if (color[next] == 1) {
      throw Error(ErrorCode::kDivergent,
                  "replacement denotes infinitely many strings");
    }
    if (color[next] == 0) {
      color[next] = 1;
      stack.push_back({next, 0});
    }
  }
  LabelString buf;
  std::function<void(StateId, Weight)> walk = [&](StateId s, Weight w) {
    if (a.IsFinal(s)) {
      const Weight total = Times(w, a.Final(s));
      auto [it, inserted] = out.emplace(buf, total);
      if (!inserted) it->second = Plus(it->second, total);
      if (out.size() > bound) {
        throw Error(ErrorCode::kDivergent,
                    "replacement denotes more than " + std::to_string(bound) +
                        " strings");
      }
    }
    for (const AcceptorArc &arc : a.Arcs(s)) {
      buf.push_back(arc.label);
      walk(arc.nextstate, Times(w, arc.weight));
      buf.pop_back();
    }
  };
  walk(a.Start(), Weight::One());
  return out;
}

void Relax(WeightedStringSet &set, LabelString key, Weight w) {
  auto [it, inserted] = set.emplace(std::move(key), w);
  if (!inserted) it->second = Plus(it->second, w);
}

}  // namespace

struct RuleOracle::Impl {
  BitNfa phi;
  BitNfa rev_lambda;
  BitNfa rho;
  WeightedStringSet psi;

  // Ends e > pos such that input[pos, e) is in L(phi) and some prefix of
  // input[e, n) is in L(rho).
  std::vector<size_t> Sites(std::span<const Label> in, size_t pos) const {
    std::vector<size_t> ends;
    BitNfa::Set cur = phi.start(), next;
    for (size_t e = pos; e < in.size(); ++e) {
      phi.Step(cur, in[e], next);
      cur.swap(next);
      if (phi.Empty(cur)) break;
      if (phi.HasFinal(cur) && RhoFollows(in, e + 1)) ends.push_back(e + 1);
    }
    return ends;
  }

  bool RhoFollows(std::span<const Label> in, size_t pos) const {
    BitNfa::Set cur = rho.start(), next;
    if (rho.HasFinal(cur)) return true;
    for (size_t i = pos; i < in.size(); ++i) {
      rho.Step(cur, in[i], next);
      cur.swap(next);
      if (rho.Empty(cur)) return false;
      if (rho.HasFinal(cur)) return true;
    }
    return false;
  }

  // Some suffix of `out` is in L(lambda).
  bool LambdaEnds(const LabelString &out) const {
    BitNfa::Set cur = rev_lambda.start(), next;
    if (rev_lambda.HasFinal(cur)) return true;
    for (size_t i = out.size(); i-- > 0;) {
      rev_lambda.Step(cur, out[i], next);
      cur.swap(next);
      if (rev_lambda.Empty(cur)) return false;
      if (rev_lambda.HasFinal(cur)) return true;
    }
    return false;
  }
};

RuleOracle::RuleOracle(const Rule &rule, const Alphabet &alphabet,
                       size_t bound) {
  ValidateRule(rule, alphabet);
  const size_t k = alphabet.size();
  impl_ = std::make_unique<Impl>(Impl{
      BitNfa(CompileRegex(rule.phi, alphabet), k),
      BitNfa(Reverse(CompileRegex(rule.lambda, alphabet)), k),
      BitNfa(CompileRegex(rule.rho, alphabet), k),
      EnumerateFinite(SeriesToWfsa(rule.psi, alphabet), bound)});
}

RuleOracle::~RuleOracle() = default;
RuleOracle::RuleOracle(RuleOracle &&) noexcept = default;
RuleOracle &RuleOracle::operator=(RuleOracle &&) noexcept = default;

const WeightedStringSet &RuleOracle::PsiStrings() const { return impl_->psi; }

WeightedStringSet RuleOracle::Rewrite(std::span<const Label> input) const {
  const size_t n = input.size();
  std::vector<std::vector<size_t>> sites(n);
  for (size_t pos = 0; pos < n; ++pos) sites[pos] = impl_->Sites(input, pos);

  // frontier[pos]: derivations that consumed input[0, pos).
  std::vector<WeightedStringSet> frontier(n + 1);
  frontier[0].emplace(LabelString{}, Weight::One());
  for (size_t pos = 0; pos < n; ++pos) {
    for (const auto &[out, w] : frontier[pos]) {
      if (!sites[pos].empty() && impl_->LambdaEnds(out)) {
        for (size_t end : sites[pos]) {
          for (const auto &[s, ws] : impl_->psi) {
            LabelString next = out;
            next.insert(next.end(), s.begin(), s.end());
            Relax(frontier[end], std::move(next), Times(w, ws));
          }
        }
      } else {
        LabelString next = out;
        next.push_back(input[pos]);
        Relax(frontier[pos + 1], std::move(next), w);
      }
    }
    frontier[pos].clear();
  }
  return std::move(frontier[n]);
}

WeightedStringSet OracleRewrite(const Rule &rule, const Alphabet &alphabet,
                                std::span<const Label> input, size_t bound) {
  return RuleOracle(rule, alphabet, bound).Rewrite(input);
}

RulesetOracle::RulesetOracle(const RuleSet &rules, size_t bound) {
  for (const Rule &r : rules.rules) {
    oracles_.emplace_back(r, rules.alphabet, bound);
  }
}

WeightedStringSet RulesetOracle::Rewrite(std::span<const Label> input) const {
  WeightedStringSet cur;
  cur.emplace(LabelString(input.begin(), input.end()), Weight::One());
  for (const RuleOracle &o : oracles_) {
    WeightedStringSet next;
    for (const auto &[s, w] : cur) {
      for (const auto &[t, wt] : o.Rewrite(s)) Relax(next, t, Times(w, wt));
    }
    cur = std::move(next);
  }
  return cur;
}

ApplyResult Apply(const Transducer &t, std::span<const Label> input,
                  size_t bound) {
  const Transducer in = IdTransducer(StringAcceptor(input));
  const Automaton a =
      RemoveEpsilon(Project(Compose(in, t), ProjectType::kOutput));
  ApplyResult result;
  if (a.Start() == kNoStateId) return result;

  // Best-first over (state, string); state kNoStateId marks a completed
  // string whose final weight has been added.
  using Item = std::tuple<Weight, LabelString, StateId>;
  auto cmp = [](const Item &x, const Item &y) {
    return std::get<0>(y) < std::get<0>(x);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  std::set<std::pair<StateId, LabelString>> done;
  heap.emplace(Weight::One(), LabelString{}, a.Start());
  while (!heap.empty()) {
    auto [w, s, q] = heap.top();
    heap.pop();
    if (!done.emplace(q, s).second) continue;
    if (q == kNoStateId) {
      if (result.outputs.size() == bound) {
        result.truncated = true;
        break;
      }
      result.outputs.emplace(std::move(s), w);
      continue;
    }
    if (a.IsFinal(q)) heap.emplace(Times(w, a.Final(q)), s, kNoStateId);
    for (const AcceptorArc &arc : a.Arcs(q)) {
      LabelString next = s;
      next.push_back(arc.label);
      if (done.count({arc.nextstate, next})) continue;
      heap.emplace(Times(w, arc.weight), std::move(next), arc.nextstate);
    }
  }
  return result;
}

TransducerRunner::TransducerRunner(const Transducer &t, size_t max_configs)
    : t_(t), max_configs_(max_configs), arcs_(t.NumStates()) {
  for (StateId s = 0; s < static_cast<StateId>(t.NumStates()); ++s) {
    auto arcs = t.Arcs(s);
    arcs_[s].assign(arcs.begin(), arcs.end());
    std::stable_sort(arcs_[s].begin(), arcs_[s].end(),
                     [](const TransducerArc &x, const TransducerArc &y) {
                       return x.in < y.in;
                     });
  }
}

namespace {

struct ConfigKeyHash {
  size_t operator()(const std::pair<StateId, LabelString> &k) const noexcept {
    uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(k.first);
    for (const Label l : k.second) {
      h = (h ^ static_cast<uint64_t>(l.value())) * 1099511628211ull;
    }
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

}  // namespace

TransducerRunner::Configs TransducerRunner::Closure(
    std::vector<Config> seed) const {
  // Dijkstra over (state, output) along input-epsilon arcs. Only states
  // with such arcs are ever expanded.
  using Key = std::pair<StateId, LabelString>;
  std::unordered_map<Key, size_t, ConfigKeyHash> index;
  Configs nodes;
  using Item = std::pair<Weight, size_t>;
  auto cmp = [](const Item &x, const Item &y) { return y.first < x.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  auto expands = [&](StateId s) {
    return !arcs_[s].empty() && arcs_[s].front().in.IsEpsilon();
  };
  auto relax = [&](StateId state, LabelString output, Weight w) {
    auto it = index.find(Key(state, output));
    if (it == index.end()) {
      if (nodes.size() >= max_configs_) {
        truncated_ = true;
        return;
      }
      index.emplace(Key(state, output), nodes.size());
      nodes.push_back({state, std::move(output), w});
      if (expands(state)) heap.emplace(w, nodes.size() - 1);
    } else if (w < nodes[it->second].weight) {
      nodes[it->second].weight = w;
      if (expands(state)) heap.emplace(w, it->second);
    }
  };
  index.reserve(seed.size() * 2);
  nodes.reserve(seed.size());
  for (Config &c : seed) relax(c.state, std::move(c.output), c.weight);
  while (!heap.empty()) {
    const auto [w, i] = heap.top();
    heap.pop();
    if (nodes[i].weight < w) continue;
    const StateId state = nodes[i].state;
    for (const TransducerArc &arc : arcs_[state]) {
      if (!arc.in.IsEpsilon()) break;
      LabelString out = nodes[i].output;
      if (!arc.out.IsEpsilon()) out.push_back(arc.out);
      relax(arc.nextstate, std::move(out), Times(w, arc.weight));
    }
  }
  return nodes;
}

TransducerRunner::Configs TransducerRunner::Start() const {
  if (t_.Start() == kNoStateId) return {};
  return Closure({{t_.Start(), {}, Weight::One()}});
}

TransducerRunner::Configs TransducerRunner::Step(const Configs &configs,
                                                 Label symbol) const {
  std::vector<Config> seed;
  for (const Config &c : configs) {
    const auto &arcs = arcs_[c.state];
    auto it = std::lower_bound(
        arcs.begin(), arcs.end(), symbol,
        [](const TransducerArc &a, Label l) { return a.in < l; });
    for (; it != arcs.end() && it->in == symbol; ++it) {
      Config n{it->nextstate, c.output, Times(c.weight, it->weight)};
      if (!it->out.IsEpsilon()) n.output.push_back(it->out);
      seed.push_back(std::move(n));
    }
  }
  return Closure(std::move(seed));
}

WeightedStringSet TransducerRunner::Outputs(const Configs &configs) const {
  WeightedStringSet out;
  for (const Config &c : configs) {
    if (t_.IsFinal(c.state)) {
      Relax(out, c.output, Times(c.weight, t_.Final(c.state)));
    }
  }
  return out;
}

WeightedStringSet TransducerRunner::Run(std::span<const Label> input) const {
  Configs c = Start();
  for (Label l : input) c = Step(c, l);
  return Outputs(c);
}

bool SameWeightedSets(const WeightedStringSet &a, const WeightedStringSet &b,
                      double delta) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !ApproxEqual(ia->second, ib->second, delta)) {
      return false;
    }
  }
  return true;
}

std::string FormatWeightedSet(const WeightedStringSet &set,
                              const Alphabet &alphabet) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto &[s, w] : set) {
    os << (first ? "" : ", ") << '"' << alphabet.Render(s) << "\": " << w;
    first = false;
  }
  os << "}";
  return os.str();
}

std::string EquivalenceReport::Describe(const Alphabet &alphabet) const {
  std::ostringstream os;
  if (equivalent) {
    os << "equivalent on " << strings_checked << " strings";
  } else {
    os << mismatches << " mismatches in " << strings_checked << " strings";
    for (const Counterexample &c : counterexamples) {
      os << "\n  \"" << alphabet.Render(c.input)
         << "\": " << FormatWeightedSet(c.left, alphabet) << " vs "
         << FormatWeightedSet(c.right, alphabet);
    }
  }
  if (truncated) os << " (output enumeration truncated)";
  return os.str();
}

void ForEachString(std::span<const Label> symbols, int max_len,
                   const std::function<void(const LabelString &)> &visit) {
  LabelString buf;
  std::function<void()> rec = [&]() {
    visit(buf);
    if (static_cast<int>(buf.size()) == max_len) return;
    for (Label l : symbols) {
      buf.push_back(l);
      rec();
      buf.pop_back();
    }
  };
  rec();
}

namespace {

void Record(EquivalenceReport &report, const LabelString &input,
            const WeightedStringSet &a, const WeightedStringSet &b) {
  ++report.strings_checked;
  if (SameWeightedSets(a, b)) return;
  report.equivalent = false;
  ++report.mismatches;
  if (report.counterexamples.size() < 10) {
    report.counterexamples.push_back({input, a, b});
  }
}

}  // namespace

EquivalenceReport EquivalentOn(const Transducer &t1, const Transducer &t2,
                               const Alphabet &alphabet, int max_len) {
  const TransducerRunner r1(t1), r2(t2);
  const std::vector<Label> sigma = alphabet.Labels();
  EquivalenceReport report;
  LabelString buf;
  std::function<void(const TransducerRunner::Configs &,
                     const TransducerRunner::Configs &)>
      rec = [&](const auto &c1, const auto &c2) {
        Record(report, buf, r1.Outputs(c1), r2.Outputs(c2));
        if (static_cast<int>(buf.size()) == max_len) return;
        for (Label l : sigma) {
          buf.push_back(l);
          rec(r1.Step(c1, l), r2.Step(c2, l));
          buf.pop_back();
        }
      };
  rec(r1.Start(), r2.Start());
  report.truncated = r1.truncated() || r2.truncated();
  return report;
}

EquivalenceReport EquivalentOn(const Transducer &t, const Reference &reference,
                               const Alphabet &alphabet, int max_len) {
  const TransducerRunner r(t);
  const std::vector<Label> sigma = alphabet.Labels();
  EquivalenceReport report;
  LabelString buf;
  std::function<void(const TransducerRunner::Configs &)> rec =
      [&](const auto &c) {
        Record(report, buf, r.Outputs(c), reference(buf));
        if (static_cast<int>(buf.size()) == max_len) return;
        for (Label l : sigma) {
          buf.push_back(l);
          rec(r.Step(c, l));
          buf.pop_back();
        }
      };
  rec(r.Start());
  report.truncated = r.truncated();
  return report;
}

}  // namespace rwc
