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

#include "rwc/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/instrument.h"
#include "rwc/kk.h"

namespace rwc {
namespace {

double MsSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

Alphabet BenchAlphabet(int size) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "s%03d", i);
    names.push_back(buf);
  }
  return Alphabet(std::move(names));
}

Rule BenchRule(BenchFamily family, int k, const Alphabet &alphabet) {
  const auto &n = alphabet.names();
  Rule r;
  r.phi = Expr::Symbol(n.at(0));
  r.psi = Expr::Symbol(n.at(1));
  std::vector<Expr> context(k, Expr::Symbol(n.at(2)));
  (family == BenchFamily::kLeft ? r.lambda : r.rho) =
      Expr::Concat(std::move(context));
  return r;
}

std::vector<BenchRecord> RunBench(
    const BenchOptions &options,
    const std::function<void(const BenchRecord &)> &progress) {
  const Alphabet alphabet = BenchAlphabet(options.alphabet_size);
  const std::string name =
      options.family == BenchFamily::kLeft ? "left" : "right";
  const auto budget = std::chrono::milliseconds(options.deadline_ms);
  std::vector<BenchRecord> out;
  auto emit = [&](BenchRecord rec) {
    if (progress) progress(rec);
    out.push_back(std::move(rec));
  };
  // All new-algorithm points run before the baseline so that its large
  // allocations do not disturb the timings. Repeats go round-robin over k,
  // so a slow stretch of the machine is spread over every point instead of
  // landing on one.
  std::vector<Rule> rules;
  std::vector<BenchRecord> fresh(options.kmax + 1);
  std::vector<std::vector<double>> times(options.kmax + 1);
  for (int k = 0; k <= options.kmax; ++k) {
    rules.push_back(BenchRule(options.family, k, alphabet));
    fresh[k].rule = name;
    fresh[k].k = k;
    fresh[k].algorithm = "new";
  }
  for (int i = 0; i < std::max(1, options.repeats); ++i) {
    for (int k = 0; k <= options.kmax; ++k) {
      const auto t0 = Clock::now();
      const CompiledRule c = CompileRule(rules[k], alphabet);
      times[k].push_back(MsSince(t0));
      fresh[k].states = c.stats.states;
      fresh[k].arcs = c.stats.arcs;
    }
  }
  for (int k = 0; k <= options.kmax; ++k) {
    std::vector<double> &t = times[k];
    std::nth_element(t.begin(), t.begin() + t.size() / 2, t.end());
    fresh[k].ms = t[t.size() / 2];
    emit(fresh[k]);
  }
  for (int k = 0; options.run_kk && k <= options.kmax; ++k) {
    const Rule rule = BenchRule(options.family, k, alphabet);
    BenchRecord kk;
    kk.rule = name;
    kk.k = k;
    kk.algorithm = "kk";
    if (options.family == BenchFamily::kRight) {
      try {
        ScopedDeadline deadline(Clock::now() + budget);
        const KkProbe probe = KkRightContextProbe(rule.rho, alphabet);
        kk.nfa_arcs = probe.nfa_arcs;
        kk.dfa_arcs = probe.dfa_arcs;
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kTimeout) throw;
      }
    }
    const auto t0 = Clock::now();
    try {
      ScopedDeadline deadline(t0 + budget);
      const Transducer t = KkCompileRule(rule, alphabet);
      kk.ms = MsSince(t0);
      kk.states = t.NumStates();
      kk.arcs = t.NumArcs();
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kTimeout) throw;
      kk.ms = MsSince(t0);
      kk.timeout = true;
    }
    emit(kk);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const BenchRecord &a, const BenchRecord &b) {
                     return a.k < b.k;
                   });
  return out;
}

std::string BenchCsv(const std::vector<BenchRecord> &records) {
  std::ostringstream os;
  os << kBenchCsvHeader << "\n";
  for (const BenchRecord &r : records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.ms);
    os << r.rule << "," << r.k << "," << r.algorithm << "," << ms << ","
       << r.states << "," << r.arcs << ",";
    if (r.dfa_arcs) os << *r.dfa_arcs;
    os << "," << (r.timeout ? 1 : 0) << "\n";
  }
  return os.str();
}

double AffineR2(const std::vector<double> &x, const std::vector<double> &y) {
  const size_t n = std::min(x.size(), y.size());
  if (n < 2) return 1.0;
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (syy == 0.0) return 1.0;
  if (sxx == 0.0) return 0.0;
  return sxy * sxy / (sxx * syy);
}

}  // namespace rwc
