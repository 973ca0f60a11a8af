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

// Compile-time benchmark over the families a -> b / c^k _ (left) and
// a -> b / _ c^k (right) on a synthetic alphabet s000, s001, ...

#ifndef RWC_BENCH_H_
#define RWC_BENCH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rwc/label.h"
#include "rwc/rulespec.h"

namespace rwc {

enum class BenchFamily { kLeft, kRight };

struct BenchOptions {
  BenchFamily family = BenchFamily::kLeft;
  int kmax = 10;
  int alphabet_size = 194;
  // Per-point limit for the baseline compiler and the probe.
  int deadline_ms = 300000;
  // New-algorithm timings are the median of this many runs.
  int repeats = 5;
  bool run_kk = true;
};

struct BenchRecord {
  std::string rule;
  int k = 0;
  std::string algorithm;  // "new" or "kk"
  double ms = 0.0;
  size_t states = 0;
  size_t arcs = 0;
  std::optional<size_t> dfa_arcs;
  std::optional<size_t> nfa_arcs;
  bool timeout = false;
};

Alphabet BenchAlphabet(int size);
Rule BenchRule(BenchFamily family, int k, const Alphabet &alphabet);

std::vector<BenchRecord> RunBench(
    const BenchOptions &options,
    const std::function<void(const BenchRecord &)> &progress = {});

inline constexpr const char *kBenchCsvHeader =
    "rule,k,algorithm,ms,states,arcs,dfa_arcs,timeout";
std::string BenchCsv(const std::vector<BenchRecord> &records);

// Least-squares fit y = a + b x; returns R^2 (1 for constant y).
double AffineR2(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace rwc

#endif  // RWC_BENCH_H_
