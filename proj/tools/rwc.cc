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

// rwc: compile, apply, check and benchmark rewrite rules.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rwc/bench.h"
#include "rwc/compiler.h"
#include "rwc/error.h"
#include "rwc/kk.h"
#include "rwc/oracle.h"
#include "rwc/random_rules.h"
#include "rwc/rulespec.h"
#include "rwc/text_format.h"

namespace rwc {
namespace {

constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

std::string RenderOutput(const Alphabet &alphabet, const LabelString &s) {
  return s.empty() ? "<eps>" : alphabet.Render(s);
}

int Compile(const std::string &rules_path, const std::string &out_path,
            bool no_compact, const std::string &algorithm) {
  const RuleSet rules = ParseRuleFile(ReadFile(rules_path));
  Transducer t;
  if (algorithm == "kk") {
    t = KkCompileRuleset(rules, KkOptions{!no_compact});
  } else {
    t = CompileRuleset(rules, CompileOptions{!no_compact});
  }
  WriteFile(out_path, WriteFstText(t, rules.alphabet));
  std::cout << "rules " << rules.rules.size() << " states " << t.NumStates()
            << " arcs " << t.NumArcs() << "\n";
  return 0;
}

void PrintOutputs(const FstFile &fst, const std::string &input, int nbest) {
  const LabelString in = fst.alphabet.Tokenize(input);
  const ApplyResult r = Apply(fst.transducer, in);
  if (r.truncated) {
    std::cerr << "warning: " << ErrorCodeName(ErrorCode::kTruncated)
              << ": more than " << r.outputs.size() << " outputs\n";
  }
  std::vector<std::pair<std::string, Weight>> lines;
  for (const auto &[s, w] : r.outputs) {
    lines.push_back({RenderOutput(fst.alphabet, s), w});
  }
  std::sort(lines.begin(), lines.end(), [](const auto &a, const auto &b) {
    if (a.second.Value() != b.second.Value()) {
      return a.second.Value() < b.second.Value();
    }
    return a.first < b.first;
  });
  if (nbest > 0 && static_cast<int>(lines.size()) > nbest) lines.resize(nbest);
  for (const auto &[s, w] : lines) {
    std::printf("%s %.6f\n", s.c_str(), w.Value());
  }
  if (lines.empty()) std::cerr << "no output for '" << input << "'\n";
}

int ApplyCommand(const std::string &fst_path,
                 const std::optional<std::string> &input, bool from_stdin,
                 int nbest) {
  const FstFile fst = ReadFstFile(fst_path);
  if (from_stdin) {
    std::string line;
    bool first = true;
    while (std::getline(std::cin, line)) {
      if (!first) std::printf("\n");
      first = false;
      PrintOutputs(fst, line, nbest);
    }
    return 0;
  }
  if (!input) {
    std::cerr << "apply: give an input string or --stdin\n";
    return kExitError;
  }
  PrintOutputs(fst, *input, nbest);
  return 0;
}

bool CheckRuleSet(const RuleSet &rules, const Transducer *given, int max_len,
                  const std::string &label) {
  const Transducer compiled =
      given ? *given : CompileRuleset(rules, CompileOptions{});
  const RulesetOracle oracle(rules);
  const EquivalenceReport vs_oracle = EquivalentOn(
      compiled, [&](std::span<const Label> s) { return oracle.Rewrite(s); },
      rules.alphabet, max_len);
  std::cout << label << "oracle: " << vs_oracle.Describe(rules.alphabet)
            << "\n";
  bool ok = vs_oracle.equivalent;
  const bool weighted =
      std::any_of(rules.rules.begin(), rules.rules.end(),
                  [](const Rule &r) { return r.psi.HasWeights(); });
  if (weighted) {
    std::cout << label << "kk: skipped (weighted rules)\n";
  } else {
    const Transducer kk = KkCompileRuleset(rules);
    const EquivalenceReport vs_kk =
        EquivalentOn(compiled, kk, rules.alphabet, max_len);
    std::cout << label << "kk: " << vs_kk.Describe(rules.alphabet) << "\n";
    ok = ok && vs_kk.equivalent;
  }
  return ok;
}

int Check(const std::optional<std::string> &rules_path, int max_len,
          const std::optional<std::string> &fst_path, int random) {
  bool ok = true;
  if (rules_path) {
    const RuleSet rules = ParseRuleFile(ReadFile(*rules_path));
    std::optional<FstFile> fst;
    if (fst_path) {
      fst = ReadFstFile(*fst_path);
      if (!(fst->alphabet == rules.alphabet)) {
        std::cerr << "check: FST and rule file alphabets differ\n";
        return kExitError;
      }
    }
    ok = CheckRuleSet(rules, fst ? &fst->transducer : nullptr, max_len, "");
  }
  if (random > 0) {
    const uint64_t seed = SeedFromEnv(1);
    Rng rng(seed);
    std::cout << "random rules, seed " << seed << "\n";
    for (int i = 0; i < random; ++i) {
      RuleSet rs{LetterAlphabet(2 + i % 3), {}};
      rs.rules.push_back(RandomRule(rng, rs.alphabet));
      std::cout << "rule " << i << ": " << ToString(rs.rules[0]) << "\n";
      ok = CheckRuleSet(rs, nullptr, max_len, "  ") && ok;
    }
  }
  return ok ? 0 : kExitMismatch;
}

int Bench(const std::string &family, int kmax, int alphabet_size,
          int deadline_ms, int repeats, const std::string &out_path) {
  BenchOptions o;
  o.family = family == "right" ? BenchFamily::kRight : BenchFamily::kLeft;
  o.kmax = kmax;
  o.alphabet_size = alphabet_size;
  o.deadline_ms = deadline_ms;
  o.repeats = repeats;
  const auto records = RunBench(o, [](const BenchRecord &r) {
    std::cerr << r.rule << " k=" << r.k << " " << r.algorithm << " "
              << r.ms << " ms" << (r.timeout ? " (timeout)" : "") << "\n";
  });
  WriteFile(out_path, BenchCsv(records));
  return 0;
}

}  // namespace
}  // namespace rwc

int main(int argc, char **argv) {
  CLI::App app{"Compile weighted rewrite rules into transducers"};
  app.require_subcommand(1);

  auto *compile = app.add_subcommand("compile", "compile a rule file");
  std::string rules_path, out_path, algorithm = "new";
  bool no_compact = false;
  compile->add_option("rules", rules_path, "rule file")->required();
  compile->add_option("out", out_path, "output FST file")->required();
  compile->add_flag("--no-compact", no_compact, "skip compaction");
  compile->add_option("--algorithm", algorithm, "new or kk")
      ->check(CLI::IsMember({"new", "kk"}));

  auto *apply = app.add_subcommand("apply", "apply an FST to input strings");
  std::string fst_path;
  std::optional<std::string> input;
  bool from_stdin = false;
  int nbest = 0;
  apply->add_option("fst", fst_path, "FST file")->required();
  apply->add_option("input", input, "input string");
  apply->add_flag("--stdin", from_stdin, "read one input per line");
  apply->add_option("--nbest", nbest, "print at most N outputs");

  auto *check = app.add_subcommand("check", "compare against the oracle");
  std::optional<std::string> check_rules, check_fst;
  int max_len = 6, random = 0;
  check->add_option("rules", check_rules, "rule file");
  check->add_option("--max-len", max_len, "longest input checked");
  check->add_option("--fst", check_fst, "check this FST instead");
  check->add_option("--random", random, "also check N random rules");

  auto *bench = app.add_subcommand("bench", "time both compilers");
  std::string family = "left", csv;
  int kmax = 10, alphabet_size = 194, deadline_ms = 300000, repeats = 5;
  bench->add_option("--family", family)->check(
      CLI::IsMember({"left", "right"}));
  bench->add_option("--kmax", kmax);
  bench->add_option("--alphabet-size", alphabet_size)
      ->check(CLI::Range(3, 1000));
  bench->add_option("--deadline-ms", deadline_ms);
  bench->add_option("--repeats", repeats);
  bench->add_option("out", csv, "CSV file")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*compile) {
      return rwc::Compile(rules_path, out_path, no_compact, algorithm);
    }
    if (*apply) return rwc::ApplyCommand(fst_path, input, from_stdin, nbest);
    if (*check) {
      if (!check_rules && random == 0) {
        std::cerr << "check: give a rule file or --random N\n";
        return rwc::kExitError;
      }
      return rwc::Check(check_rules, max_len, check_fst, random);
    }
    if (*bench) {
      return rwc::Bench(family, kmax, alphabet_size, deadline_ms, repeats, csv);
    }
  } catch (const rwc::Error &e) {
    std::cerr << e.what() << "\n";
    return rwc::kExitError;
  }
  return 0;
}
