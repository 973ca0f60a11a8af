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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rwc/fsm.h"
#include "rwc/oracle.h"
#include "rwc/rulespec.h"
#include "rwc/text_format.h"
#include "test_util.h"

namespace rwc {
namespace {

struct Result {
  int status = -1;
  std::string out;  // stdout and stderr
};

Result Rwc(const std::string &args) {
  const std::string cmd = std::string(RWC_BINARY) + " " + args + " 2>&1";
  Result r;
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string Rules(const std::string &name) {
  return std::string(RWC_SOURCE_DIR) + "/rules/" + name;
}
std::string Work(const std::string &name) {
  return std::string(RWC_WORK_DIR) + "/" + name;
}

void Write(const std::string &path, const std::string &text) {
  std::ofstream(path) << text;
}

TEST_CASE("compile and apply the weighted nasal rule") {
  const std::string fst = Work("nasal_weighted.fst");
  const Result c = Rwc("compile " + Rules("nasal_weighted.rules") + " " + fst);
  CHECK(c.status == 0);
  CHECK(c.out.find("rules 1 states") != std::string::npos);

  const Result a = Rwc("apply " + fst + " Nb");
  CHECK(a.status == 0);
  CHECK(a.out == "mb 0.105361\nnb 2.302585\n");
  const Result best = Rwc("apply " + fst + " Nb --nbest 1");
  CHECK(best.out == "mb 0.105361\n");
  CHECK(Rwc("apply " + fst + " Na").out == "Na 0.000000\n");
  const Result undeclared = Rwc("apply " + fst + " Nx");
  CHECK(undeclared.status == 1);
  CHECK(Rwc("apply " + Work("missing.fst") + " Nb").status == 1);
}

TEST_CASE("compile with the baseline algorithm") {
  const std::string fst = Work("between_kk.fst");
  CHECK(Rwc("compile " + Rules("between.rules") + " " + fst +
            " --algorithm kk")
            .status == 0);
  CHECK(Rwc("apply " + fst + " cad").out == "cbd 0.000000\n");
  CHECK(Rwc("compile " + Rules("nasal_weighted.rules") + " " +
            Work("x.fst") + " --algorithm kk")
            .status == 1);
}

TEST_CASE("compiled file matches the in-memory machine") {
  const std::string fst = Work("between_raw.fst");
  CHECK(Rwc("compile " + Rules("between.rules") + " " + fst + " --no-compact")
            .status == 0);
  const FstFile file = ReadFstFile(fst);
  const RuleSet rs = ParseRuleFile(ReadFile(Rules("between.rules")));
  const RulesetOracle oracle(rs);
  CHECK(EquivalentOn(file.transducer,
                     [&](std::span<const Label> s) {
                       return oracle.Rewrite(s);
                     },
                     rs.alphabet, 5)
            .equivalent);
}

TEST_CASE("stdin input and empty outputs") {
  const std::string fst = Work("deletion.fst");
  CHECK(Rwc("compile " + Rules("deletion.rules") + " " + fst).status == 0);
  Write(Work("inputs.txt"), "ba\nc\n");
  const Result r = Rwc("apply " + fst + " --stdin < " + Work("inputs.txt"));
  CHECK(r.status == 0);
  CHECK(r.out == "ba 0.000000\n\nc 0.000000\n");
  const Result e = Rwc("apply " + fst + " aab");
  CHECK(e.out.find("a 0.000000\n") != std::string::npos);
}

TEST_CASE("an empty rule list compiles to the identity") {
  const std::string fst = Work("identity.fst");
  CHECK(Rwc("compile " + Rules("identity.rules") + " " + fst).status == 0);
  const FstFile file = ReadFstFile(fst);
  ForEachString(file.alphabet.Labels(), 4, [&](const LabelString &s) {
    CHECK(SameWeightedSets(Apply(file.transducer, s).outputs,
                           {{s, Weight::One()}}));
  });
}

TEST_CASE("diagnostics") {
  Write(Work("bad.rules"), "alphabet: a b ;\na -> ;\n");
  const Result r = Rwc("compile " + Work("bad.rules") + " " + Work("bad.fst"));
  CHECK(r.status == 1);
  CHECK(r.out.find("E_SYNTAX") != std::string::npos);
  CHECK(r.out.find("2:6") != std::string::npos);
  Write(Work("unknown.rules"), "alphabet: a b ;\na -> q ;\n");
  const Result u =
      Rwc("compile " + Work("unknown.rules") + " " + Work("bad.fst"));
  CHECK(u.status == 1);
  CHECK(u.out.find("E_UNKNOWN_SYMBOL") != std::string::npos);
  CHECK(Rwc("frobnicate").status != 0);
}

TEST_CASE("check on the shipped rules") {
  for (const char *name :
       {"between.rules", "chain.rules", "deletion.rules", "feeding.rules",
        "identity.rules", "nasal.rules", "left_context_k3.rules",
        "right_context_k3.rules"}) {
    const Result r = Rwc("check " + Rules(name) + " --max-len 5");
    CHECK_MESSAGE(r.status == 0, name << "\n" << r.out);
  }
  const Result w = Rwc("check " + Rules("nasal_weighted.rules") +
                       " --max-len 4");
  CHECK(w.status == 0);
  CHECK(w.out.find("kk: skipped (weighted rules)") != std::string::npos);
}

TEST_CASE("check catches a corrupted machine") {
  const std::string fst = Work("between_bad.fst");
  CHECK(Rwc("compile " + Rules("between.rules") + " " + fst).status == 0);
  // Rewrite every output b as a.
  std::string text = ReadFile(fst);
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (line.rfind("arc ", 0) == 0) {
      std::istringstream f(line);
      std::string tag, src, dst, i, o, w;
      f >> tag >> src >> dst >> i >> o >> w;
      if (o == "b") o = "a";
      line = tag + " " + src + " " + dst + " " + i + " " + o + " " + w;
    }
    out += line + "\n";
  }
  Write(fst, out);
  const Result r =
      Rwc("check " + Rules("between.rules") + " --fst " + fst +
          " --max-len 4");
  CHECK(r.status == 2);
  CHECK(r.out.find("mismatches") != std::string::npos);
  CHECK(r.out.find("\"ab\": {\"aa\": 0}") != std::string::npos);
}

TEST_CASE("check on random rules") {
  const Result r = Rwc("check --random 3 --max-len 4");
  CHECK(r.status == 0);
}

TEST_CASE("bench with kmax zero") {
  const std::string csv = Work("bench.csv");
  const Result r = Rwc("bench --family left --kmax 0 --alphabet-size 12 "
                       "--repeats 1 " + csv);
  CHECK(r.status == 0);
  const std::string text = ReadFile(csv);
  size_t lines = 0;
  for (const char c : text) lines += c == '\n';
  CHECK(lines == 3);
  CHECK(text.rfind("rule,k,algorithm,ms,states,arcs,dfa_arcs,timeout\n", 0) ==
        0);
}

}  // namespace
}  // namespace rwc
