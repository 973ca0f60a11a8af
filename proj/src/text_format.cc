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

#include "rwc/text_format.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

std::string FormatWeight(Weight w) {
  if (w.IsZero()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", w.Value());
  return buf;
}

template <class F>
std::string Write(const F &f, const Alphabet &alphabet, bool acceptor) {
  std::ostringstream os;
  os << "WFST v1 " << (f.IsWeighted() ? "weighted" : "unweighted") << " "
     << (acceptor ? "acceptor" : "transducer") << "\n";
  for (int32_t v = 0; v < Label::kFirstSymbol; ++v) {
    const Label l = Label::FromValue(v);
    if (ReservedLabelName(l)) os << "sym " << v << " " << alphabet.Name(l) << "\n";
  }
  for (Label l : alphabet.Labels()) {
    os << "sym " << l.value() << " " << alphabet.Name(l) << "\n";
  }
  if (f.Start() != kNoStateId) os << "init " << f.Start() << "\n";
  for (StateId s = 0; s < static_cast<StateId>(f.NumStates()); ++s) {
    if (f.IsFinal(s)) os << "final " << s << " " << FormatWeight(f.Final(s)) << "\n";
  }
  for (StateId s = 0; s < static_cast<StateId>(f.NumStates()); ++s) {
    for (const auto &arc : f.Arcs(s)) {
      os << "arc " << s << " " << arc.nextstate << " "
         << alphabet.Name(arc.ilabel());
      if (!acceptor) os << " " << alphabet.Name(arc.olabel());
      os << " " << FormatWeight(arc.weight) << "\n";
    }
  }
  return os.str();
}

[[noreturn]] void Bad(int line, const std::string &msg) {
  throw Error(ErrorCode::kBadFormat, "line " + std::to_string(line) + ": " + msg);
}

Weight ParseWeight(const std::string &s, int line) {
  if (s == "inf" || s == "Infinity") return Weight::Zero();
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v) || v < 0) {
    Bad(line, "bad weight '" + s + "'");
  }
  return Weight(v);
}

StateId ParseState(const std::string &s, int line) {
  char *end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || v < 0 || v > (1L << 30)) {
    Bad(line, "bad state '" + s + "'");
  }
  return static_cast<StateId>(v);
}

}  // namespace

std::string WriteFstText(const Transducer &t, const Alphabet &alphabet) {
  return Write(t, alphabet, false);
}

std::string WriteFstText(const Automaton &a, const Alphabet &alphabet) {
  return Write(a, alphabet, true);
}

FstFile ReadFstText(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  FstFile out;
  bool header = false;
  std::map<std::string, Label> labels;
  std::map<int32_t, std::string> user;
  StateId start = kNoStateId;
  std::vector<std::pair<StateId, Weight>> finals;
  struct RawArc {
    StateId src, dst;
    std::string in, out;
    Weight w;
    int line;
  };
  std::vector<RawArc> arcs;
  StateId max_state = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> f;
    for (std::string w; ls >> w;) f.push_back(w);
    if (f.empty() || f[0][0] == '#') continue;
    if (!header) {
      if (f.size() != 4 || f[0] != "WFST" || f[1] != "v1" ||
          (f[2] != "weighted" && f[2] != "unweighted") ||
          (f[3] != "acceptor" && f[3] != "transducer")) {
        Bad(lineno, "bad header");
      }
      out.is_acceptor = f[3] == "acceptor";
      header = true;
      continue;
    }
    if (f[0] == "sym") {
      if (f.size() != 3) Bad(lineno, "expected 'sym <id> <name>'");
      const StateId id = ParseState(f[1], lineno);
      const Label l = Label::FromValue(id);
      if (id < Label::kFirstSymbol) {
        const char *name = ReservedLabelName(l);
        if (name == nullptr || f[2] != name) Bad(lineno, "bad reserved symbol");
      } else {
        user[id] = f[2];
      }
      if (!labels.emplace(f[2], l).second) Bad(lineno, "duplicate symbol");
    } else if (f[0] == "init") {
      if (f.size() != 2) Bad(lineno, "expected 'init <state>'");
      start = ParseState(f[1], lineno);
      max_state = std::max(max_state, start);
    } else if (f[0] == "final") {
      if (f.size() != 3) Bad(lineno, "expected 'final <state> <weight>'");
      finals.push_back({ParseState(f[1], lineno), ParseWeight(f[2], lineno)});
      max_state = std::max(max_state, finals.back().first);
    } else if (f[0] == "arc") {
      const size_t want = out.is_acceptor ? 5 : 6;
      if (f.size() != want) Bad(lineno, "wrong number of arc fields");
      RawArc a{ParseState(f[1], lineno), ParseState(f[2], lineno), f[3],
               out.is_acceptor ? f[3] : f[4], ParseWeight(f.back(), lineno),
               lineno};
      max_state = std::max({max_state, a.src, a.dst});
      arcs.push_back(std::move(a));
    } else {
      Bad(lineno, "unknown record '" + f[0] + "'");
    }
  }
  if (!header) Bad(lineno, "missing header");
  std::vector<std::string> names;
  for (const auto &[id, name] : user) {
    if (id != Label::kFirstSymbol + static_cast<int32_t>(names.size())) {
      Bad(0, "symbol ids are not contiguous");
    }
    names.push_back(name);
  }
  try {
    if (!names.empty()) out.alphabet = Alphabet(names);
  } catch (const Error &e) {
    Bad(0, e.what());
  }
  auto lookup = [&](const std::string &name, int l) {
    auto it = labels.find(name);
    if (it == labels.end()) Bad(l, "undeclared symbol '" + name + "'");
    return it->second;
  };
  Transducer t;
  for (StateId s = 0; s <= max_state; ++s) t.AddState();
  if (start == kNoStateId && max_state >= 0) Bad(lineno, "missing init");
  t.SetStart(start);
  for (const auto &[s, w] : finals) t.SetFinal(s, w);
  for (const RawArc &a : arcs) {
    t.AddArc(a.src, TransducerArc(lookup(a.in, a.line), lookup(a.out, a.line),
                                  a.w, a.dst));
  }
  if (out.is_acceptor) out.acceptor = Project(t, ProjectType::kInput);
  out.transducer = std::move(t);
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) {
    throw Error(ErrorCode::kIo, "cannot write " + path);
  }
}

FstFile ReadFstFile(const std::string &path) {
  return ReadFstText(ReadFile(path));
}

}  // namespace rwc
