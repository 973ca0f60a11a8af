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

// Line-oriented text format for machines:
//
//   WFST v1 <weighted|unweighted> <acceptor|transducer>
//   sym <id> <name>          # label value and name, reserved labels included
//   init <state>
//   final <state> <weight>
//   arc <src> <dst> <in> [<out>] <weight>   # labels by name
//
// Weights are written with six decimals; any precision is read.

#ifndef RWC_TEXT_FORMAT_H_
#define RWC_TEXT_FORMAT_H_

#include <string>
#include <string_view>

#include "rwc/fst.h"
#include "rwc/label.h"

namespace rwc {

std::string WriteFstText(const Transducer &t, const Alphabet &alphabet);
std::string WriteFstText(const Automaton &a, const Alphabet &alphabet);

struct FstFile {
  Alphabet alphabet;
  bool is_acceptor = false;
  // Acceptors are also provided as their identity transducer.
  Transducer transducer;
  Automaton acceptor;
};

// Throws E_BAD_FORMAT with the offending line number.
FstFile ReadFstText(std::string_view text);

// Throw E_IO when the file cannot be read or written.
FstFile ReadFstFile(const std::string &path);
void WriteFile(const std::string &path, const std::string &contents);
std::string ReadFile(const std::string &path);

}  // namespace rwc

#endif  // RWC_TEXT_FORMAT_H_
