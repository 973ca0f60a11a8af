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

#include "rwc/label.h"

#include <cctype>

#include "rwc/error.h"

namespace rwc {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "E_SYNTAX";
    case ErrorCode::kUnknownSymbol: return "E_UNKNOWN_SYMBOL";
    case ErrorCode::kPhiNullable: return "E_PHI_NULLABLE";
    case ErrorCode::kPsiEmpty: return "E_PSI_EMPTY";
    case ErrorCode::kNegativeWeight: return "E_NEGATIVE_WEIGHT";
    case ErrorCode::kEmptyLanguage: return "E_EMPTY_LANGUAGE";
    case ErrorCode::kNotDeterministic: return "E_NOT_DETERMINISTIC";
    case ErrorCode::kNotComplete: return "E_NOT_COMPLETE";
    case ErrorCode::kBadSpec: return "E_BAD_SPEC";
    case ErrorCode::kDivergent: return "E_DIVERGENT";
    case ErrorCode::kTruncated: return "E_TRUNCATED";
    case ErrorCode::kTimeout: return "E_TIMEOUT";
    case ErrorCode::kBadFormat: return "E_BAD_FORMAT";
    case ErrorCode::kIo: return "E_IO";
  }
  return "E_UNKNOWN";
}

const char *ReservedLabelName(Label label) {
  switch (label.value()) {
    case 0: return "<eps>";
    case 1: return "<rb>";
    case 2: return "<lb1>";
    case 3: return "<lb2>";
    case 4: return "<la>";
    case 5: return "<li>";
    case 6: return "<lc>";
    case 7: return "<ra>";
    case 8: return "<ri>";
    case 9: return "<rc>";
    case 10: return "<zero>";
    default: return nullptr;
  }
}

bool Alphabet::IsReservedName(std::string_view name) {
  static const char *const kReserved[] = {">", "<1", "<2", "0", "_"};
  for (const char *r : kReserved) {
    if (name == r) return true;
  }
  for (int32_t v = 0; v < Label::kFirstSymbol; ++v) {
    const char *r = ReservedLabelName(Label::FromValue(v));
    if (r != nullptr && name == r) return true;
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorCode::kBadSpec, "empty alphabet");
  for (size_t i = 0; i < names_.size(); ++i) {
    const std::string &n = names_[i];
    if (n.empty()) throw Error(ErrorCode::kBadSpec, "empty symbol name");
    if (IsReservedName(n)) {
      throw Error(ErrorCode::kBadSpec, "reserved symbol name '" + n + "'");
    }
    for (char c : n) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kBadSpec, "whitespace in symbol name '" + n + "'");
      }
    }
    if (!index_.emplace(n, static_cast<int32_t>(i)).second) {
      throw Error(ErrorCode::kBadSpec, "duplicate symbol '" + n + "'");
    }
    if (n.size() != 1) single_char_ = false;
  }
}

std::optional<Label> Alphabet::Find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Label::Sym(it->second);
}

Label Alphabet::Lookup(std::string_view name) const {
  if (auto l = Find(name)) return *l;
  throw Error(ErrorCode::kUnknownSymbol, "undeclared symbol '" +
                                             std::string(name) + "'");
}

std::vector<Label> Alphabet::Labels() const {
  std::vector<Label> out;
  out.reserve(names_.size());
  for (size_t i = 0; i < names_.size(); ++i) {
    out.push_back(Label::Sym(static_cast<int32_t>(i)));
  }
  return out;
}

std::string Alphabet::Name(Label label) const {
  if (label.IsSymbol()) {
    if (Contains(label)) return names_[label.SymbolId()];
    return "#" + std::to_string(label.value());
  }
  return ReservedLabelName(label);
}

LabelString Alphabet::Tokenize(std::string_view text) const {
  LabelString out;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    std::string_view chunk = text.substr(i, end - i);
    if (auto l = Find(chunk)) {
      out.push_back(*l);
    } else {
      size_t pos = 0;
      while (pos < chunk.size()) {
        size_t best = 0;
        for (size_t len = chunk.size() - pos; len > 0; --len) {
          if (index_.count(std::string(chunk.substr(pos, len)))) {
            best = len;
            break;
          }
        }
        if (best == 0) {
          throw Error(ErrorCode::kUnknownSymbol,
                      "cannot tokenize '" + std::string(chunk.substr(pos)) +
                          "'");
        }
        out.push_back(*Find(chunk.substr(pos, best)));
        pos += best;
      }
    }
    i = end;
  }
  return out;
}

std::string Alphabet::Render(std::span<const Label> labels) const {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i > 0 && !single_char_) out += ' ';
    out += Name(labels[i]);
  }
  return out;
}

}  // namespace rwc
