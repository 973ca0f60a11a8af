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

#ifndef RWC_LABEL_H_
#define RWC_LABEL_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rwc {

// A transition label. The integer space is partitioned:
//   0          epsilon
//   1..3       rule-compiler markers (>, <1, <2)
//   4..10      Kaplan-Kay brackets and the deleted-material placeholder
//   16..       user symbols; Sym(i) is the i-th symbol of an Alphabet
class Label {
 public:
  enum class Marker : int32_t { kRb = 1, kLb1 = 2, kLb2 = 3 };
  enum class Bracket : int32_t {
    kLeftApply = 4,
    kLeftIgnore = 5,
    kLeftContext = 6,
    kRightApply = 7,
    kRightIgnore = 8,
    kRightContext = 9,
    kDeleted = 10,
  };

  static constexpr int32_t kFirstSymbol = 16;

  constexpr Label() : value_(0) {}

  static constexpr Label Epsilon() { return Label(0); }
  static constexpr Label Rb() { return Label(1); }
  static constexpr Label Lb1() { return Label(2); }
  static constexpr Label Lb2() { return Label(3); }
  static constexpr Label Of(Marker m) { return Label(static_cast<int32_t>(m)); }
  static constexpr Label Of(Bracket b) {
    return Label(static_cast<int32_t>(b));
  }
  static constexpr Label Sym(int32_t id) { return Label(kFirstSymbol + id); }
  static constexpr Label FromValue(int32_t v) { return Label(v); }

  constexpr int32_t value() const { return value_; }
  constexpr bool IsEpsilon() const { return value_ == 0; }
  constexpr bool IsMarker() const { return value_ >= 1 && value_ <= 3; }
  constexpr bool IsBracket() const { return value_ >= 4 && value_ <= 10; }
  constexpr bool IsSymbol() const { return value_ >= kFirstSymbol; }
  constexpr int32_t SymbolId() const { return value_ - kFirstSymbol; }

  friend constexpr auto operator<=>(Label, Label) = default;

 private:
  explicit constexpr Label(int32_t v) : value_(v) {}
  int32_t value_;
};

using LabelString = std::vector<Label>;

// Name used for non-symbol labels in diagnostics and in the text format.
// Returns nullptr for user symbols.
const char *ReservedLabelName(Label label);

// The user-declared symbol set of a rule system.
class Alphabet {
 public:
  Alphabet() = default;

  // Throws E_BAD_SPEC on duplicate, empty or reserved names, or an empty
  // list.
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string> &names() const { return names_; }

  std::optional<Label> Find(std::string_view name) const;
  // Throws E_UNKNOWN_SYMBOL.
  Label Lookup(std::string_view name) const;
  bool Contains(Label label) const {
    return label.IsSymbol() &&
           label.SymbolId() < static_cast<int32_t>(names_.size());
  }

  // All user symbols, in declaration order.
  std::vector<Label> Labels() const;

  // Name of any label, including markers, brackets and epsilon.
  std::string Name(Label label) const;

  // Splits on whitespace; each chunk is either a declared name or is split
  // greedily into the longest declared names. Throws E_UNKNOWN_SYMBOL.
  LabelString Tokenize(std::string_view text) const;

  // Concatenates names, separated by spaces unless every name in the
  // alphabet is a single character.
  std::string Render(std::span<const Label> labels) const;

  static bool IsReservedName(std::string_view name);

  friend bool operator==(const Alphabet &a, const Alphabet &b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int32_t> index_;
  bool single_char_ = true;
};

}  // namespace rwc

template <>
struct std::hash<rwc::Label> {
  size_t operator()(rwc::Label l) const noexcept {
    return std::hash<int32_t>()(l.value());
  }
};

#endif  // RWC_LABEL_H_
