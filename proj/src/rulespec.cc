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

#include "rwc/rulespec.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "rwc/error.h"
#include "rwc/fsm.h"

namespace rwc {
namespace {

enum class Tok {
  kName,
  kArrow,
  kSlash,
  kUnderscore,
  kSemi,
  kColon,
  kLParen,
  kRParen,
  kLBracket,
  kLBracketNeg,
  kRBracket,
  kStar,
  kPostfixPlus,
  kUnion,
  kQuestion,
  kWeight,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  double weight = 0.0;
  int line = 1;
  int column = 1;
};

bool IsNameChar(char c) {
  const unsigned char u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;  // UTF-8 continuation and lead bytes
  if (std::isalnum(u)) return true;
  switch (c) {
    case '_': case '.': case '\'': case '-': case '@': case '$': case '%':
    case '&': case '!': case '~': case '=': case ',':
      return true;
    default:
      return false;
  }
}

[[noreturn]] void SyntaxError(int line, int column, const std::string &msg) {
  throw Error(ErrorCode::kSyntax, std::to_string(line) + ":" +
                                      std::to_string(column) + ": " + msg);
}

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  bool attached = false;  // previous token ends an atom with no gap
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      attached = false;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      attached = false;
      continue;
    }
    Token t{Tok::kEnd, "", 0.0, line, column};
    bool ends_atom = false;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = Tok::kArrow;
      advance(2);
    } else if (c == '<') {
      const size_t close = text.find('>', i);
      if (close == std::string_view::npos) {
        SyntaxError(line, column, "unterminated weight");
      }
      std::string num(text.substr(i + 1, close - i - 1));
      const size_t b = num.find_first_not_of(" \t");
      const size_t e = num.find_last_not_of(" \t");
      num = b == std::string::npos ? "" : num.substr(b, e - b + 1);
      char *endp = nullptr;
      const double w = num.empty() ? 0.0 : std::strtod(num.c_str(), &endp);
      if (num.empty() || endp != num.c_str() + num.size() || !std::isfinite(w)) {
        SyntaxError(line, column, "bad weight '<" + num + ">'");
      }
      if (w < 0.0 || num[0] == '-') {
        throw Error(ErrorCode::kNegativeWeight,
                    std::to_string(line) + ":" + std::to_string(column) +
                        ": negative weight " + num);
      }
      t.kind = Tok::kWeight;
      t.weight = w;
      advance(close - i + 1);
    } else if (c == '[' && i + 1 < text.size() && text[i + 1] == '^') {
      t.kind = Tok::kLBracketNeg;
      advance(2);
    } else if (IsNameChar(c)) {
      size_t j = i;
      while (j < text.size() && IsNameChar(text[j]) &&
             !(text[j] == '-' && j + 1 < text.size() && text[j + 1] == '>')) {
        ++j;
      }
      t.text = std::string(text.substr(i, j - i));
      t.kind = t.text == "_" ? Tok::kUnderscore : Tok::kName;
      ends_atom = t.kind == Tok::kName;
      advance(j - i);
    } else {
      switch (c) {
        case '/': t.kind = Tok::kSlash; break;
        case ';': t.kind = Tok::kSemi; break;
        case ':': t.kind = Tok::kColon; break;
        case '(': t.kind = Tok::kLParen; break;
        case ')': t.kind = Tok::kRParen; ends_atom = true; break;
        case '[': t.kind = Tok::kLBracket; break;
        case ']': t.kind = Tok::kRBracket; ends_atom = true; break;
        case '*': t.kind = Tok::kStar; ends_atom = true; break;
        case '?': t.kind = Tok::kQuestion; ends_atom = true; break;
        case '|': t.kind = Tok::kUnion; break;
        case '+':
          t.kind = attached ? Tok::kPostfixPlus : Tok::kUnion;
          ends_atom = attached;
          break;
        default:
          SyntaxError(line, column, std::string("unexpected character '") + c +
                                        "'");
      }
      advance(1);
    }
    out.push_back(std::move(t));
    attached = ends_atom;
  }
  out.push_back({Tok::kEnd, "", 0.0, line, column});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Alphabet *alphabet)
      : tokens_(std::move(tokens)), alphabet_(alphabet) {}

  const Token &Peek() const { return tokens_[pos_]; }
  bool At(Tok k) const { return Peek().kind == k; }
  const Token &Take() { return tokens_[pos_++]; }

  const Token &Expect(Tok k, const char *what) {
    if (!At(k)) {
      SyntaxError(Peek().line, Peek().column,
                  std::string("expected ") + what + DescribeFound());
    }
    return Take();
  }

  std::string DescribeFound() const {
    const Token &t = Peek();
    if (t.kind == Tok::kEnd) return ", found end of input";
    if (t.kind == Tok::kName) return ", found '" + t.text + "'";
    return "";
  }

  void set_alphabet(const Alphabet *a) { alphabet_ = a; }

  Expr ParseUnion(bool series) {
    std::vector<Expr> alts{ParseConcat(series)};
    while (At(Tok::kUnion)) {
      Take();
      alts.push_back(ParseConcat(series));
    }
    return Expr::Union(std::move(alts));
  }

  bool AtAtomStart(bool series) const {
    switch (Peek().kind) {
      case Tok::kName:
      case Tok::kLParen:
      case Tok::kLBracket:
      case Tok::kLBracketNeg:
        return true;
      case Tok::kWeight:
        return series;
      default:
        return false;
    }
  }

  Expr ParseConcat(bool series) {
    std::vector<Expr> factors;
    while (AtAtomStart(series)) factors.push_back(ParseFactor(series));
    if (factors.empty()) {
      if (At(Tok::kWeight)) {
        SyntaxError(Peek().line, Peek().column,
                    "weights are only allowed in the replacement");
      }
      SyntaxError(Peek().line, Peek().column,
                  std::string("expected an expression") + DescribeFound());
    }
    return Expr::Concat(std::move(factors));
  }

  Expr ParseFactor(bool series) {
    Expr e = ParseAtom(series);
    while (true) {
      if (At(Tok::kStar)) {
        Take();
        e = Expr::Star(std::move(e));
      } else if (At(Tok::kPostfixPlus)) {
        Take();
        e = Expr::Plus(std::move(e));
      } else if (At(Tok::kQuestion)) {
        Take();
        e = Expr::Optional(std::move(e));
      } else {
        return e;
      }
    }
  }

  Expr ParseAtom(bool series) {
    const Token &t = Take();
    switch (t.kind) {
      case Tok::kName:
        if (t.text == "0") return Expr::Epsilon();
        Resolve(t);
        return Expr::Symbol(t.text);
      case Tok::kLParen: {
        Expr e = ParseUnion(series);
        Expect(Tok::kRParen, "')'");
        return e;
      }
      case Tok::kLBracket:
      case Tok::kLBracketNeg: {
        std::vector<std::string> names;
        while (At(Tok::kName)) {
          const Token &n = Take();
          Resolve(n);
          names.push_back(n.text);
        }
        if (names.empty()) {
          SyntaxError(Peek().line, Peek().column, "empty symbol class");
        }
        Expect(Tok::kRBracket, "']'");
        if (t.kind == Tok::kLBracket) return Expr::Class(std::move(names));
        std::vector<std::string> rest;
        for (const std::string &n : alphabet_->names()) {
          if (std::find(names.begin(), names.end(), n) == names.end()) {
            rest.push_back(n);
          }
        }
        return Expr::Class(std::move(rest));
      }
      case Tok::kWeight:
        return Expr::Weighted(t.weight, ParseAtom(series));
      default:
        SyntaxError(t.line, t.column, "expected an atom");
    }
  }

  void Resolve(const Token &t) const {
    if (t.text == "0") {
      SyntaxError(t.line, t.column, "'0' cannot appear in a class");
    }
    if (!alphabet_->Find(t.text)) {
      throw Error(ErrorCode::kUnknownSymbol,
                  std::to_string(t.line) + ":" + std::to_string(t.column) +
                      ": undeclared symbol '" + t.text + "'");
    }
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
  const Alphabet *alphabet_;
};

Expr ParseStandalone(std::string_view text, const Alphabet &alphabet,
                     bool series) {
  Parser p(Lex(text), &alphabet);
  Expr e = p.ParseUnion(series);
  p.Expect(Tok::kEnd, "end of expression");
  return e;
}

}  // namespace

Expr ParseRegex(std::string_view text, const Alphabet &alphabet) {
  return ParseStandalone(text, alphabet, false);
}

Expr ParseSeries(std::string_view text, const Alphabet &alphabet) {
  return ParseStandalone(text, alphabet, true);
}

void ValidateRule(const Rule &rule, const Alphabet &alphabet) {
  const std::string where =
      rule.line > 0 ? "line " + std::to_string(rule.line) + ": " : "";
  if (AcceptsEmptyString(CompileRegex(rule.phi, alphabet))) {
    throw Error(ErrorCode::kPhiNullable,
                where + "left-hand side matches the empty string");
  }
  if (IsEmptyLanguage(CompileRegex(rule.psi, alphabet))) {
    throw Error(ErrorCode::kPsiEmpty, where + "replacement denotes no string");
  }
  CompileRegex(rule.lambda, alphabet);
  CompileRegex(rule.rho, alphabet);
}

RuleSet ParseRuleFile(std::string_view text) {
  std::vector<Token> tokens = Lex(text);
  Parser p(std::move(tokens), nullptr);
  const Token &kw = p.Expect(Tok::kName, "'alphabet'");
  if (kw.text != "alphabet") {
    SyntaxError(kw.line, kw.column, "expected 'alphabet'");
  }
  p.Expect(Tok::kColon, "':'");
  std::vector<std::string> names;
  while (p.At(Tok::kName)) {
    const Token &t = p.Take();
    if (Alphabet::IsReservedName(t.text)) {
      SyntaxError(t.line, t.column, "reserved symbol name '" + t.text + "'");
    }
    names.push_back(t.text);
  }
  if (names.empty()) {
    SyntaxError(p.Peek().line, p.Peek().column, "empty alphabet");
  }
  p.Expect(Tok::kSemi, "';'");
  RuleSet rs;
  try {
    rs.alphabet = Alphabet(std::move(names));
  } catch (const Error &e) {
    SyntaxError(kw.line, kw.column, e.what());
  }
  p.set_alphabet(&rs.alphabet);
  while (!p.At(Tok::kEnd)) {
    Rule rule;
    rule.line = p.Peek().line;
    rule.phi = p.ParseUnion(false);
    p.Expect(Tok::kArrow, "'->'");
    rule.psi = p.ParseUnion(true);
    if (p.At(Tok::kSlash)) {
      p.Take();
      if (!p.At(Tok::kUnderscore)) rule.lambda = p.ParseUnion(false);
      p.Expect(Tok::kUnderscore, "'_'");
      if (!p.At(Tok::kSemi)) rule.rho = p.ParseUnion(false);
    }
    p.Expect(Tok::kSemi, "';'");
    ValidateRule(rule, rs.alphabet);
    rs.rules.push_back(std::move(rule));
  }
  return rs;
}

std::string ToString(const Rule &rule) {
  std::string out = ToString(rule.phi) + " -> " + ToString(rule.psi) + " / ";
  if (rule.lambda.kind() != Expr::Kind::kEpsilon) {
    out += ToString(rule.lambda) + " ";
  }
  out += "_";
  if (rule.rho.kind() != Expr::Kind::kEpsilon) out += " " + ToString(rule.rho);
  return out + " ;";
}

std::string ToString(const RuleSet &rules) {
  std::string out = "alphabet:";
  for (const std::string &n : rules.alphabet.names()) out += " " + n;
  out += " ;\n";
  for (const Rule &r : rules.rules) out += ToString(r) + "\n";
  return out;
}

Automaton SeriesToWfsa(const Expr &series, const Alphabet &alphabet) {
  return CompileRegex(series, alphabet);
}

Weight EvaluateSeries(const Automaton &wfsa, std::span<const Label> input) {
  return AcceptanceWeight(wfsa, input);
}

}  // namespace rwc
