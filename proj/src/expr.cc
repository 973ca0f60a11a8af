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

#include "rwc/expr.h"

#include <algorithm>
#include <sstream>

namespace rwc {

struct Expr::Node {
  Kind kind = Kind::kEpsilon;
  std::string name;
  std::vector<Expr> children;
  std::vector<std::string> class_names;
  double weight = 0.0;
};

namespace {

const std::vector<Expr> kNoChildren;
const std::vector<std::string> kNoNames;
const std::string kNoName;

}  // namespace

Expr::Expr() : node_(std::make_shared<Node>()) {}

Expr Expr::Symbol(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kSymbol;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::Epsilon() { return Expr(); }

Expr Expr::Concat(std::vector<Expr> children) {
  if (children.empty()) return Epsilon();
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kConcat;
  n->children = std::move(children);
  return Expr(std::move(n));
}

Expr Expr::Union(std::vector<Expr> children) {
  if (children.empty()) return Class({});
  if (children.size() == 1) return children.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kUnion;
  n->children = std::move(children);
  return Expr(std::move(n));
}

Expr Expr::Star(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kStar;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::Plus(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kPlus;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::Optional(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOptional;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::Class(std::vector<std::string> names) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kClass;
  n->class_names = std::move(names);
  return Expr(std::move(n));
}

Expr Expr::Weighted(double weight, Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::kWeighted;
  n->weight = weight;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr::Kind Expr::kind() const { return node_->kind; }
const std::string &Expr::name() const { return node_->name; }
const std::vector<Expr> &Expr::children() const { return node_->children; }
const std::vector<std::string> &Expr::class_names() const {
  return node_->class_names;
}
double Expr::weight() const { return node_->weight; }

bool Expr::HasWeights() const {
  if (kind() == Kind::kWeighted) return true;
  return std::any_of(children().begin(), children().end(),
                     [](const Expr &c) { return c.HasWeights(); });
}

int Expr::Depth() const {
  int d = 0;
  for (const Expr &c : children()) d = std::max(d, c.Depth());
  return children().empty() ? 0 : d + 1;
}

bool operator==(const Expr &a, const Expr &b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::kSymbol: return a.name() == b.name();
    case Expr::Kind::kEpsilon: return true;
    case Expr::Kind::kClass: return a.class_names() == b.class_names();
    case Expr::Kind::kWeighted:
      if (a.weight() != b.weight()) return false;
      break;
    default: break;
  }
  return a.children() == b.children();
}

namespace {

// Binding strength: union 0, concat 1, postfix/atom 2.
int Precedence(const Expr &e) {
  switch (e.kind()) {
    case Expr::Kind::kUnion: return 0;
    case Expr::Kind::kConcat: return 1;
    default: return 2;
  }
}

void Print(const Expr &e, std::ostream &os);

void PrintAtom(const Expr &e, std::ostream &os) {
  if (Precedence(e) < 2 || e.kind() == Expr::Kind::kWeighted ||
      e.kind() == Expr::Kind::kStar || e.kind() == Expr::Kind::kPlus ||
      e.kind() == Expr::Kind::kOptional) {
    os << '(';
    Print(e, os);
    os << ')';
  } else {
    Print(e, os);
  }
}

void Print(const Expr &e, std::ostream &os) {
  switch (e.kind()) {
    case Expr::Kind::kSymbol:
      os << e.name();
      break;
    case Expr::Kind::kEpsilon:
      os << '0';
      break;
    case Expr::Kind::kClass:
      os << '[';
      for (size_t i = 0; i < e.class_names().size(); ++i) {
        if (i) os << ' ';
        os << e.class_names()[i];
      }
      os << ']';
      break;
    case Expr::Kind::kConcat:
      for (size_t i = 0; i < e.children().size(); ++i) {
        if (i) os << ' ';
        const Expr &c = e.children()[i];
        if (Precedence(c) < 2 || c.kind() == Expr::Kind::kConcat) {
          os << '(';
          Print(c, os);
          os << ')';
        } else {
          Print(c, os);
        }
      }
      break;
    case Expr::Kind::kUnion:
      for (size_t i = 0; i < e.children().size(); ++i) {
        if (i) os << " + ";
        const Expr &c = e.children()[i];
        if (c.kind() == Expr::Kind::kUnion) {
          os << '(';
          Print(c, os);
          os << ')';
        } else {
          Print(c, os);
        }
      }
      break;
    case Expr::Kind::kStar:
      PrintAtom(e.child(), os);
      os << '*';
      break;
    case Expr::Kind::kPlus:
      PrintAtom(e.child(), os);
      os << '+';
      break;
    case Expr::Kind::kOptional:
      PrintAtom(e.child(), os);
      os << '?';
      break;
    case Expr::Kind::kWeighted: {
      std::ostringstream w;
      w.precision(17);
      w << e.weight();
      os << '<' << w.str() << "> ";
      PrintAtom(e.child(), os);
      break;
    }
  }
}

}  // namespace

std::string ToString(const Expr &expr) {
  std::ostringstream os;
  Print(expr, os);
  return os.str();
}

}  // namespace rwc
