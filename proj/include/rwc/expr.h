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

#ifndef RWC_EXPR_H_
#define RWC_EXPR_H_

#include <memory>
#include <string>
#include <vector>

namespace rwc {

// Syntax tree for regular expressions and weighted rational series. A plain
// regular expression is an Expr without kWeighted nodes. Nodes are shared and
// immutable, so copying an Expr is cheap.
class Expr {
 public:
  enum class Kind {
    kSymbol,
    kEpsilon,
    kConcat,
    kUnion,
    kStar,
    kPlus,
    kOptional,
    kClass,  // one of a set of symbols; an empty class denotes no string
    kWeighted,
  };

  Expr();  // epsilon

  static Expr Symbol(std::string name);
  static Expr Epsilon();
  static Expr Concat(std::vector<Expr> children);
  static Expr Union(std::vector<Expr> children);
  static Expr Star(Expr child);
  static Expr Plus(Expr child);
  static Expr Optional(Expr child);
  static Expr Class(std::vector<std::string> names);
  static Expr Weighted(double weight, Expr child);

  Kind kind() const;
  const std::string &name() const;
  const std::vector<Expr> &children() const;
  const Expr &child() const { return children().front(); }
  const std::vector<std::string> &class_names() const;
  double weight() const;

  bool HasWeights() const;
  int Depth() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Prints in rule-file syntax; the output parses back to an equal tree.
std::string ToString(const Expr &expr);

bool operator==(const Expr &a, const Expr &b);

}  // namespace rwc

#endif  // RWC_EXPR_H_
