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
//
// Tropical semiring weights. Following the usual semiring naming, Plus() is
// the semiring sum (min) and Times() is the semiring product (ordinary
// addition of costs). Zero() is +infinity and One() is 0.

#ifndef RWC_WEIGHT_H_
#define RWC_WEIGHT_H_

#include <cmath>
#include <limits>
#include <ostream>

namespace rwc {

class Weight {
 public:
  constexpr Weight() : value_(0.0) {}
  explicit constexpr Weight(double value) : value_(value) {}

  static constexpr Weight Zero() {
    return Weight(std::numeric_limits<double>::infinity());
  }
  static constexpr Weight One() { return Weight(0.0); }

  constexpr double Value() const { return value_; }
  constexpr bool IsZero() const {
    return value_ == std::numeric_limits<double>::infinity();
  }
  constexpr bool IsOne() const { return value_ == 0.0; }

  friend constexpr bool operator==(Weight a, Weight b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator<(Weight a, Weight b) {
    return a.value_ < b.value_;
  }

 private:
  double value_;
};

// min
constexpr Weight Plus(Weight a, Weight b) { return a < b ? a : b; }

// +, with Zero() absorbing.
constexpr Weight Times(Weight a, Weight b) {
  if (a.IsZero() || b.IsZero()) return Weight::Zero();
  return Weight(a.Value() + b.Value());
}

inline constexpr double kWeightDelta = 1e-9;

inline bool ApproxEqual(Weight a, Weight b, double delta = kWeightDelta) {
  if (a.IsZero() || b.IsZero()) return a.IsZero() && b.IsZero();
  return std::fabs(a.Value() - b.Value()) <= delta;
}

inline std::ostream &operator<<(std::ostream &os, Weight w) {
  if (w.IsZero()) return os << "Infinity";
  return os << w.Value();
}

}  // namespace rwc

#endif  // RWC_WEIGHT_H_
