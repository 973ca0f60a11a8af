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
// Per-thread operation counters and cooperative deadlines. Heavy loops
// (determinization, composition, intersection, minimization) poll the
// current thread's deadline and throw E_TIMEOUT once it has passed.

#ifndef RWC_INSTRUMENT_H_
#define RWC_INSTRUMENT_H_

#include <chrono>
#include <cstdint>
#include <optional>

namespace rwc {

struct OpCounters {
  uint64_t determinizations = 0;
  uint64_t complements = 0;
  uint64_t intersections = 0;
  uint64_t compositions = 0;

  OpCounters operator-(const OpCounters &o) const {
    return {determinizations - o.determinizations,
            complements - o.complements, intersections - o.intersections,
            compositions - o.compositions};
  }
};

OpCounters &ThreadOpCounters();

using Clock = std::chrono::steady_clock;

// Installs a deadline for the current thread for the lifetime of the object.
// Nested scopes keep the earlier of the two deadlines.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(Clock::time_point deadline);
  ~ScopedDeadline();

  ScopedDeadline(const ScopedDeadline &) = delete;
  ScopedDeadline &operator=(const ScopedDeadline &) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

// Throws E_TIMEOUT if the current thread's deadline has passed. Only reads
// the clock every 256 calls.
void CheckDeadline();

}  // namespace rwc

#endif  // RWC_INSTRUMENT_H_
