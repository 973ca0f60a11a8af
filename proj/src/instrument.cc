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

#include "rwc/instrument.h"

#include "rwc/error.h"

namespace rwc {
namespace {

thread_local OpCounters tls_counters;
thread_local std::optional<Clock::time_point> tls_deadline;
thread_local uint32_t tls_polls = 0;

}  // namespace

OpCounters &ThreadOpCounters() { return tls_counters; }

ScopedDeadline::ScopedDeadline(Clock::time_point deadline)
    : saved_(tls_deadline) {
  if (!tls_deadline || deadline < *tls_deadline) tls_deadline = deadline;
}

ScopedDeadline::~ScopedDeadline() { tls_deadline = saved_; }

void CheckDeadline() {
  if (!tls_deadline) return;
  if ((++tls_polls & 0xff) != 0) return;
  if (Clock::now() > *tls_deadline) {
    throw Error(ErrorCode::kTimeout, "deadline exceeded");
  }
}

}  // namespace rwc
