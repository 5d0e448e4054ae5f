// Copyright 2026 The dak Authors.
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

#pragma once

#include <cstddef>
#include <functional>

namespace dak {

/// Worker count to use: `requested` if positive, otherwise the hardware
/// concurrency, in both cases capped by the DAK_THREADS environment
/// variable when it is set. Always at least 1.
int resolve_worker_count(int requested = 0);

/// Runs fn(0) .. fn(count-1) across `workers` threads. fn must be safe to
/// call concurrently for distinct indices; callers keep determinism by
/// writing results into per-index slots and merging in index order.
/// Exceptions from fn are rethrown on the calling thread.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace dak
