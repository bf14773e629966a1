// Copyright 2026 The rbmtfi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace rbmtfi {

/// Number of workers used when a caller passes 0: RBMTFI_THREADS if set,
/// otherwise the hardware concurrency (at least 1).
int default_thread_count();

/// Runs task(0) ... task(n-1) on up to `threads` workers. Tasks must write
/// only to their own slots; the first exception (by task index) is rethrown
/// after all workers finish.
void parallel_for(int n, int threads, const std::function<void(int)>& task);

}  // namespace rbmtfi
