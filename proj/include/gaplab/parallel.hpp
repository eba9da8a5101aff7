// Copyright 2026 The gaplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace gaplab {

/// Runs work(i) for i in [0, count) on up to `threads` workers and hands the
/// results to sink(i, result) in ascending i. Work items run in batches of
/// `threads`; the sink always observes the same sequence regardless of the
/// thread count.
template <class Work, class Sink>
void ordered_parallel(std::size_t count, unsigned threads, Work&& work, Sink&& sink) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) sink(i, work(i));
        return;
    }
    using Result = decltype(work(std::size_t{0}));
    std::vector<std::optional<Result>> slots(threads);
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t base = 0; base < count; base += threads) {
        std::size_t batch = std::min<std::size_t>(threads, count - base);
        std::vector<std::thread> pool;
        pool.reserve(batch);
        for (std::size_t j = 0; j < batch; ++j) {
            pool.emplace_back([&, j] {
                try {
                    slots[j].emplace(work(base + j));
                } catch (...) {
                    errors[j] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (std::size_t j = 0; j < batch; ++j) {
            if (errors[j]) std::rethrow_exception(errors[j]);
        }
        for (std::size_t j = 0; j < batch; ++j) {
            sink(base + j, std::move(*slots[j]));
            slots[j].reset();
        }
    }
}

}  // namespace gaplab
