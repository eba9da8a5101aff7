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

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gaplab/error.hpp"
#include "gaplab/sieve.hpp"

namespace gaplab::detail {

inline GapRecord make_record(std::uint64_t p, std::uint64_t next) {
    std::uint64_t gap = next - p;
    if (gap > std::numeric_limits<std::uint32_t>::max()) {
        throw Error("gap " + std::to_string(gap) + " after " + std::to_string(p) +
                    " does not fit in 32 bits");
    }
    return {p, next, static_cast<std::uint32_t>(gap)};
}

// Turns an ascending member stream, delivered in blocks, into successor
// records. The last member's successor is supplied by finish().
class GapAssembler {
  public:
    explicit GapAssembler(const GapSink& sink) : sink_(sink) {}

    void push(std::span<const std::uint64_t> members) {
        buffer_.clear();
        for (std::uint64_t m : members) {
            if (has_last_) buffer_.push_back(make_record(last_, m));
            last_ = m;
            has_last_ = true;
        }
        if (!buffer_.empty()) sink_(buffer_);
    }

    template <class Successor>
    void finish(Successor&& successor) {
        if (!has_last_) return;
        buffer_.assign(1, make_record(last_, successor(last_)));
        sink_(buffer_);
        has_last_ = false;
    }

  private:
    const GapSink& sink_;
    std::vector<GapRecord> buffer_;
    std::uint64_t last_ = 0;
    bool has_last_ = false;
};

// Least member > n. members(a, b) returns the ascending members of [a, b).
// Searches (n, n + L] with L = 2000 log n, then doubles the window, failing
// once the ceiling is reached.
template <class Members>
std::uint64_t find_successor(std::uint64_t n, std::uint64_t ceiling, Members&& members) {
    std::uint64_t window = successor_lookahead(n);
    std::uint64_t a = n + 1;
    while (true) {
        std::uint64_t b = (ceiling - a < window) ? ceiling : a + window;
        if (a >= b) {
            throw CeilingError("successor search past " + std::to_string(n) +
                               " exhausted the ceiling " + std::to_string(ceiling));
        }
        auto found = members(a, b);
        if (!found.empty()) return found.front();
        if (b == ceiling) {
            throw CeilingError("successor search past " + std::to_string(n) +
                               " exhausted the ceiling " + std::to_string(ceiling));
        }
        a = b;
        window *= 2;
    }
}

}  // namespace gaplab::detail
