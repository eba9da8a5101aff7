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

// Segmented prime generation, successor-prime gaps and smallest-prime-factor
// tables. Segments are bit-packed on the mod-30 wheel (one byte per 30
// integers) and are independent work units.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace gaplab {

inline constexpr std::uint64_t kDefaultCeiling = 100'000'000'000ULL;  // 10^11
inline constexpr std::uint64_t kDefaultSegmentLen = 30ULL << 16;     // ~2M integers
inline constexpr std::uint64_t kMinSegmentLen = 64;

struct SegmentSpec {
    std::uint64_t lo = 2;
    std::uint64_t hi = 3;
    std::uint64_t segment_len = kDefaultSegmentLen;
};

/// Execution knobs shared by every streaming operation. Results never depend
/// on segment_len or threads.
struct StreamOptions {
    std::uint64_t segment_len = kDefaultSegmentLen;
    unsigned threads = 1;
    std::uint64_t ceiling = kDefaultCeiling;
};

/// An element of an ordered set together with its successor in that set.
/// The successor may lie beyond the query bound.
struct GapRecord {
    std::uint64_t p = 0;
    std::uint64_t p_next = 0;
    std::uint32_t gap = 0;

    friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

using PrimeGapRecord = GapRecord;

using PrimeSink = std::function<void(std::span<const std::uint64_t>)>;
using GapSink = std::function<void(std::span<const GapRecord>)>;

/// Smallest prime factor for every integer in [base, base + size()).
class SpfTable {
  public:
    SpfTable() = default;
    SpfTable(std::uint64_t base, std::vector<std::uint64_t> entries)
        : base_(base), entries_(std::move(entries)) {}

    std::uint64_t base() const { return base_; }
    std::uint64_t size() const { return entries_.size(); }
    std::uint64_t operator[](std::uint64_t m) const { return entries_[m - base_]; }
    std::uint64_t at(std::uint64_t m) const;
    std::span<const std::uint64_t> entries() const { return entries_; }

  private:
    std::uint64_t base_ = 0;
    std::vector<std::uint64_t> entries_;
};

/// Primes up to n by a plain sieve. Used for sieving primes and small tables.
std::vector<std::uint32_t> small_primes(std::uint32_t n);

/// Streams the primes of [spec.lo, spec.hi) to sink, one segment at a time,
/// in ascending order.
void for_each_prime(const SegmentSpec& spec, const StreamOptions& opts, const PrimeSink& sink);

std::vector<std::uint64_t> primes_in_range(const SegmentSpec& spec, const StreamOptions& opts = {});

/// pi(x), the number of primes <= x.
std::uint64_t prime_count(std::uint64_t x, const StreamOptions& opts = {});

/// One record per prime p <= x, with its successor even when that exceeds x.
void prime_gap_stream(std::uint64_t x, const StreamOptions& opts, const GapSink& sink);
std::vector<PrimeGapRecord> prime_gaps(std::uint64_t x, const StreamOptions& opts = {});

/// Least prime strictly greater than n. Searches (n, n + 2000 log n] and
/// doubles the window until a prime turns up or the ceiling is reached.
std::uint64_t next_prime_after(std::uint64_t n, const StreamOptions& opts = {});

/// Initial successor lookahead past a bound x: 2000 log x (at least 64).
std::uint64_t successor_lookahead(std::uint64_t x);

SpfTable spf_range(std::uint64_t lo, std::uint64_t hi);

/// Linear sieve: spf[m] for 0 <= m <= n, with spf[0] = spf[1] = 0.
std::vector<std::uint32_t> linear_spf(std::uint32_t n);

/// Smallest prime factor of m among primes <= bound, or 0 when no such prime
/// divides m, for every m in [lo, hi). Primes themselves are included, so a
/// prime q <= bound maps to q.
std::vector<std::uint32_t> small_factor_range(std::uint64_t lo, std::uint64_t hi,
                                              std::uint32_t bound);

/// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t n);

}  // namespace gaplab
