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

// Sieve survivors: integers m >= 2 free of prime factors below a sifting
// bound, either a fixed z or z = m^(1/d_inv). The integer 1 is never a member.

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gaplab/sieve.hpp"

namespace gaplab {

/// spf(m) >= z.
struct FixedZ {
    std::uint64_t z;
};

/// spf(m)^d_inv >= m, i.e. no prime factor below m^(1/d_inv).
struct VariableDelta {
    std::uint32_t d_inv;
};

/// d_inv = 10, small enough a sifting exponent for the two-dimensional sieve
/// lower bound to be positive (delta = 1/10 is the value the theory uses).
inline constexpr std::uint32_t kDefaultDeltaInverse = 10;

using SurvivorRule = std::variant<FixedZ, VariableDelta>;

struct SurvivorConfig {
    SurvivorRule rule;
    std::uint64_t x = 2;
};

SurvivorRule fixed_z(std::uint64_t z);
SurvivorRule variable_delta(std::uint32_t d_inv = kDefaultDeltaInverse);

/// Parses the value of `--delta`, which must be `1/<d_inv>`.
SurvivorRule parse_delta(const std::string& text);
std::string to_string(const SurvivorRule& rule);

using SurvivorGapRecord = GapRecord;

/// Membership from the definition, by trial division. m >= 2.
bool is_survivor(std::uint64_t m, const SurvivorRule& rule);

/// membership[i] != 0 iff lo + i is a survivor, for [lo, hi).
std::vector<std::uint8_t> survivor_flags(const SurvivorRule& rule, std::uint64_t lo, std::uint64_t hi);

/// Ascending members of [lo, hi).
std::vector<std::uint64_t> survivors_in_range(const SurvivorRule& rule, std::uint64_t lo, std::uint64_t hi);

/// Least survivor > n, with the same lookahead policy as primes.
std::uint64_t next_survivor_after(std::uint64_t n, const SurvivorRule& rule,
                                  const StreamOptions& opts = {});

using MemberSink = PrimeSink;

void survivor_stream(const SurvivorConfig& config, const StreamOptions& opts, const MemberSink& sink);
std::vector<std::uint64_t> survivors(const SurvivorConfig& config, const StreamOptions& opts = {});

void survivor_gap_stream(const SurvivorConfig& config, const StreamOptions& opts, const GapSink& sink);
std::vector<SurvivorGapRecord> survivor_gaps(const SurvivorConfig& config, const StreamOptions& opts = {});

/// #{m <= x : m and m + d are survivors}; m + d may exceed x.
std::uint64_t pair_count(const SurvivorConfig& config, std::uint64_t d, const StreamOptions& opts = {});

/// #{m <= x : m, m + d1, m + d2 are survivors}, 1 <= d1 < d2.
std::uint64_t triple_count(const SurvivorConfig& config, std::uint64_t d1, std::uint64_t d2,
                           const StreamOptions& opts = {});

/// Product of the primes below z, or 0 if it exceeds 10^9.
std::uint64_t primorial_below(std::uint64_t z);

/// Exact fixed-z pair count by periodicity mod W = prod_{p < z} p.
std::uint64_t crt_pair_oracle(std::uint64_t x, std::uint64_t z, std::uint64_t d);

/// Exact fixed-z triple count by periodicity mod W.
std::uint64_t crt_triple_oracle(std::uint64_t x, std::uint64_t z, std::uint64_t d1, std::uint64_t d2);

}  // namespace gaplab
