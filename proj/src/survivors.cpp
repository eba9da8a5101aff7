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

#include "gaplab/survivors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "gaplab/error.hpp"
#include "gaplab/parallel.hpp"
#include "stream_detail.hpp"

namespace gaplab {

namespace {

// base^e >= m, with a 128-bit product that stops as soon as it passes m.
bool power_at_least(std::uint64_t base, std::uint32_t e, std::uint64_t m) {
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        acc *= base;
        if (acc >= m) return true;
    }
    return acc >= m;
}

// Largest r with r^e <= n.
std::uint64_t iroot(std::uint64_t n, std::uint32_t e) {
    if (e == 1) return n;
    auto r = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / e));
    while (r > 0 && power_at_least(r, e, n + 1)) --r;
    while (!power_at_least(r + 1, e, n + 1)) ++r;
    return r;
}

std::uint64_t smallest_factor(std::uint64_t m) {
    if (m % 2 == 0) return 2;
    for (std::uint64_t q = 3; q <= m / q; q += 2) {
        if (m % q == 0) return q;
    }
    return m;
}

void check_config(const SurvivorConfig& config) {
    if (config.x < 2) throw DomainError("survivor range needs x >= 2, got " + std::to_string(config.x));
}

// Calls count(a, b) over consecutive m-blocks covering [2, x] and sums.
template <class Count>
std::uint64_t blocked_count(std::uint64_t x, const StreamOptions& opts, Count&& count) {
    const std::uint64_t seg = std::max(opts.segment_len, kMinSegmentLen);
    const std::uint64_t nseg = (x - 1 + seg - 1) / seg;
    std::uint64_t total = 0;
    ordered_parallel(
        nseg, opts.threads,
        [&](std::size_t i) {
            std::uint64_t a = 2 + i * seg;
            return count(a, std::min(x + 1, a + seg));
        },
        [&](std::size_t, std::uint64_t c) { total += c; });
    return total;
}

}  // namespace

SurvivorRule fixed_z(std::uint64_t z) {
    if (z < 2) throw DomainError("fixed sifting bound needs z >= 2, got " + std::to_string(z));
    return FixedZ{z};
}

SurvivorRule variable_delta(std::uint32_t d_inv) {
    if (d_inv < 2) throw DomainError("delta = 1/d_inv needs d_inv >= 2, got " + std::to_string(d_inv));
    return VariableDelta{d_inv};
}

SurvivorRule parse_delta(const std::string& text) {
    if (text.rfind("1/", 0) != 0) throw DomainError("delta must be written 1/<n>, got '" + text + "'");
    std::uint32_t d = 0;
    const char* first = text.data() + 2;
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, d);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw DomainError("delta must be written 1/<n>, got '" + text + "'");
    }
    return variable_delta(d);
}

std::string to_string(const SurvivorRule& rule) {
    if (const auto* f = std::get_if<FixedZ>(&rule)) return "z=" + std::to_string(f->z);
    return "delta=1/" + std::to_string(std::get<VariableDelta>(rule).d_inv);
}

bool is_survivor(std::uint64_t m, const SurvivorRule& rule) {
    if (m < 2) throw DomainError("survivor membership needs m >= 2, got " + std::to_string(m));
    const std::uint64_t spf = smallest_factor(m);
    if (const auto* f = std::get_if<FixedZ>(&rule)) return spf >= f->z;
    return power_at_least(spf, std::get<VariableDelta>(rule).d_inv, m);
}

std::vector<std::uint8_t> survivor_flags(const SurvivorRule& rule, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) throw DomainError("empty survivor range");
    std::vector<std::uint8_t> flags(hi - lo, 0);
    const std::uint64_t from = std::max<std::uint64_t>(lo, 2);
    if (from >= hi) return flags;

    if (const auto* f = std::get_if<FixedZ>(&rule)) {
        const std::uint64_t bound = f->z - 1;  // sift by primes < z
        if (bound < 2) {
            std::fill(flags.begin() + (from - lo), flags.end(), 1);
        } else if (bound >= isqrt(hi - 1)) {
            // Every composite below hi has a factor < z: only primes >= z survive.
            const std::uint64_t start = std::max(from, f->z);
            if (start < hi) {
                for (std::uint64_t q : primes_in_range({start, hi, kDefaultSegmentLen})) flags[q - lo] = 1;
            }
        } else {
            auto small = small_factor_range(from, hi, static_cast<std::uint32_t>(bound));
            for (std::uint64_t i = 0; i < small.size(); ++i) flags[from - lo + i] = small[i] == 0;
        }
        return flags;
    }

    const std::uint32_t d = std::get<VariableDelta>(rule).d_inv;
    // A prime factor above bound already satisfies spf^d >= m for all m < hi.
    const std::uint64_t bound = iroot(hi - 1, d);
    auto small = small_factor_range(from, hi, static_cast<std::uint32_t>(bound));
    // p^d capped at hi, for each candidate factor p <= bound.
    std::vector<std::uint64_t> reach(bound + 1, 0);
    for (std::uint64_t p = 2; p <= bound; ++p) {
        unsigned __int128 acc = 1;
        for (std::uint32_t j = 0; j < d && acc < hi; ++j) acc *= p;
        reach[p] = acc < hi ? static_cast<std::uint64_t>(acc) : hi;
    }
    for (std::uint64_t i = 0; i < small.size(); ++i) {
        const std::uint64_t m = from + i;
        flags[m - lo] = small[i] == 0 || reach[small[i]] >= m;
    }
    return flags;
}

std::vector<std::uint64_t> survivors_in_range(const SurvivorRule& rule, std::uint64_t lo, std::uint64_t hi) {
    auto flags = survivor_flags(rule, lo, hi);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < flags.size(); ++i) {
        if (flags[i]) out.push_back(lo + i);
    }
    return out;
}

std::uint64_t next_survivor_after(std::uint64_t n, const SurvivorRule& rule, const StreamOptions& opts) {
    return detail::find_successor(n, opts.ceiling, [&](std::uint64_t a, std::uint64_t b) {
        return survivors_in_range(rule, a, b);
    });
}

void survivor_stream(const SurvivorConfig& config, const StreamOptions& opts, const MemberSink& sink) {
    check_config(config);
    if (config.x + 1 > opts.ceiling) throw CeilingError("survivor range x=" + std::to_string(config.x) + " exceeds ceiling");
    if (opts.segment_len < kMinSegmentLen) throw DomainError("segment_len must be >= 64");
    const std::uint64_t seg = opts.segment_len;
    const std::uint64_t nseg = (config.x - 1 + seg - 1) / seg;
    ordered_parallel(
        nseg, opts.threads,
        [&](std::size_t i) {
            std::uint64_t a = 2 + i * seg;
            return survivors_in_range(config.rule, a, std::min(config.x + 1, a + seg));
        },
        [&](std::size_t, std::vector<std::uint64_t>&& members) {
            if (!members.empty()) sink(members);
        });
}

std::vector<std::uint64_t> survivors(const SurvivorConfig& config, const StreamOptions& opts) {
    std::vector<std::uint64_t> out;
    survivor_stream(config, opts, [&](std::span<const std::uint64_t> block) {
        out.insert(out.end(), block.begin(), block.end());
    });
    return out;
}

void survivor_gap_stream(const SurvivorConfig& config, const StreamOptions& opts, const GapSink& sink) {
    detail::GapAssembler assembler(sink);
    survivor_stream(config, opts, [&](std::span<const std::uint64_t> block) { assembler.push(block); });
    assembler.finish([&](std::uint64_t last) { return next_survivor_after(last, config.rule, opts); });
}

std::vector<SurvivorGapRecord> survivor_gaps(const SurvivorConfig& config, const StreamOptions& opts) {
    std::vector<SurvivorGapRecord> out;
    survivor_gap_stream(config, opts, [&](std::span<const GapRecord> block) {
        out.insert(out.end(), block.begin(), block.end());
    });
    return out;
}

std::uint64_t pair_count(const SurvivorConfig& config, std::uint64_t d, const StreamOptions& opts) {
    check_config(config);
    if (d < 1) throw DomainError("pair_count requires d >= 1");
    if (config.x + d > opts.ceiling) throw CeilingError("pair range exceeds ceiling");
    return blocked_count(config.x, opts, [&](std::uint64_t a, std::uint64_t b) {
        auto flags = survivor_flags(config.rule, a, b + d);
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < b - a; ++i) c += flags[i] & flags[i + d];
        return c;
    });
}

std::uint64_t triple_count(const SurvivorConfig& config, std::uint64_t d1, std::uint64_t d2,
                           const StreamOptions& opts) {
    check_config(config);
    if (d1 < 1 || d1 >= d2) {
        throw DomainError("triple_count requires 1 <= d1 < d2, got d1=" + std::to_string(d1) +
                          " d2=" + std::to_string(d2));
    }
    if (config.x + d2 > opts.ceiling) throw CeilingError("triple range exceeds ceiling");
    return blocked_count(config.x, opts, [&](std::uint64_t a, std::uint64_t b) {
        auto flags = survivor_flags(config.rule, a, b + d2);
        std::uint64_t c = 0;
        for (std::uint64_t i = 0; i < b - a; ++i) c += flags[i] & flags[i + d1] & flags[i + d2];
        return c;
    });
}

std::uint64_t primorial_below(std::uint64_t z) {
    std::uint64_t w = 1;
    for (std::uint64_t p = 2; p < z; ++p) {
        if (smallest_factor(p) != p) continue;
        w *= p;
        if (w > 1'000'000'000ULL) return 0;
    }
    return w;
}

namespace {

struct CrtModulus {
    std::uint64_t W;
    std::vector<std::uint64_t> primes;

    CrtModulus(std::uint64_t z) {
        if (z > 30) throw DomainError("CRT oracle needs z <= 30, got " + std::to_string(z));
        W = primorial_below(z);
        if (W == 0) throw DomainError("CRT modulus W overflow: product of primes below " + std::to_string(z) + " exceeds 1e9");
        for (std::uint64_t p = 2; p < z; ++p) {
            if (smallest_factor(p) == p) primes.push_back(p);
        }
    }

    bool coprime(std::uint64_t n) const {
        for (std::uint64_t p : primes) {
            if (n % p == 0) return false;
        }
        return true;
    }

    // #{1 <= m <= x : every m + o is coprime to W} minus the m = 1 term,
    // which is not a member.
    template <std::size_t N>
    std::uint64_t count(std::uint64_t x, const std::uint64_t (&offsets)[N]) const {
        auto ok = [&](std::uint64_t m) {
            for (std::uint64_t o : offsets) {
                if (!coprime(m + o)) return false;
            }
            return true;
        };
        std::uint64_t per_period = 0;
        for (std::uint64_t a = 0; a < W; ++a) per_period += ok(a);
        const std::uint64_t q = x / W;
        std::uint64_t total = per_period * q;
        for (std::uint64_t m = q * W + 1; m <= x; ++m) total += ok(m);
        if (x >= 1 && ok(1)) --total;
        return total;
    }
};

}  // namespace

std::uint64_t crt_pair_oracle(std::uint64_t x, std::uint64_t z, std::uint64_t d) {
    const CrtModulus mod(z);
    const std::uint64_t offsets[] = {0, d};
    return mod.count(x, offsets);
}

std::uint64_t crt_triple_oracle(std::uint64_t x, std::uint64_t z, std::uint64_t d1, std::uint64_t d2) {
    const CrtModulus mod(z);
    const std::uint64_t offsets[] = {0, d1, d2};
    return mod.count(x, offsets);
}

}  // namespace gaplab
