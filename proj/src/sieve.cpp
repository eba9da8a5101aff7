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

#include "gaplab/sieve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "gaplab/error.hpp"
#include "gaplab/parallel.hpp"
#include "stream_detail.hpp"

namespace gaplab {

namespace {

// The eight residues mod 30 coprime to 30, one bit each.
constexpr std::array<std::uint32_t, 8> kWheelResidue = {1, 7, 11, 13, 17, 19, 23, 29};
// Distance from each residue to the next one (29 -> 31).
constexpr std::array<std::uint32_t, 8> kWheelStep = {6, 4, 2, 4, 2, 4, 6, 2};

constexpr std::array<std::int8_t, 30> make_bit_index() {
    std::array<std::int8_t, 30> idx{};
    for (auto& v : idx) v = -1;
    for (int i = 0; i < 8; ++i) idx[kWheelResidue[i]] = static_cast<std::int8_t>(i);
    return idx;
}
constexpr auto kBitIndex = make_bit_index();

// Offset from r to the least wheel residue >= r, and that residue's index.
constexpr std::array<std::uint8_t, 30> make_wheel_advance() {
    std::array<std::uint8_t, 30> adv{};
    for (int r = 0; r < 30; ++r) {
        int s = r;
        while (kBitIndex[s % 30] < 0) ++s;
        adv[r] = static_cast<std::uint8_t>(s - r);
    }
    return adv;
}
constexpr auto kWheelAdvance = make_wheel_advance();

void check_range(std::uint64_t lo, std::uint64_t hi, std::uint64_t ceiling) {
    if (lo >= hi) {
        throw DomainError("empty range: lo=" + std::to_string(lo) + " >= hi=" + std::to_string(hi));
    }
    if (hi > ceiling) {
        throw CeilingError("range bound hi=" + std::to_string(hi) + " exceeds ceiling " +
                           std::to_string(ceiling));
    }
}

// Sieves [lo, hi) with the wheel-30 byte layout and appends its primes to out.
// `sieving` must contain every prime up to sqrt(hi - 1).
void sieve_segment(std::uint64_t lo, std::uint64_t hi, std::span<const std::uint32_t> sieving,
                   std::vector<std::uint64_t>& out) {
    for (std::uint64_t p : {2u, 3u, 5u}) {
        if (p >= lo && p < hi) out.push_back(p);
    }
    const std::uint64_t base = lo / 30 * 30;
    const std::uint64_t end = (hi + 29) / 30 * 30;
    const std::uint64_t nbytes = (end - base) / 30;
    // Pad to whole 64-bit words for extraction.
    std::vector<std::uint8_t> bits((nbytes + 7) / 8 * 8, 0);
    std::memset(bits.data(), 0xff, nbytes);
    if (base == 0) bits[0] &= static_cast<std::uint8_t>(~1u);  // 1 is not prime

    for (std::uint32_t p32 : sieving) {
        const std::uint64_t p = p32;
        if (p < 7) continue;
        if (p * p >= end) break;
        std::uint64_t start = std::max(p * p, base);
        std::uint64_t q = (start + p - 1) / p;
        q += kWheelAdvance[q % 30];
        int wi = kBitIndex[q % 30];
        std::uint64_t off = p * q - base;
        const std::uint64_t limit = end - base;
        while (off < limit) {
            bits[off / 30] &= static_cast<std::uint8_t>(~(1u << kBitIndex[off % 30]));
            off += p * kWheelStep[wi];
            wi = (wi + 1) & 7;
        }
    }

    for (std::uint64_t w = 0; w < bits.size(); w += 8) {
        std::uint64_t word;
        std::memcpy(&word, bits.data() + w, 8);
        while (word != 0) {
            int b = std::countr_zero(word);
            word &= word - 1;
            std::uint64_t v = base + 30 * (w + static_cast<std::uint64_t>(b / 8)) + kWheelResidue[b % 8];
            if (v >= lo && v < hi) out.push_back(v);
        }
    }
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r)) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::uint64_t SpfTable::at(std::uint64_t m) const {
    if (m < base_ || m - base_ >= entries_.size()) {
        throw DomainError("SpfTable lookup outside [" + std::to_string(base_) + ", " +
                          std::to_string(base_ + entries_.size()) + "): " + std::to_string(m));
    }
    return entries_[m - base_];
}

std::vector<std::uint32_t> small_primes(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

void for_each_prime(const SegmentSpec& spec, const StreamOptions& opts, const PrimeSink& sink) {
    check_range(spec.lo, spec.hi, opts.ceiling);
    if (spec.segment_len < kMinSegmentLen) {
        throw DomainError("segment_len must be >= " + std::to_string(kMinSegmentLen));
    }
    const auto sieving = small_primes(static_cast<std::uint32_t>(isqrt(spec.hi - 1)));
    const std::uint64_t lo = spec.lo;
    const std::uint64_t span = spec.hi - spec.lo;
    const std::uint64_t nseg = (span + spec.segment_len - 1) / spec.segment_len;
    ordered_parallel(
        nseg, opts.threads,
        [&](std::size_t i) {
            std::uint64_t a = lo + i * spec.segment_len;
            std::uint64_t b = std::min(spec.hi, a + spec.segment_len);
            std::vector<std::uint64_t> out;
            sieve_segment(a, b, sieving, out);
            return out;
        },
        [&](std::size_t, std::vector<std::uint64_t>&& primes) {
            if (!primes.empty()) sink(primes);
        });
}

std::vector<std::uint64_t> primes_in_range(const SegmentSpec& spec, const StreamOptions& opts) {
    std::vector<std::uint64_t> out;
    for_each_prime(spec, opts, [&](std::span<const std::uint64_t> block) {
        out.insert(out.end(), block.begin(), block.end());
    });
    return out;
}

std::uint64_t prime_count(std::uint64_t x, const StreamOptions& opts) {
    if (x < 2) return 0;
    std::uint64_t count = 0;
    for_each_prime({2, x + 1, opts.segment_len}, opts,
                   [&](std::span<const std::uint64_t> block) { count += block.size(); });
    return count;
}

std::uint64_t successor_lookahead(std::uint64_t x) {
    double ext = 2000.0 * std::log(static_cast<double>(std::max<std::uint64_t>(x, 2)));
    return std::max<std::uint64_t>(64, static_cast<std::uint64_t>(std::ceil(ext)));
}

std::uint64_t next_prime_after(std::uint64_t n, const StreamOptions& opts) {
    auto members = [&](std::uint64_t a, std::uint64_t b) {
        std::vector<std::uint64_t> out;
        sieve_segment(a, b, small_primes(static_cast<std::uint32_t>(isqrt(b - 1))), out);
        return out;
    };
    return detail::find_successor(n, opts.ceiling, members);
}

void prime_gap_stream(std::uint64_t x, const StreamOptions& opts, const GapSink& sink) {
    if (x < 2) throw DomainError("prime_gap_stream requires x >= 2, got " + std::to_string(x));
    detail::GapAssembler assembler(sink);
    for_each_prime({2, x + 1, opts.segment_len}, opts,
                   [&](std::span<const std::uint64_t> block) { assembler.push(block); });
    assembler.finish([&](std::uint64_t last) { return next_prime_after(last, opts); });
}

std::vector<PrimeGapRecord> prime_gaps(std::uint64_t x, const StreamOptions& opts) {
    std::vector<PrimeGapRecord> out;
    prime_gap_stream(x, opts, [&](std::span<const GapRecord> block) {
        out.insert(out.end(), block.begin(), block.end());
    });
    return out;
}

SpfTable spf_range(std::uint64_t lo, std::uint64_t hi) {
    if (lo < 2) throw DomainError("spf_range requires lo >= 2, got " + std::to_string(lo));
    check_range(lo, hi, ~std::uint64_t{0});
    std::vector<std::uint64_t> spf(hi - lo, 0);
    for (std::uint64_t p : small_primes(static_cast<std::uint32_t>(isqrt(hi - 1)))) {
        std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t m = first; m < hi; m += p) {
            if (spf[m - lo] == 0) spf[m - lo] = p;
        }
    }
    for (std::uint64_t i = 0; i < spf.size(); ++i) {
        if (spf[i] == 0) spf[i] = lo + i;
    }
    return SpfTable(lo, std::move(spf));
}

std::vector<std::uint32_t> linear_spf(std::uint32_t n) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf[i] || i * p > n) break;
            spf[i * p] = p;
        }
    }
    return spf;
}

std::vector<std::uint32_t> small_factor_range(std::uint64_t lo, std::uint64_t hi,
                                              std::uint32_t bound) {
    check_range(lo, hi, ~std::uint64_t{0});
    std::vector<std::uint32_t> out(hi - lo, 0);
    for (std::uint32_t p : small_primes(bound)) {
        std::uint64_t first = (lo + p - 1) / p * p;
        for (std::uint64_t m = first; m < hi; m += p) {
            if (out[m - lo] == 0) out[m - lo] = p;
        }
    }
    return out;
}

}  // namespace gaplab
