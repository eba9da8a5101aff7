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

#include <doctest.h>

#include <random>

#include "gaplab/error.hpp"
#include "gaplab/sieve.hpp"
#include "oracles.hpp"

using namespace gaplab;
using Primes = std::vector<std::uint64_t>;

TEST_CASE("primes_in_range small examples") {
    CHECK(primes_in_range({1, 11, 64}) == Primes{2, 3, 5, 7});
    CHECK(primes_in_range({90, 100, 64}) == Primes{97});
    CHECK(primes_in_range({24, 29, 64}).empty());
    CHECK(primes_in_range({2, 3, 64}) == Primes{2});
    CHECK(primes_in_range({29, 32, 64}) == Primes{29, 31});
}

TEST_CASE("primes_in_range errors") {
    CHECK_THROWS_AS(primes_in_range({10, 10, 64}), DomainError);
    CHECK_THROWS_AS(primes_in_range({11, 10, 64}), DomainError);
    CHECK_THROWS_AS(primes_in_range({2, 100, 63}), DomainError);
    StreamOptions tight;
    tight.ceiling = 1000;
    CHECK_THROWS_AS(primes_in_range({2, 1001, 64}, tight), CeilingError);
    CHECK_NOTHROW(primes_in_range({2, 1000, 64}, tight));
}

TEST_CASE("prime_count") {
    CHECK(prime_count(0) == 0);
    CHECK(prime_count(1) == 0);
    CHECK(prime_count(2) == 1);
    CHECK(prime_count(100) == 25);
    CHECK(prime_count(1'000'000) == 78498);
}

TEST_CASE("primes agree with trial division on random windows and segment lengths") {
    std::mt19937_64 rng(20261018);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint64_t lo = std::uniform_int_distribution<std::uint64_t>(0, 1'000'000)(rng);
        if (trial % 5 == 0) lo = std::uniform_int_distribution<std::uint64_t>(0, 20'000'000'000ULL)(rng);
        std::uint64_t len = std::uniform_int_distribution<std::uint64_t>(1, 5000)(rng);
        std::uint64_t seg = std::uniform_int_distribution<std::uint64_t>(64, 3000)(rng);
        INFO("lo=" << lo << " len=" << len << " seg=" << seg);
        CHECK(primes_in_range({lo, lo + len, seg}) == oracle::primes(lo, lo + len));
    }
}

TEST_CASE("prime_gap_stream examples") {
    auto gaps = prime_gaps(12);
    std::vector<GapRecord> want{{2, 3, 1}, {3, 5, 2}, {5, 7, 2}, {7, 11, 4}, {11, 13, 2}};
    CHECK(gaps == want);

    CHECK(prime_gaps(2) == std::vector<GapRecord>{{2, 3, 1}});
    CHECK(prime_gaps(31).back() == GapRecord{31, 37, 6});
    CHECK_THROWS_AS(prime_gaps(1), DomainError);
}

TEST_CASE("prime_gap_stream successor past x and across large gaps") {
    // 1327 is followed by the first gap of length 34.
    auto gaps = prime_gaps(1330);
    CHECK(gaps.back() == GapRecord{1327, 1361, 34});
    CHECK(next_prime_after(1327) == 1361);
    CHECK(next_prime_after(10'000'000'000ULL) == oracle::next_prime(10'000'000'000ULL));
}

TEST_CASE("successor search respects the ceiling") {
    StreamOptions tight;
    tight.ceiling = 26;
    CHECK_THROWS_AS(prime_gaps(23, tight), CeilingError);
    tight.ceiling = 30;
    CHECK(prime_gaps(23, tight).back() == GapRecord{23, 29, 6});
}

TEST_CASE("gap stream invariants") {
    const std::uint64_t x = 200'000;
    auto gaps = prime_gaps(x, {.segment_len = 777});
    CHECK(gaps.size() == prime_count(x));
    for (std::size_t i = 0; i + 1 < gaps.size(); ++i) {
        REQUIRE(gaps[i].p_next == gaps[i + 1].p);
        REQUIRE(gaps[i].gap == gaps[i].p_next - gaps[i].p);
        if (gaps[i].p > 2) REQUIRE(gaps[i].gap % 2 == 0);
    }
    CHECK(gaps.front().gap == 1);
}

TEST_CASE("merge invariance across segment lengths and thread counts") {
    const std::uint64_t x = 1'000'000;
    const auto reference = prime_gaps(x, {.segment_len = kDefaultSegmentLen});
    for (std::uint64_t seg : {64ULL, 1000ULL, 30030ULL, 65537ULL}) {
        for (unsigned threads : {1u, 3u}) {
            INFO("seg=" << seg << " threads=" << threads);
            CHECK(prime_gaps(x, {.segment_len = seg, .threads = threads}) == reference);
        }
    }
}

TEST_CASE("spf_range examples and trial-division agreement") {
    auto t = spf_range(2, 100);
    CHECK(t[12] == 2);
    CHECK(t[49] == 7);
    CHECK(t[97] == 97);
    CHECK_THROWS_AS(t.at(100), DomainError);
    CHECK_THROWS_AS(spf_range(1, 10), DomainError);

    auto big = spf_range(1'000'000'000'000ULL - 500, 1'000'000'000'000ULL + 500);
    for (std::uint64_t m = big.base(); m < big.base() + big.size(); ++m) {
        REQUIRE(big[m] == oracle::smallest_factor(m));
    }
}

TEST_CASE("linear_spf matches spf_range") {
    const auto lin = linear_spf(50'000);
    const auto seg = spf_range(2, 50'001);
    for (std::uint64_t m = 2; m <= 50'000; ++m) REQUIRE(lin[m] == seg[m]);
    CHECK(lin[0] == 0);
    CHECK(lin[1] == 0);
}

TEST_CASE("small_factor_range keeps only factors up to the bound") {
    auto f = small_factor_range(2, 60, 5);
    for (std::uint64_t m = 2; m < 60; ++m) {
        std::uint64_t spf = oracle::smallest_factor(m);
        REQUIRE(f[m - 2] == (spf <= 5 ? spf : 0));
    }
}

TEST_CASE("isqrt is exact") {
    for (std::uint64_t n : {0ULL, 1ULL, 3ULL, 4ULL, 99ULL, 100ULL, 999'999'999'999ULL, ~0ULL}) {
        std::uint64_t r = isqrt(n);
        CHECK((unsigned __int128)r * r <= n);
        CHECK((unsigned __int128)(r + 1) * (r + 1) > n);
    }
}
