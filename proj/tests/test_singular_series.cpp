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

#include <cmath>

#include "gaplab/error.hpp"
#include "gaplab/singular_series.hpp"
#include "oracles.hpp"

using namespace gaplab;
using doctest::Approx;

namespace {

// 2 prod_{p > 2} (1 - 1/(p-1)^2), to 21 digits.
constexpr double kTwinConstant = 1.32032363169373914785;

std::uint64_t brute_hl(std::uint64_t x, const std::vector<std::uint64_t>& h) {
    std::uint64_t top = x;
    for (auto v : h) top = std::max(top, x + v);
    auto flags = oracle::prime_flags(top);
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        bool all = true;
        for (auto v : h) all = all && flags[n + v];
        c += all;
    }
    return c;
}

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("tuple construction and parsing") {
    CHECK(parse_tuple("6,0,2") == Tuple({0, 2, 6}));
    CHECK(to_string(parse_tuple("0, 2, 6")) == "0,2,6");
    CHECK(Tuple({3, 5}).diameter() == 2);
    CHECK(Tuple({0, 2}).shifted(10) == Tuple({10, 12}));
    CHECK_THROWS_AS(Tuple({}), DomainError);
    CHECK_THROWS_AS(Tuple({1, 1}), DomainError);
    CHECK_THROWS_AS(parse_tuple("0,x"), DomainError);
    CHECK_THROWS_AS(parse_tuple(""), DomainError);
}

TEST_CASE("nu and admissibility") {
    Tuple t({0, 2, 6});
    CHECK(nu(t, 2) == 1);
    CHECK(nu(t, 3) == 2);
    CHECK(nu(t, 5) == 3);
    CHECK(nu(t, 7) == 3);
    CHECK(is_admissible(t));
    CHECK_FALSE(is_admissible(Tuple({0, 2, 4})));
    CHECK_FALSE(is_admissible(Tuple({0, 1})));
    CHECK(is_admissible(Tuple({0})));
    CHECK(is_admissible(Tuple({0, 2, 6, 8})));
    for (std::uint64_t p : {11, 13, 101}) CHECK(nu(t, p) == 3);
}

TEST_CASE("singular series special values") {
    auto one = singular_series_at(Tuple({0}), 10'000);
    CHECK(one.value == 1.0);
    CHECK(one.tail_bound == 0.0);
    CHECK(one.admissible);

    auto zero = singular_series(Tuple({0, 1}), 1e-3);
    CHECK(zero.value == 0.0);
    CHECK_FALSE(zero.admissible);
    CHECK(singular_series(Tuple({0, 2, 4}), 1e-3).value == 0.0);
}

TEST_CASE("twin pair within the tail bound of the exact constant") {
    for (std::uint64_t P : kTruncationPoints) {
        auto s = singular_series_at(Tuple({0, 2}), P);
        INFO("P=" << P);
        CHECK(s.truncation_prime == P);
        CHECK(rel(s.value, kTwinConstant) <= s.tail_bound);
        CHECK(s.tail_bound == Approx(std::expm1(8.0 / (P - 1))).epsilon(1e-14));
    }
    CHECK(singular_series_at(Tuple({0, 2}), 1'000'000).value == Approx(1.3203237211797).epsilon(1e-12));
}

TEST_CASE("singular series matches the direct product") {
    for (auto h : std::vector<std::vector<std::uint64_t>>{{0, 2}, {0, 2, 6}, {0, 4, 6}, {0, 2, 6, 8}, {0, 6, 12, 30}}) {
        long double want = oracle::singular_product(h, 100'000);
        auto got = singular_series_at(Tuple(h), 100'000);
        CHECK(got.value == Approx(static_cast<double>(want)).epsilon(1e-12));
    }
    // {0,2,6} at P = 10^6, from a 30-digit product.
    CHECK(singular_series_at(Tuple({0, 2, 6}), 1'000'000).value == Approx(2.8582491768794).epsilon(1e-12));
}

TEST_CASE("singular series is translation invariant") {
    Tuple t({0, 2, 6, 8});
    for (std::uint64_t c : {1, 7, 30, 1001}) {
        CHECK(singular_series_at(t.shifted(c), 100'000).value == singular_series_at(t, 100'000).value);
    }
}

TEST_CASE("truncation point selection") {
    CHECK(singular_series(Tuple({0, 2}), 0.1).truncation_prime == 10'000);
    CHECK(singular_series(Tuple({0, 2}), 1e-5).truncation_prime == 1'000'000);
    CHECK(singular_series(Tuple({0, 2, 6}), 2e-6).truncation_prime == 10'000'000);
    CHECK(singular_series(Tuple({0}), 1e-3).truncation_prime == 10'000);
    CHECK_THROWS_AS(singular_series(Tuple({0, 2}), 1e-9), DomainError);
    CHECK_THROWS_AS(singular_series(Tuple({0, 2}), 0.0), DomainError);
    CHECK_THROWS_AS(singular_series(Tuple({0, 2}), 0.2), DomainError);
    CHECK_THROWS_AS(singular_series_at(Tuple({0, 20'000}), 10'000), DomainError);
    CHECK(truncation_tail_bound(1, 100) == 0.0);
}

TEST_CASE("pair values") {
    const double s2 = twin_constant(1'000'000);
    CHECK(pair_value(1, 1'000'000) == 0.0);
    CHECK(pair_value(2, 1'000'000) == s2);
    CHECK(pair_value(4, 1'000'000) == Approx(s2).epsilon(1e-15));
    CHECK(pair_value(6, 1'000'000) == Approx(2 * s2).epsilon(1e-15));
    CHECK(pair_value(30, 1'000'000) == Approx(s2 * 2 * 4.0 / 3).epsilon(1e-15));
    for (std::uint64_t d : {2, 10, 84, 210, 998}) {
        CHECK(pair_value(d, 1'000'000) ==
              Approx(static_cast<double>(oracle::singular_product({0, d}, 1'000'000))).epsilon(1e-12));
    }
    auto v = pair_values(12, 1'000'000);
    REQUIRE(v.size() == 13);
    for (std::uint32_t d = 1; d <= 12; ++d) CHECK(v[d] == Approx(pair_value(d, 1'000'000)).epsilon(1e-15));
    CHECK_THROWS_AS(pair_value(0), DomainError);
}

TEST_CASE("pair sums") {
    const double s2 = twin_constant();
    CHECK(pair_sum(2) == Approx(s2).epsilon(1e-15));
    CHECK(pair_sum(4) == Approx(2 * s2).epsilon(1e-15));
    CHECK(pair_sum(6) == Approx(4 * s2).epsilon(1e-15));
    const double serial = pair_sum(300'000, 1);
    CHECK(pair_sum(300'000, 3) == Approx(serial).epsilon(1e-14));
    CHECK_THROWS_AS(pair_sum(1), DomainError);
}

TEST_CASE("triple series closed form against the direct product") {
    TripleSeries ts(40, 100'000);
    for (std::uint32_t d1 = 1; d1 <= 40; d1 += 3) {
        for (std::uint32_t d2 = 1; d2 <= 40; d2 += 5) {
            if (d1 == d2) continue;
            std::vector<std::uint64_t> h{0, d1, d2};
            double want = singular_series_at(Tuple(h), 100'000).value;
            INFO("d1=" << d1 << " d2=" << d2);
            if (want == 0.0) {
                CHECK(ts(d1, d2) == 0.0);
            } else {
                CHECK(ts(d1, d2) == Approx(want).epsilon(1e-12));
            }
        }
    }
    CHECK(ts(2, 6) == Approx(2.8582491768794).epsilon(2e-5));
    CHECK_THROWS_AS(ts(3, 3), DomainError);
    CHECK_THROWS_AS(ts(0, 3), DomainError);
    CHECK_THROWS_AS(ts(1, 41), DomainError);
}

TEST_CASE("triple sums: orderings agree and ordered is twice unordered") {
    auto row = triple_sum(200, TripleOrder::kRowMajor, 1, 1'000'000);
    auto col = triple_sum(200, TripleOrder::kColumnMajor, 2, 1'000'000);
    CHECK(rel(row.ordered, col.ordered) <= 1e-9);
    CHECK(rel(row.ordered, 2 * row.unordered) <= 1e-12);
    CHECK(row.normalized == Approx(row.ordered / (200.0 * 200.0)).epsilon(1e-15));

    TripleSeries ts(200, 1'000'000);
    double direct = 0;
    for (std::uint32_t a = 1; a <= 200; ++a)
        for (std::uint32_t b = 1; b <= 200; ++b)
            if (a != b) direct += ts(a, b);
    CHECK(rel(row.ordered, direct) <= 1e-12);
}

TEST_CASE("hl_count against a brute-force sieve") {
    CHECK(hl_count(100, Tuple({0, 2})) == 8);
    CHECK(hl_count(100, Tuple({0})) == 25);
    CHECK(hl_count(50, Tuple({0, 2, 4})) == 1);
    for (auto h : std::vector<std::vector<std::uint64_t>>{{0, 2}, {0, 4}, {0, 2, 6}, {0, 4, 6}, {0, 2, 6, 8}, {3, 5}}) {
        CHECK(hl_count(200'000, Tuple(h)) == brute_hl(200'000, h));
        CHECK(hl_count(200'000, Tuple(h), 3) == brute_hl(200'000, h));
    }
    CHECK(hl_count(1'000'000, Tuple({0, 2})) == 8169);
}

TEST_CASE("hl_compare") {
    auto c = hl_compare(100, Tuple({0, 2}));
    CHECK(c.actual == 8);
    CHECK(c.predicted == Approx(6.2257120).epsilon(1e-7));
    CHECK(c.ratio == Approx(8 / c.predicted).epsilon(1e-15));
    CHECK_THROWS_AS(hl_compare(100, Tuple({0, 2, 4})), DomainError);
}
