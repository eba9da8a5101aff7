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
#include <numbers>
#include <random>

#include "gaplab/error.hpp"
#include "gaplab/gap_stats.hpp"
#include "gaplab/thresholds.hpp"

using namespace gaplab;
using doctest::Approx;

namespace {
constexpr double e = std::numbers::e;
}

TEST_CASE("iter_log") {
    CHECK(iter_log(1, e) == Approx(1.0).epsilon(1e-15));
    CHECK(iter_log(2, std::exp(e)) == Approx(1.0).epsilon(1e-15));
    // log log log 10^6, evaluated in 30-digit arithmetic.
    CHECK(iter_log(3, 1e6) == Approx(0.96538253225195856).epsilon(1e-13));
    CHECK(iter_log(2, 2.0) < 0.0);
    CHECK_THROWS_AS(iter_log(3, 2.0), DomainError);  // log log 2 < 0
    CHECK_THROWS_AS(iter_log(1, 0.0), DomainError);
    CHECK_THROWS_AS(iter_log(0, 5.0), DomainError);
}

TEST_CASE("logorial") {
    CHECK(logorial(2, std::exp(e)) == Approx(1.0).epsilon(1e-14));
    CHECK(logorial(3, std::exp(std::exp(e))) == Approx(e).epsilon(1e-13));
    CHECK(logorial(2, 1e8) == Approx(2.9134739869277917).epsilon(1e-14));
    CHECK_THROWS_AS(logorial(2, 2.0), DomainError);
    CHECK_THROWS_AS(logorial(1, 100.0), DomainError);
}

TEST_CASE("domain_floor") {
    CHECK(domain_floor(1) == 2);
    CHECK(domain_floor(2) == 3);
    CHECK(domain_floor(3) == 16);
    CHECK(domain_floor(4) == 3'814'280);
    CHECK(domain_floor(5) == UINT64_MAX);
    for (int k = 2; k <= 4; ++k) {
        double f = static_cast<double>(domain_floor(k));
        CHECK(iter_log(k, f) > 0.0);
        CHECK_FALSE(iter_log(k - 1, f - 1) > 1.0);
    }
}

TEST_CASE("eval_lambda and eval_y examples") {
    const double t4 = std::exp(std::exp(4.0));  // log log t = 4
    CHECK(eval_lambda(ThresholdSpec::divergent(2), t4) == Approx(0.25).epsilon(1e-13));
    CHECK(eval_lambda(ThresholdSpec::convergent(2, 1.0), t4) == Approx(0.0625).epsilon(1e-13));
    CHECK(eval_lambda(ThresholdSpec::fixed(0.5), 12345) == 0.5);

    CHECK(eval_y(ThresholdSpec::fixed(1.0), std::exp(4.0)) == Approx(4.0).epsilon(1e-14));
    CHECK(eval_y(ThresholdSpec::divergent(2), t4) == Approx(13.649537508286060).epsilon(1e-12));
    CHECK(eval_y(ThresholdSpec::convergent(2, 1.0), t4) == Approx(3.4123843770715149).epsilon(1e-12));
}

TEST_CASE("threshold domain floors and errors") {
    CHECK(ThresholdSpec::fixed(1.0).domain_floor == 2);
    CHECK(ThresholdSpec::divergent(2).domain_floor == 3);
    CHECK(ThresholdSpec::divergent(3).domain_floor == 16);
    CHECK(ThresholdSpec::convergent(2, 0.5).domain_floor == 16);
    CHECK(ThresholdSpec::adaptive(2).domain_floor == 3);
    CHECK_THROWS_AS(eval_lambda(ThresholdSpec::divergent(3), 15), DomainError);
    CHECK_THROWS_AS(eval_lambda(ThresholdSpec::adaptive(2), 100), DomainError);  // no state
    CHECK_THROWS_AS(ThresholdSpec::fixed(0.0), DomainError);
    CHECK_THROWS_AS(ThresholdSpec::fixed(-1.0), DomainError);
    CHECK_THROWS_AS(ThresholdSpec::divergent(1), DomainError);
    CHECK_THROWS_AS(ThresholdSpec::divergent(5), DomainError);
    CHECK_THROWS_AS(ThresholdSpec::convergent(2, 0.0), DomainError);
}

TEST_CASE("threshold grammar") {
    for (const char* text : {"fixed:0.5", "logk:2", "logk-eps:2,0.5", "adaptive:2", "logk:3", "fixed:10"}) {
        CHECK(to_string(parse_threshold(text)) == text);
    }
    auto s = parse_threshold("logk-eps:3,0.25");
    CHECK(family_name(s) == "logk-eps");
    CHECK(family_k(s) == 3);
    CHECK(family_eps(s) == 0.25);
    CHECK_FALSE(family_k(parse_threshold("fixed:1")).has_value());
    for (const char* bad : {"", "fixed", "fixed:", "fixed:x", "logk:2.5", "logk-eps:2", "power:2", "logk:1"}) {
        CHECK_THROWS_AS(parse_threshold(bad), DomainError);
    }
}

TEST_CASE("slow-decay side condition metadata") {
    CHECK(meets_slow_decay_condition(ThresholdSpec::fixed(1)));
    CHECK(meets_slow_decay_condition(ThresholdSpec::divergent(2)));
    CHECK(meets_slow_decay_condition(ThresholdSpec::convergent(2, 1.0)));
    CHECK_FALSE(meets_slow_decay_condition(ThresholdSpec::convergent(2, 1.5)));
    CHECK(meets_slow_decay_condition(ThresholdSpec::convergent(3, 5.0)));
}

TEST_CASE("iter_log(k, exp t) == iter_log(k-1, t)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(20.0, 600.0);
    for (int i = 0; i < 500; ++i) {
        double t = u(rng);
        for (int k = 2; k <= 4; ++k) {
            double a = iter_log(k, std::exp(t));
            double b = iter_log(k - 1, t);
            REQUIRE(std::fabs(a - b) <= 1e-12 * std::fabs(b));
        }
    }
}

TEST_CASE("convergent family stays below divergent and both are nonincreasing") {
    for (int k = 2; k <= 3; ++k) {
        auto div = ThresholdSpec::divergent(k);
        auto conv = ThresholdSpec::convergent(k, 0.5);
        double prev_div = INFINITY, prev_conv = INFINITY;
        for (double t = static_cast<double>(domain_floor(k + 1)); t < 1e15; t *= 1.37) {
            double ld = eval_lambda(div, t);
            double lc = eval_lambda(conv, t);
            REQUIRE(lc <= ld);
            REQUIRE(ld <= prev_div);
            REQUIRE(lc <= prev_conv);
            prev_div = ld;
            prev_conv = lc;
        }
    }
}

TEST_CASE("adaptive rule replay on a synthetic stream") {
    // Small elements push the running sum past 1 long before log_4 is
    // positive; the first switch must land on the first element >= floor(4).
    auto spec = ThresholdSpec::adaptive(2);
    AdaptiveState state(spec);
    std::vector<GapRecord> records;
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) records.push_back({p, p + 1, 1});
    records.push_back({3'814'271, 3'814'273, 2});
    records.push_back({3'814'279, 3'814'281, 2});
    records.push_back({3'814'283, 3'814'285, 2});
    records.push_back({3'814'297, 3'814'299, 2});

    ReciprocalSumAccumulator acc;
    accumulate(std::span(records).first(9), spec, acc, &state);
    CHECK(state.running_sum > 1.0);
    CHECK(state.current_k == 2);
    CHECK(state.switch_points.empty());

    accumulate(std::span(records).subspan(9), spec, acc, &state);
    REQUIRE(state.switch_points.size() == 1);
    CHECK(state.switch_points[0] == std::pair<std::uint64_t, int>{3'814'283, 3});
    CHECK(state.current_k == 3);
    // The running sum restarted at the switch and has only the later terms.
    CHECK(state.running_sum < 1e-5);
}

TEST_CASE("adaptive state never switches without the sum condition") {
    auto spec = ThresholdSpec::adaptive(2);
    AdaptiveState state(spec);
    for (std::uint64_t t = 3'814'280; t < 3'814'380; ++t) eval_lambda(spec, t, &state);
    CHECK(state.switch_points.empty());
    state.running_sum = 1.0;  // not strictly greater
    eval_lambda(spec, 3'900'000, &state);
    CHECK(state.switch_points.empty());
    state.running_sum = 1.0 + 1e-12;
    double lam = eval_lambda(spec, 3'900'000, &state);
    CHECK(state.current_k == 3);
    CHECK(lam == Approx(1.0 / logorial(3, 3'900'000)).epsilon(1e-14));
    CHECK_THROWS_AS(AdaptiveState(ThresholdSpec::fixed(1)), DomainError);
}
