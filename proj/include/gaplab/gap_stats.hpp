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

// Gap statistics over primes or sieve survivors: reciprocal sums restricted
// to short successor gaps, the empirical gap CDF, short-interval prime
// histograms and dyadic survivor reports.
//
// An element p "qualifies" under a threshold when its successor gap
// satisfies p' - p <= y(p) = lambda(p) log p. Elements below the threshold's
// domain floor are skipped in sweeps.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gaplab/compensated.hpp"
#include "gaplab/sieve.hpp"
#include "gaplab/survivors.hpp"
#include "gaplab/thresholds.hpp"

namespace gaplab {

struct PrimeSet {};

using ElementSet = std::variant<PrimeSet, SurvivorRule>;

std::string to_string(const ElementSet& set);

/// Gap records for every element <= x of the set.
void gap_stream(const ElementSet& set, std::uint64_t x, const StreamOptions& opts, const GapSink& sink);

/// Whether gap <= y with an integer gap and real y; ties count.
inline bool gap_qualifies(std::uint32_t gap, double y) { return static_cast<double>(gap) <= y; }

struct Checkpoint {
    std::uint64_t x = 0;
    double sum = 0.0;
    std::uint64_t count = 0;
    int k = 0;  // family depth in force at x (adaptive), else the fixed k or 0
};

/// Compensated sum of 1/p over qualifying elements, with a checkpoint log.
class ReciprocalSumAccumulator {
  public:
    void add(std::uint64_t p) {
        sum_.add(1.0 / static_cast<double>(p));
        ++count_;
    }
    void checkpoint(std::uint64_t x, int k = 0) { log_.push_back({x, sum(), count_, k}); }

    /// Appends an accumulator covering the range right after this one.
    void merge(const ReciprocalSumAccumulator& next);

    double sum() const { return sum_.value(); }
    std::uint64_t count() const { return count_; }
    const std::vector<Checkpoint>& checkpoints() const { return log_; }

  private:
    CompensatedSum sum_;
    std::uint64_t count_ = 0;
    std::vector<Checkpoint> log_;
};

struct ReciprocalSumResult {
    ThresholdSpec threshold;
    ReciprocalSumAccumulator accumulator;
    std::optional<AdaptiveState> adaptive;
};

/// Feeds gap records to an accumulator. `state` must be non-null for the
/// adaptive family.
void accumulate(std::span<const GapRecord> records, const ThresholdSpec& spec,
                ReciprocalSumAccumulator& acc, AdaptiveState* state = nullptr);

/// Reciprocal sums for several thresholds in one pass over the set.
/// Checkpoints above x are ignored; x itself is not added implicitly.
/// Adaptive thresholds require opts.threads == 1.
std::vector<ReciprocalSumResult> reciprocal_sums(std::uint64_t x, std::span<const ThresholdSpec> specs,
                                                 const ElementSet& set,
                                                 std::span<const std::uint64_t> checkpoints,
                                                 const StreamOptions& opts = {});

ReciprocalSumResult reciprocal_sum(std::uint64_t x, const ThresholdSpec& spec, const ElementSet& set,
                                   std::span<const std::uint64_t> checkpoints = {},
                                   const StreamOptions& opts = {});

/// log_{k+1} x for families with a depth k, if defined at x.
std::optional<double> comparator_log_k_plus_1(int k, std::uint64_t x);

struct GapCdfReport {
    std::uint64_t x = 0;
    ThresholdSpec threshold;
    std::uint64_t qualifying = 0;
    std::uint64_t total = 0;  // all elements <= x, including any below the floor
    double empirical = 0.0;
    double lambda_at_x = 0.0;
    double predicted = 0.0;  // 1 - exp(-lambda(x))
};

std::vector<GapCdfReport> gap_cdfs(std::uint64_t x, std::span<const ThresholdSpec> specs,
                                   const ElementSet& set, const StreamOptions& opts = {});
GapCdfReport gap_cdf(std::uint64_t x, const ThresholdSpec& spec, const ElementSet& set,
                     const StreamOptions& opts = {});

inline constexpr int kDefaultKmax = 16;

/// P_k(h, x) for k <= kmax: integers 1 <= n <= x whose window (n, n + h]
/// holds exactly k primes.
struct IntervalHistogram {
    std::uint64_t x = 0;
    double h = 0.0;
    double lambda = 0.0;  // h / log x
    std::vector<std::uint64_t> counts;
    std::uint64_t overflow = 0;         // windows with more than kmax primes
    std::uint64_t overflow_moment = 0;  // total primes in those windows

    /// x e^{-lambda} lambda^k / k!
    double poisson_prediction(int k) const;
    /// sum_k k P_k including the overflow windows.
    std::uint64_t first_moment() const;
};

IntervalHistogram gallagher_histogram(std::uint64_t x, double lambda0, int kmax = kDefaultKmax,
                                      const StreamOptions& opts = {});
IntervalHistogram gallagher_histogram_h(std::uint64_t x, double h, int kmax = kDefaultKmax,
                                        const StreamOptions& opts = {});

/// Intervals (M, 2M] starting at M = x0, doubling, the last cut at x.
std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_partition(std::uint64_t x0, std::uint64_t x);

struct DyadicRow {
    std::uint64_t lo = 0;  // M (exclusive)
    std::uint64_t hi = 0;  // min(2M, x) (inclusive)
    std::uint64_t population = 0;
    std::uint64_t qualifying_frozen = 0;  // gap <= y(M)
    std::uint64_t qualifying_exact = 0;   // gap <= y(m)
    double comparator = 0.0;              // (1 - exp(-lambda(M))) population
};

struct DyadicReport {
    std::vector<DyadicRow> rows;
    DyadicRow aggregate;  // lo = x0, hi = x
};

/// Elements in (x0, x] with x0 = max(2, domain floor). Not available for the
/// adaptive family.
DyadicReport survivor_gap_report(std::uint64_t x, const ElementSet& set, const ThresholdSpec& spec,
                                 const StreamOptions& opts = {});

}  // namespace gaplab
