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

#include "gaplab/gap_stats.hpp"

#include <algorithm>
#include <cmath>

#include "gaplab/error.hpp"
#include "gaplab/parallel.hpp"

namespace gaplab {

namespace {

void check_specs(std::uint64_t x, std::span<const ThresholdSpec> specs, const StreamOptions& opts) {
    for (const auto& spec : specs) {
        if (x < spec.domain_floor) {
            throw DomainError("x=" + std::to_string(x) + " below the domain floor " +
                              std::to_string(spec.domain_floor) + " of threshold " + to_string(spec));
        }
        if (spec.is_adaptive() && opts.threads > 1) {
            throw ContractError("the adaptive threshold family is sequential; use --threads 1");
        }
    }
}

std::vector<std::uint64_t> normalized_checkpoints(std::span<const std::uint64_t> cps, std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c : cps) {
        if (c <= x) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int depth_in_force(const ThresholdSpec& spec, const std::optional<AdaptiveState>& state) {
    if (state) return state->current_k;
    return family_k(spec).value_or(0);
}

// Qualification of one record; advances adaptive state. False below the floor.
bool step(const GapRecord& r, const ThresholdSpec& spec, AdaptiveState* state) {
    if (r.p < spec.domain_floor) return false;
    return gap_qualifies(r.gap, eval_y(spec, r.p, state));
}

}  // namespace

std::string to_string(const ElementSet& set) {
    if (std::holds_alternative<PrimeSet>(set)) return "primes";
    return "survivors(" + to_string(std::get<SurvivorRule>(set)) + ")";
}

void gap_stream(const ElementSet& set, std::uint64_t x, const StreamOptions& opts, const GapSink& sink) {
    if (std::holds_alternative<PrimeSet>(set)) {
        prime_gap_stream(x, opts, sink);
    } else {
        survivor_gap_stream({std::get<SurvivorRule>(set), x}, opts, sink);
    }
}

void ReciprocalSumAccumulator::merge(const ReciprocalSumAccumulator& next) {
    const double base_sum = sum();
    const std::uint64_t base_count = count_;
    for (const auto& cp : next.log_) log_.push_back({cp.x, base_sum + cp.sum, base_count + cp.count, cp.k});
    sum_.merge(next.sum_);
    count_ += next.count_;
}

void accumulate(std::span<const GapRecord> records, const ThresholdSpec& spec, ReciprocalSumAccumulator& acc,
                AdaptiveState* state) {
    for (const auto& r : records) {
        if (!step(r, spec, state)) continue;
        acc.add(r.p);
        if (state) state->add(1.0 / static_cast<double>(r.p));
    }
}

std::vector<ReciprocalSumResult> reciprocal_sums(std::uint64_t x, std::span<const ThresholdSpec> specs,
                                                 const ElementSet& set,
                                                 std::span<const std::uint64_t> checkpoints,
                                                 const StreamOptions& opts) {
    check_specs(x, specs, opts);
    std::vector<ReciprocalSumResult> results;
    for (const auto& spec : specs) {
        ReciprocalSumResult r{spec, {}, std::nullopt};
        if (spec.is_adaptive()) r.adaptive.emplace(spec);
        results.push_back(std::move(r));
    }
    const auto cps = normalized_checkpoints(checkpoints, x);
    std::size_t next_cp = 0;
    auto flush_until = [&](std::uint64_t limit) {
        while (next_cp < cps.size() && cps[next_cp] < limit) {
            for (auto& r : results) r.accumulator.checkpoint(cps[next_cp], depth_in_force(r.threshold, r.adaptive));
            ++next_cp;
        }
    };
    gap_stream(set, x, opts, [&](std::span<const GapRecord> block) {
        flush_until(block.front().p);
        for (const auto& rec : block) {
            flush_until(rec.p);
            for (auto& r : results) {
                AdaptiveState* state = r.adaptive ? &*r.adaptive : nullptr;
                if (step(rec, r.threshold, state)) {
                    r.accumulator.add(rec.p);
                    if (state) state->add(1.0 / static_cast<double>(rec.p));
                }
            }
        }
    });
    flush_until(x + 1);
    return results;
}

ReciprocalSumResult reciprocal_sum(std::uint64_t x, const ThresholdSpec& spec, const ElementSet& set,
                                   std::span<const std::uint64_t> checkpoints, const StreamOptions& opts) {
    return std::move(reciprocal_sums(x, std::span(&spec, 1), set, checkpoints, opts).front());
}

std::optional<double> comparator_log_k_plus_1(int k, std::uint64_t x) {
    if (k < 1) return std::nullopt;
    try {
        return iter_log(k + 1, static_cast<double>(x));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

std::vector<GapCdfReport> gap_cdfs(std::uint64_t x, std::span<const ThresholdSpec> specs, const ElementSet& set,
                                   const StreamOptions& opts) {
    check_specs(x, specs, opts);
    std::vector<GapCdfReport> reports;
    std::vector<std::optional<AdaptiveState>> states;
    for (const auto& spec : specs) {
        GapCdfReport rep;
        rep.x = x;
        rep.threshold = spec;
        reports.push_back(rep);
        states.emplace_back();
        if (spec.is_adaptive()) states.back().emplace(spec);
    }
    std::uint64_t total = 0;
    gap_stream(set, x, opts, [&](std::span<const GapRecord> block) {
        total += block.size();
        for (std::size_t i = 0; i < reports.size(); ++i) {
            AdaptiveState* state = states[i] ? &*states[i] : nullptr;
            for (const auto& rec : block) {
                if (!step(rec, reports[i].threshold, state)) continue;
                ++reports[i].qualifying;
                if (state) state->add(1.0 / static_cast<double>(rec.p));
            }
        }
    });
    for (std::size_t i = 0; i < reports.size(); ++i) {
        auto& rep = reports[i];
        rep.total = total;
        rep.empirical = total == 0 ? 0.0 : static_cast<double>(rep.qualifying) / static_cast<double>(total);
        rep.lambda_at_x = peek_lambda(rep.threshold, x, states[i] ? &*states[i] : nullptr);
        rep.predicted = -std::expm1(-rep.lambda_at_x);
    }
    return reports;
}

GapCdfReport gap_cdf(std::uint64_t x, const ThresholdSpec& spec, const ElementSet& set, const StreamOptions& opts) {
    return gap_cdfs(x, std::span(&spec, 1), set, opts).front();
}

double IntervalHistogram::poisson_prediction(int k) const {
    if (lambda <= 0.0) return k == 0 ? static_cast<double>(x) : 0.0;
    return static_cast<double>(x) * std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

std::uint64_t IntervalHistogram::first_moment() const {
    std::uint64_t m = overflow_moment;
    for (std::size_t k = 0; k < counts.size(); ++k) m += k * counts[k];
    return m;
}

IntervalHistogram gallagher_histogram(std::uint64_t x, double lambda0, int kmax, const StreamOptions& opts) {
    if (x < 10) throw DomainError("gallagher_histogram requires x >= 10, got " + std::to_string(x));
    if (!(lambda0 > 0.0)) throw DomainError("gallagher_histogram requires lambda > 0");
    return gallagher_histogram_h(x, lambda0 * std::log(static_cast<double>(x)), kmax, opts);
}

IntervalHistogram gallagher_histogram_h(std::uint64_t x, double h, int kmax, const StreamOptions& opts) {
    if (x < 2) throw DomainError("gallagher_histogram requires x >= 2, got " + std::to_string(x));
    if (!(h >= 0.0) || !std::isfinite(h)) throw DomainError("window length h must be finite and >= 0");
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    // q <= n + h  <=>  q <= n + floor(h) for integers q, n.
    const auto H = static_cast<std::uint64_t>(std::floor(h));
    if (x + H + 1 > opts.ceiling) throw CeilingError("window range exceeds ceiling");

    IntervalHistogram hist;
    hist.x = x;
    hist.h = h;
    hist.lambda = h / std::log(static_cast<double>(x));
    hist.counts.assign(static_cast<std::size_t>(kmax) + 1, 0);

    struct Partial {
        std::vector<std::uint64_t> counts;
        std::uint64_t overflow = 0, overflow_moment = 0;
    };
    const std::uint64_t block = std::max(opts.segment_len, kMinSegmentLen);
    const std::uint64_t nblocks = (x + block - 1) / block;
    ordered_parallel(
        nblocks, opts.threads,
        [&](std::size_t i) {
            Partial part;
            part.counts.assign(static_cast<std::size_t>(kmax) + 1, 0);
            const std::uint64_t a = 1 + i * block;
            const std::uint64_t b = std::min(x + 1, a + block);  // n in [a, b)
            const std::uint64_t lo = std::max<std::uint64_t>(a + 1, 2);
            const std::uint64_t hi = b + H;  // primes in (a, b - 1 + H]
            std::vector<std::uint64_t> primes;
            if (lo < hi) primes = primes_in_range({lo, hi, kDefaultSegmentLen});
            std::size_t first = 0, last = 0;
            for (std::uint64_t n = a; n < b; ++n) {
                while (first < primes.size() && primes[first] <= n) ++first;
                while (last < primes.size() && primes[last] <= n + H) ++last;
                const std::uint64_t k = last - first;
                if (k <= static_cast<std::uint64_t>(kmax)) {
                    ++part.counts[k];
                } else {
                    ++part.overflow;
                    part.overflow_moment += k;
                }
            }
            return part;
        },
        [&](std::size_t, Partial&& part) {
            for (std::size_t k = 0; k < part.counts.size(); ++k) hist.counts[k] += part.counts[k];
            hist.overflow += part.overflow;
            hist.overflow_moment += part.overflow_moment;
        });
    return hist;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> dyadic_partition(std::uint64_t x0, std::uint64_t x) {
    if (x0 < 2 || x0 >= x) {
        throw DomainError("dyadic_partition requires 2 <= x0 < x, got x0=" + std::to_string(x0) +
                          " x=" + std::to_string(x));
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t M = x0; M < x;) {
        std::uint64_t top = (M > x / 2) ? x : 2 * M;
        out.emplace_back(M, top);
        M = top;
    }
    return out;
}

DyadicReport survivor_gap_report(std::uint64_t x, const ElementSet& set, const ThresholdSpec& spec,
                                 const StreamOptions& opts) {
    if (spec.is_adaptive()) throw DomainError("dyadic reports need a non-adaptive threshold");
    const std::uint64_t x0 = std::max<std::uint64_t>(2, spec.domain_floor);
    const auto parts = dyadic_partition(x0, x);

    DyadicReport report;
    std::vector<double> y_frozen, lambda_frozen;
    for (const auto& [M, top] : parts) {
        report.rows.push_back({M, top, 0, 0, 0, 0.0});
        lambda_frozen.push_back(eval_lambda(spec, M));
        y_frozen.push_back(lambda_frozen.back() * std::log(static_cast<double>(M)));
    }
    std::size_t idx = 0;
    gap_stream(set, x, opts, [&](std::span<const GapRecord> block) {
        for (const auto& rec : block) {
            if (rec.p <= x0) continue;
            while (rec.p > report.rows[idx].hi) ++idx;
            auto& row = report.rows[idx];
            ++row.population;
            row.qualifying_frozen += gap_qualifies(rec.gap, y_frozen[idx]);
            row.qualifying_exact += gap_qualifies(rec.gap, eval_y(spec, rec.p));
        }
    });
    report.aggregate = {x0, x, 0, 0, 0, 0.0};
    CompensatedSum comparator;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        auto& row = report.rows[i];
        row.comparator = -std::expm1(-lambda_frozen[i]) * static_cast<double>(row.population);
        report.aggregate.population += row.population;
        report.aggregate.qualifying_frozen += row.qualifying_frozen;
        report.aggregate.qualifying_exact += row.qualifying_exact;
        comparator.add(row.comparator);
    }
    report.aggregate.comparator = comparator.value();
    return report;
}

}  // namespace gaplab
