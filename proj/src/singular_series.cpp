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

#include "gaplab/singular_series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>

#include "gaplab/compensated.hpp"
#include "gaplab/error.hpp"
#include "gaplab/parallel.hpp"
#include "gaplab/sieve.hpp"

namespace gaplab {

namespace {

constexpr std::uint64_t kDefaultP = 10'000'000;

// Primes up to P, shared across calls for the standard truncation points.
const std::vector<std::uint32_t>& primes_up_to(std::uint64_t P) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::vector<std::uint32_t>> cache;
    if (P > 0xffffffffULL) throw DomainError("truncation point " + std::to_string(P) + " too large");
    std::uint64_t key = std::max(P, kDefaultP);
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, small_primes(static_cast<std::uint32_t>(key))).first;
    }
    return it->second;
}

double log_factor(double nu, double r, double p) {
    return std::log1p(-nu / p) - r * std::log1p(-1.0 / p);
}

// Product over the odd primes dividing d of (p - 1)/(p - 2).
double pair_correction(std::uint32_t d, const std::vector<std::uint32_t>& spf) {
    double c = 1.0;
    while (d > 1) {
        std::uint32_t p = spf[d];
        if (p > 2) c *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
        while (d % p == 0) d /= p;
    }
    return c;
}

// Blocks of 2^16 summands, each summed with compensation, merged in block
// order so the result is independent of the thread count.
template <class Term>
double blocked_sum(std::uint64_t first, std::uint64_t last, unsigned threads, Term&& term) {
    constexpr std::uint64_t kBlock = 1 << 16;
    if (last < first) return 0.0;
    const std::uint64_t n = last - first + 1;
    const std::uint64_t nblocks = (n + kBlock - 1) / kBlock;
    CompensatedSum total;
    ordered_parallel(
        nblocks, threads,
        [&](std::size_t b) {
            CompensatedSum s;
            std::uint64_t lo = first + b * kBlock;
            std::uint64_t hi = std::min(last, lo + kBlock - 1);
            for (std::uint64_t i = lo; i <= hi; ++i) term(i, s);
            return s;
        },
        [&](std::size_t, CompensatedSum&& s) { total.merge(s); });
    return total.value();
}

}  // namespace

Tuple::Tuple(std::vector<std::uint64_t> offsets) : offsets_(std::move(offsets)) {
    if (offsets_.empty()) throw DomainError("tuple needs at least one offset");
    std::sort(offsets_.begin(), offsets_.end());
    if (std::adjacent_find(offsets_.begin(), offsets_.end()) != offsets_.end()) {
        throw DomainError("tuple offsets must be distinct");
    }
}

Tuple Tuple::shifted(std::uint64_t c) const {
    std::vector<std::uint64_t> out(offsets_.begin(), offsets_.end());
    for (auto& h : out) h += c;
    return Tuple(std::move(out));
}

Tuple parse_tuple(std::string_view text) {
    std::vector<std::uint64_t> offsets;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::uint64_t v = 0;
        auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
            throw DomainError("bad offset '" + std::string(item) + "' in tuple '" + std::string(text) + "'");
        }
        offsets.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Tuple(std::move(offsets));
}

std::string to_string(const Tuple& tuple) {
    std::string out;
    for (std::uint64_t h : tuple.offsets()) {
        if (!out.empty()) out += ',';
        out += std::to_string(h);
    }
    return out;
}

std::uint64_t nu(const Tuple& tuple, std::uint64_t p) {
    if (p > tuple.diameter()) return tuple.size();
    std::vector<std::uint64_t> residues;
    residues.reserve(tuple.size());
    for (std::uint64_t h : tuple.offsets()) residues.push_back(h % p);
    std::sort(residues.begin(), residues.end());
    return static_cast<std::uint64_t>(std::unique(residues.begin(), residues.end()) - residues.begin());
}

bool is_admissible(const Tuple& tuple) {
    for (std::uint32_t p : small_primes(static_cast<std::uint32_t>(tuple.size()))) {
        if (nu(tuple, p) >= p) return false;
    }
    return true;
}

double truncation_tail_bound(std::size_t r, std::uint64_t P) {
    if (r <= 1) return 0.0;
    const double rr = static_cast<double>(r);
    return std::expm1(2.0 * rr * rr / static_cast<double>(P - 1));
}

SingularSeriesResult singular_series_at(const Tuple& tuple, std::uint64_t P) {
    const std::uint64_t r = tuple.size();
    if (P < tuple.diameter() || P < 2 * r || P < 2) {
        throw DomainError("truncation point " + std::to_string(P) + " below tuple diameter " +
                          std::to_string(tuple.diameter()) + " or 2r=" + std::to_string(2 * r));
    }
    SingularSeriesResult out;
    out.truncation_prime = P;
    out.admissible = is_admissible(tuple);
    if (!out.admissible) return out;
    out.tail_bound = truncation_tail_bound(r, P);
    const double rr = static_cast<double>(r);
    const std::uint64_t diameter = tuple.diameter();
    CompensatedSum logsum;
    for (std::uint32_t p : primes_up_to(P)) {
        if (p > P) break;
        double v = p > diameter ? rr : static_cast<double>(nu(tuple, p));
        logsum.add(log_factor(v, rr, p));
    }
    out.value = std::exp(logsum.value());
    return out;
}

SingularSeriesResult singular_series(const Tuple& tuple, double rel_err_target) {
    if (!(rel_err_target > 0.0 && rel_err_target <= 0.1)) {
        throw DomainError("rel_err_target must lie in (0, 0.1], got " + std::to_string(rel_err_target));
    }
    for (std::uint64_t P : kTruncationPoints) {
        if (P < tuple.diameter() || P < 2 * tuple.size()) continue;
        // An inadmissible tuple has value exactly 0 at every P.
        if (!is_admissible(tuple) || truncation_tail_bound(tuple.size(), P) <= rel_err_target) {
            return singular_series_at(tuple, P);
        }
    }
    const std::uint64_t last = kTruncationPoints[std::size(kTruncationPoints) - 1];
    throw DomainError("relative error target " + std::to_string(rel_err_target) +
                      " unreachable at P=" + std::to_string(last) + " (best bound " +
                      std::to_string(truncation_tail_bound(tuple.size(), last)) + ")");
}

double twin_constant(std::uint64_t P) {
    static std::mutex mu;
    static std::map<std::uint64_t, double> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(P); it != cache.end()) return it->second;
    }
    double v = singular_series_at(Tuple({0, 2}), P).value;
    std::lock_guard lock(mu);
    cache.emplace(P, v);
    return v;
}

double pair_value(std::uint64_t d, std::uint64_t P) {
    if (d < 1) throw DomainError("pair_value requires d >= 1");
    if (d % 2 == 1) return 0.0;
    double c = twin_constant(P);
    // Peel prime factors with one-entry SPF tables.
    std::uint64_t m = d;
    while (m > 1) {
        std::uint64_t p = spf_range(m, m + 1)[m];
        if (p > 2) c *= static_cast<double>(p - 1) / static_cast<double>(p - 2);
        while (m % p == 0) m /= p;
    }
    return c;
}

std::vector<double> pair_values(std::uint32_t h, std::uint64_t P) {
    const auto spf = linear_spf(h);
    const double s2 = twin_constant(P);
    std::vector<double> out(static_cast<std::size_t>(h) + 1, 0.0);
    for (std::uint32_t d = 2; d <= h; d += 2) out[d] = s2 * pair_correction(d, spf);
    return out;
}

double pair_sum(std::uint32_t h, unsigned threads, std::uint64_t P) {
    if (h < 2) throw DomainError("pair_sum requires h >= 2");
    const auto spf = linear_spf(h);
    const double s2 = twin_constant(P);
    return blocked_sum(1, h, threads, [&](std::uint64_t d, CompensatedSum& s) {
        if (d % 2 == 0) s.add(s2 * pair_correction(static_cast<std::uint32_t>(d), spf));
    });
}

TripleSeries::TripleSeries(std::uint32_t h, std::uint64_t P) : h_(h), P_(P), spf_(linear_spf(h)) {
    if (P < h) throw DomainError("triple series truncation point below h");
    CompensatedSum logsum;
    for (std::uint32_t p : primes_up_to(P)) {
        if (p > P) break;
        if (p < 5) continue;
        logsum.add(log_factor(3.0, 3.0, p));
    }
    base_ = std::exp(logsum.value());
}

double TripleSeries::operator()(std::uint32_t d1, std::uint32_t d2) const {
    if (d1 == 0 || d2 == 0 || d1 > h_ || d2 > h_ || d1 == d2) {
        throw DomainError("triple offsets must satisfy 1 <= d1, d2 <= h, d1 != d2");
    }
    auto occupied = [&](std::uint32_t p) {
        std::uint32_t a = d1 % p, b = d2 % p;
        return 1u + (a != 0) + (b != 0 && b != a);
    };
    double value = base_;
    for (std::uint32_t p : {2u, 3u}) {
        std::uint32_t v = occupied(p);
        if (v == p) return 0.0;
        const double q = 1.0 - 1.0 / p;
        value *= (1.0 - static_cast<double>(v) / p) / (q * q * q);
    }
    std::uint32_t primes[32];
    std::size_t n = 0;
    for (std::uint32_t m : {d1, d2, d1 > d2 ? d1 - d2 : d2 - d1}) {
        while (m > 1) {
            std::uint32_t p = spf_[m];
            if (p >= 5) primes[n++] = p;
            while (m % p == 0) m /= p;
        }
    }
    std::sort(primes, primes + n);
    n = static_cast<std::size_t>(std::unique(primes, primes + n) - primes);
    for (std::size_t i = 0; i < n; ++i) {
        const double p = primes[i];
        value *= (1.0 - occupied(primes[i]) / p) / (1.0 - 3.0 / p);
    }
    return value;
}

TripleSumResult triple_sum(std::uint32_t h, TripleOrder order, unsigned threads, std::uint64_t P) {
    if (h < 3) throw DomainError("triple_sum requires h >= 3");
    const TripleSeries series(h, P);
    TripleSumResult out;
    out.h = h;
    out.ordered = blocked_sum(1, h, threads, [&](std::uint64_t outer, CompensatedSum& s) {
        for (std::uint32_t inner = 1; inner <= h; ++inner) {
            if (inner == outer) continue;
            auto o = static_cast<std::uint32_t>(outer);
            s.add(order == TripleOrder::kRowMajor ? series(o, inner) : series(inner, o));
        }
    });
    out.unordered = blocked_sum(1, h, threads, [&](std::uint64_t d1, CompensatedSum& s) {
        for (std::uint32_t d2 = static_cast<std::uint32_t>(d1) + 1; d2 <= h; ++d2) {
            s.add(series(static_cast<std::uint32_t>(d1), d2));
        }
    });
    out.normalized = out.ordered / (static_cast<double>(h) * h);
    return out;
}

std::uint64_t hl_count(std::uint64_t x, const Tuple& tuple, unsigned threads) {
    if (x < 2) throw DomainError("hl_count requires x >= 2");
    constexpr std::uint64_t kBlock = 1 << 20;
    const auto offsets = tuple.offsets();
    const std::uint64_t h_lo = offsets.front();
    const std::uint64_t h_hi = offsets.back();
    const std::uint64_t nblocks = (x + kBlock - 1) / kBlock;
    std::uint64_t total = 0;
    ordered_parallel(
        nblocks, threads,
        [&](std::size_t b) -> std::uint64_t {
            const std::uint64_t a = 1 + b * kBlock;
            const std::uint64_t e = std::min(x + 1, a + kBlock);  // n in [a, e)
            const std::uint64_t base = a + h_lo;
            const std::uint64_t top = e - 1 + h_hi + 1;
            std::vector<std::uint8_t> prime(top - base, 0);
            const std::uint64_t lo = std::max<std::uint64_t>(base, 2);
            if (lo < top) {
                for (std::uint64_t q : primes_in_range({lo, top, kDefaultSegmentLen})) prime[q - base] = 1;
            }
            std::uint64_t count = 0;
            for (std::uint64_t n = a; n < e; ++n) {
                bool all = true;
                for (std::uint64_t h : offsets) {
                    if (!prime[n + h - base]) {
                        all = false;
                        break;
                    }
                }
                count += all;
            }
            return count;
        },
        [&](std::size_t, std::uint64_t c) { total += c; });
    return total;
}

HlComparison hl_compare(std::uint64_t x, const Tuple& tuple, unsigned threads) {
    if (!is_admissible(tuple)) {
        throw DomainError("hl_compare needs an admissible tuple, got " + to_string(tuple));
    }
    if (x < 3) throw DomainError("hl_compare requires x >= 3");
    const std::uint64_t P = std::max<std::uint64_t>({kDefaultP, tuple.diameter(), 2 * tuple.size()});
    HlComparison out;
    out.singular_series = singular_series_at(tuple, P).value;
    out.actual = hl_count(x, tuple, threads);
    const double lx = std::log(static_cast<double>(x));
    out.predicted = out.singular_series * static_cast<double>(x) / std::pow(lx, static_cast<double>(tuple.size()));
    out.ratio = static_cast<double>(out.actual) / out.predicted;
    return out;
}

}  // namespace gaplab
