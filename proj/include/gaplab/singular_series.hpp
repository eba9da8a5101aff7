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

// Hardy-Littlewood singular series
//
//   S(H) = prod_p (1 - nu_H(p)/p) (1 - 1/p)^(-r)
//
// for a tuple H of r distinct offsets, where nu_H(p) counts the residue
// classes mod p occupied by H. Values are exact products over p <= P; the
// factors for p > P are bounded, not estimated.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaplab {

/// Sorted, distinct, non-negative offsets h_1 < ... < h_r, r >= 1.
class Tuple {
  public:
    explicit Tuple(std::vector<std::uint64_t> offsets);

    std::span<const std::uint64_t> offsets() const { return offsets_; }
    std::size_t size() const { return offsets_.size(); }
    /// h_r - h_1.
    std::uint64_t diameter() const { return offsets_.back() - offsets_.front(); }
    Tuple shifted(std::uint64_t c) const;

    friend bool operator==(const Tuple&, const Tuple&) = default;

  private:
    std::vector<std::uint64_t> offsets_;
};

/// Parses a comma-separated offset list such as `0,2,6`.
Tuple parse_tuple(std::string_view text);
std::string to_string(const Tuple& tuple);

struct SingularSeriesResult {
    double value = 0.0;
    std::uint64_t truncation_prime = 0;
    /// Bound on |S/value - 1| from the omitted factors p > P.
    double tail_bound = 0.0;
    bool admissible = false;
};

/// Truncation points tried in order by singular_series().
inline constexpr std::uint64_t kTruncationPoints[] = {10'000, 100'000, 1'000'000, 10'000'000};

std::uint64_t nu(const Tuple& tuple, std::uint64_t p);
bool is_admissible(const Tuple& tuple);

/// Relative-error bound for truncating at P: expm1(2 r^2 / (P - 1)) when
/// r >= 2, zero for r = 1 (every factor is 1).
double truncation_tail_bound(std::size_t r, std::uint64_t P);

/// Exact product over primes p <= P. P must be at least the tuple diameter
/// and at least 2r.
SingularSeriesResult singular_series_at(const Tuple& tuple, std::uint64_t P);

/// Picks the least P from kTruncationPoints whose tail bound meets
/// rel_err_target, which must lie in (0, 0.1].
SingularSeriesResult singular_series(const Tuple& tuple, double rel_err_target);

/// S_2 = S({0, 2}) truncated at P.
double twin_constant(std::uint64_t P = 10'000'000);

/// S({0, d}): 0 for odd d, S_2 prod_{p | d, p > 2} (p - 1)/(p - 2) for even d.
double pair_value(std::uint64_t d, std::uint64_t P = 10'000'000);

/// pair_value(d) for 0 <= d <= h (index 0 unused, set to 0).
std::vector<double> pair_values(std::uint32_t h, std::uint64_t P = 10'000'000);

/// Sum of pair_value(d) for 1 <= d <= h.
double pair_sum(std::uint32_t h, unsigned threads = 1, std::uint64_t P = 10'000'000);

enum class TripleOrder { kRowMajor, kColumnMajor };

struct TripleSumResult {
    std::uint32_t h = 0;
    /// Over ordered pairs 1 <= d1, d2 <= h with d1 != d2.
    double ordered = 0.0;
    /// Over 1 <= d1 < d2 <= h; exactly half of `ordered`.
    double unordered = 0.0;
    double normalized = 0.0;  // ordered / h^2
};

/// S({0, d1, d2}) from the closed multiplicative form: a shared constant
/// prod_{5 <= p <= P} (1 - 3/p)(1 - 1/p)^-3 corrected at p = 2, 3 and at the
/// primes dividing d1 d2 (d2 - d1).
class TripleSeries {
  public:
    explicit TripleSeries(std::uint32_t h, std::uint64_t P = 10'000'000);

    double operator()(std::uint32_t d1, std::uint32_t d2) const;
    double base_constant() const { return base_; }
    std::uint64_t truncation_prime() const { return P_; }

  private:
    std::uint32_t h_;
    std::uint64_t P_;
    double base_;
    std::vector<std::uint32_t> spf_;
};

TripleSumResult triple_sum(std::uint32_t h, TripleOrder order = TripleOrder::kRowMajor,
                           unsigned threads = 1, std::uint64_t P = 10'000'000);

/// pi(x; H): the number of 1 <= n <= x with n + h prime for every h in H.
std::uint64_t hl_count(std::uint64_t x, const Tuple& tuple, unsigned threads = 1);

struct HlComparison {
    std::uint64_t actual = 0;
    double predicted = 0.0;  // S(H) x / (log x)^r
    double ratio = 0.0;
    double singular_series = 0.0;
};

/// Throws DomainError for inadmissible tuples.
HlComparison hl_compare(std::uint64_t x, const Tuple& tuple, unsigned threads = 1);

}  // namespace gaplab
