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

// Iterated logarithms, the logorial Log_k = log_2 * ... * log_k, and the gap
// threshold families y(t) = lambda(t) log t.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace gaplab {

/// log applied k times to t. Throws DomainError if some intermediate
/// argument is not positive.
double iter_log(int k, double t);

/// Product of log_j t over 2 <= j <= k. Requires log_k t > 0.
double logorial(int k, double t);

/// Smallest integer t with log_k t > 0, i.e. t above the (k-1)-fold
/// exponential tower of 1. For k >= 5 the tower exceeds 64 bits and the
/// result saturates at UINT64_MAX (no representable t qualifies).
std::uint64_t domain_floor(int k);

/// lambda(t) = lambda0.
struct FixedFamily {
    double lambda0;
};
/// lambda(t) = 1 / Log_k(t).
struct DivergentFamily {
    int k;
};
/// lambda(t) = 1 / (Log_k(t) (log_k t)^eps).
struct ConvergentFamily {
    int k;
    double eps;
};
/// 1 / Log_k(t), with k stepping up as the running reciprocal sum passes 1.
struct AdaptiveFamily {
    int k0;
};

using ThresholdFamily = std::variant<FixedFamily, DivergentFamily, ConvergentFamily, AdaptiveFamily>;

struct ThresholdSpec {
    ThresholdFamily family;
    std::uint64_t domain_floor = 2;

    static ThresholdSpec fixed(double lambda0);
    static ThresholdSpec divergent(int k);
    static ThresholdSpec convergent(int k, double eps);
    static ThresholdSpec adaptive(int k0);

    bool is_adaptive() const { return std::holds_alternative<AdaptiveFamily>(family); }
};

/// Sequential state of the adaptive family. running_sum is the reciprocal
/// sum accumulated since the last switch.
struct AdaptiveState {
    int current_k = 2;
    double running_sum = 0.0;
    std::vector<std::pair<std::uint64_t, int>> switch_points;

    AdaptiveState() = default;
    explicit AdaptiveState(int k0) : current_k(k0) {}
    explicit AdaptiveState(const ThresholdSpec& spec);

    void add(double term) { running_sum += term; }
};

/// lambda(t). For the adaptive family the switch rule is applied first:
/// when running_sum > 1 and t >= domain_floor(current_k + 2), current_k
/// increases by one, (t, new k) is recorded and the running sum restarts.
double eval_lambda(const ThresholdSpec& spec, double t, AdaptiveState* state = nullptr);

/// lambda(t) without advancing any adaptive state.
double peek_lambda(const ThresholdSpec& spec, double t, const AdaptiveState* state = nullptr);

/// y(t) = lambda(t) log t.
double eval_y(const ThresholdSpec& spec, double t, AdaptiveState* state = nullptr);

/// Parses `fixed:0.5`, `logk:2`, `logk-eps:2,0.5` or `adaptive:2`.
ThresholdSpec parse_threshold(std::string_view text);
std::string to_string(const ThresholdSpec& spec);

/// "fixed", "logk", "logk-eps" or "adaptive".
std::string family_name(const ThresholdSpec& spec);
std::optional<int> family_k(const ThresholdSpec& spec);
std::optional<double> family_eps(const ThresholdSpec& spec);

/// Whether the family meets lambda(t) >> 1/(log log t)^2. Metadata only.
bool meets_slow_decay_condition(const ThresholdSpec& spec);

}  // namespace gaplab
