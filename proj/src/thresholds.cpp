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

#include "gaplab/thresholds.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "gaplab/error.hpp"

namespace gaplab {

namespace {

constexpr int kMaxDepth = 8;

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

// logs[j] = log_j t for j = 1..k; false if some argument is not positive.
bool chain_logs(int k, double t, std::array<double, kMaxDepth + 1>& logs) {
    double v = t;
    for (int j = 1; j <= k; ++j) {
        if (!(v > 0.0)) return false;
        v = std::log(v);
        logs[j] = v;
    }
    return true;
}

void check_depth(int k, int min_k) {
    if (k < min_k || k > kMaxDepth) {
        throw DomainError("iterated-log depth k=" + std::to_string(k) + " outside [" +
                          std::to_string(min_k) + ", " + std::to_string(kMaxDepth) + "]");
    }
}

bool log_k_positive(int k, double t) {
    std::array<double, kMaxDepth + 1> logs{};
    return chain_logs(k, t, logs) && logs[k] > 0.0;
}

double inv_logorial(int k, const std::array<double, kMaxDepth + 1>& logs) {
    double prod = 1.0;
    for (int j = 2; j <= k; ++j) prod *= logs[j];
    return 1.0 / prod;
}

// 1/Log_k(t), with log_k t > 0 already guaranteed by the domain floor.
double divergent_lambda(int k, double t) {
    std::array<double, kMaxDepth + 1> logs{};
    if (!chain_logs(k, t, logs) || !(logs[k] > 0.0)) {
        throw DomainError("log_" + std::to_string(k) + " not positive at t=" + format_double(t));
    }
    return inv_logorial(k, logs);
}

double convergent_lambda(int k, double eps, double t) {
    std::array<double, kMaxDepth + 1> logs{};
    if (!chain_logs(k, t, logs) || !(logs[k] > 0.0)) {
        throw DomainError("log_" + std::to_string(k) + " not positive at t=" + format_double(t));
    }
    return inv_logorial(k, logs) / std::pow(logs[k], eps);
}

void check_floor(const ThresholdSpec& spec, double t) {
    if (t < static_cast<double>(spec.domain_floor)) {
        throw DomainError("threshold " + to_string(spec) + " undefined at t=" + format_double(t) +
                          " (domain floor " + std::to_string(spec.domain_floor) + ")");
    }
}

std::uint64_t representable_floor(int k) {
    std::uint64_t f = domain_floor(k);
    if (f == std::numeric_limits<std::uint64_t>::max()) {
        throw DomainError("threshold depth k=" + std::to_string(k) +
                          " has no domain below 2^64");
    }
    return f;
}

int parse_int(std::string_view s, std::string_view text) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw DomainError("bad integer '" + std::string(s) + "' in threshold '" + std::string(text) + "'");
    }
    return v;
}

double parse_real(std::string_view s, std::string_view text) {
    double v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw DomainError("bad number '" + std::string(s) + "' in threshold '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

double iter_log(int k, double t) {
    check_depth(k, 1);
    std::array<double, kMaxDepth + 1> logs{};
    if (!chain_logs(k, t, logs)) {
        throw DomainError("log_" + std::to_string(k) + " undefined at t=" + format_double(t));
    }
    return logs[k];
}

double logorial(int k, double t) {
    check_depth(k, 2);
    std::array<double, kMaxDepth + 1> logs{};
    if (!chain_logs(k, t, logs) || !(logs[k] > 0.0)) {
        throw DomainError("Log_" + std::to_string(k) + " requires log_" + std::to_string(k) +
                          " t > 0, t=" + format_double(t));
    }
    return 1.0 / inv_logorial(k, logs);
}

std::uint64_t domain_floor(int k) {
    check_depth(k, 1);
    // Tower exp(exp(...exp(1))) with k - 1 exponentials.
    long double tower = 1.0L;
    for (int j = 1; j < k; ++j) {
        tower = std::exp(tower);
        if (tower > 1.0e18L) return std::numeric_limits<std::uint64_t>::max();
    }
    auto c = static_cast<std::uint64_t>(std::floor(tower)) + 1;
    while (c > 1 && log_k_positive(k, static_cast<double>(c - 1))) --c;
    while (!log_k_positive(k, static_cast<double>(c))) ++c;
    return c;
}

ThresholdSpec ThresholdSpec::fixed(double lambda0) {
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0)) {
        throw DomainError("fixed threshold needs a positive finite lambda, got " + format_double(lambda0));
    }
    return {FixedFamily{lambda0}, 2};
}

ThresholdSpec ThresholdSpec::divergent(int k) {
    check_depth(k, 2);
    return {DivergentFamily{k}, representable_floor(k)};
}

// The convergent family starts where log_k t >= 1, so that it never exceeds
// the divergent family of the same k.
ThresholdSpec ThresholdSpec::convergent(int k, double eps) {
    check_depth(k, 2);
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        throw DomainError("logk-eps threshold needs eps > 0, got " + format_double(eps));
    }
    return {ConvergentFamily{k, eps}, representable_floor(k + 1)};
}

ThresholdSpec ThresholdSpec::adaptive(int k0) {
    check_depth(k0, 2);
    return {AdaptiveFamily{k0}, representable_floor(k0)};
}

AdaptiveState::AdaptiveState(const ThresholdSpec& spec) {
    if (const auto* a = std::get_if<AdaptiveFamily>(&spec.family)) {
        current_k = a->k0;
    } else {
        throw DomainError("adaptive state for non-adaptive threshold " + to_string(spec));
    }
}

double eval_lambda(const ThresholdSpec& spec, double t, AdaptiveState* state) {
    check_floor(spec, t);
    if (spec.is_adaptive()) {
        if (state == nullptr) throw DomainError("adaptive threshold evaluated without state");
        if (state->running_sum > 1.0 && state->current_k + 2 <= kMaxDepth &&
            t >= static_cast<double>(domain_floor(state->current_k + 2))) {
            ++state->current_k;
            state->switch_points.emplace_back(static_cast<std::uint64_t>(t), state->current_k);
            state->running_sum = 0.0;
        }
    }
    return peek_lambda(spec, t, state);
}

double peek_lambda(const ThresholdSpec& spec, double t, const AdaptiveState* state) {
    check_floor(spec, t);
    return std::visit(
        [&](const auto& f) -> double {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, FixedFamily>) {
                return f.lambda0;
            } else if constexpr (std::is_same_v<F, DivergentFamily>) {
                return divergent_lambda(f.k, t);
            } else if constexpr (std::is_same_v<F, ConvergentFamily>) {
                return convergent_lambda(f.k, f.eps, t);
            } else {
                int k = state ? state->current_k : f.k0;
                return divergent_lambda(k, t);
            }
        },
        spec.family);
}

double eval_y(const ThresholdSpec& spec, double t, AdaptiveState* state) {
    return eval_lambda(spec, t, state) * std::log(t);
}

ThresholdSpec parse_threshold(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw DomainError("threshold '" + std::string(text) + "' lacks a ':'");
    }
    std::string_view name = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);
    if (name == "fixed") return ThresholdSpec::fixed(parse_real(args, text));
    if (name == "logk") return ThresholdSpec::divergent(parse_int(args, text));
    if (name == "adaptive") return ThresholdSpec::adaptive(parse_int(args, text));
    if (name == "logk-eps") {
        auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw DomainError("threshold '" + std::string(text) + "' expects logk-eps:k,eps");
        }
        return ThresholdSpec::convergent(parse_int(args.substr(0, comma), text),
                                         parse_real(args.substr(comma + 1), text));
    }
    throw DomainError("unknown threshold family '" + std::string(name) + "'");
}

std::string to_string(const ThresholdSpec& spec) {
    return std::visit(
        [](const auto& f) -> std::string {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, FixedFamily>) {
                return "fixed:" + format_double(f.lambda0);
            } else if constexpr (std::is_same_v<F, DivergentFamily>) {
                return "logk:" + std::to_string(f.k);
            } else if constexpr (std::is_same_v<F, ConvergentFamily>) {
                return "logk-eps:" + std::to_string(f.k) + "," + format_double(f.eps);
            } else {
                return "adaptive:" + std::to_string(f.k0);
            }
        },
        spec.family);
}

std::string family_name(const ThresholdSpec& spec) {
    switch (spec.family.index()) {
        case 0: return "fixed";
        case 1: return "logk";
        case 2: return "logk-eps";
        default: return "adaptive";
    }
}

std::optional<int> family_k(const ThresholdSpec& spec) {
    if (const auto* d = std::get_if<DivergentFamily>(&spec.family)) return d->k;
    if (const auto* c = std::get_if<ConvergentFamily>(&spec.family)) return c->k;
    if (const auto* a = std::get_if<AdaptiveFamily>(&spec.family)) return a->k0;
    return std::nullopt;
}

std::optional<double> family_eps(const ThresholdSpec& spec) {
    if (const auto* c = std::get_if<ConvergentFamily>(&spec.family)) return c->eps;
    return std::nullopt;
}

bool meets_slow_decay_condition(const ThresholdSpec& spec) {
    if (const auto* c = std::get_if<ConvergentFamily>(&spec.family)) {
        // 1/(log_2 t)^(1+eps) against 1/(log_2 t)^2.
        return c->k > 2 || c->eps <= 1.0;
    }
    return true;
}

}  // namespace gaplab
