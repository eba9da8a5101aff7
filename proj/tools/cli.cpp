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


#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "gaplab/gaplab.hpp"

namespace gaplab::cli {

namespace {

using nlohmann::ordered_json;

// Bad user input detected before any computation starts.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Plain decimal, or a literal such as 1e7 that denotes an exact integer.
std::uint64_t parse_count(const std::string& flag, const std::string& text) {
    std::uint64_t v = 0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (!text.empty() && res.ec == std::errc{} && res.ptr == text.data() + text.size()) return v;
    char* end = nullptr;
    long double d = std::strtold(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !(d >= 0) || d != std::floor(d) ||
        d >= 18446744073709551616.0L) {
        throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
    }
    return static_cast<std::uint64_t>(d);
}

std::uint64_t max_x() {
    const char* env = std::getenv("GAPLAB_MAX_X");
    if (env == nullptr || *env == '\0') return kDefaultMaxX;
    return parse_count("GAPLAB_MAX_X", env);
}

struct Options {
    std::string x;
    std::string out;
    unsigned threads = 1;
    std::uint64_t segment_len = kDefaultSegmentLen;
    std::string set = "primes";
    std::optional<std::uint64_t> z;
    std::optional<std::string> delta;
    std::vector<std::string> thresholds;
    std::string checkpoints;
    std::optional<double> lambda;
    std::optional<double> h;
    int kmax = kDefaultKmax;
    std::string tuple;
    double rel_err = 1e-6;
    std::optional<std::uint64_t> P;
    std::uint32_t sum_h = 0;
    std::string kind = "pair";
    std::string order = "row";
    std::optional<std::uint64_t> pair;
    std::string triple;
};

struct Context {
    const Options& o;
    StreamOptions stream;
    std::string output;
    ordered_json extra = ordered_json::object();
};

std::uint64_t get_x(const Options& o) {
    if (o.x.empty()) throw UsageError("--x is required");
    std::uint64_t x = parse_count("--x", o.x);
    const std::uint64_t cap = max_x();
    if (x > cap) {
        throw UsageError("--x=" + std::to_string(x) + " exceeds GAPLAB_MAX_X=" + std::to_string(cap));
    }
    return x;
}

ElementSet get_set(const Options& o) {
    if (o.set == "primes") {
        if (o.z || o.delta) throw UsageError("--z/--delta require --set survivors");
        return PrimeSet{};
    }
    if (o.set != "survivors") throw UsageError("--set: expected primes or survivors, got '" + o.set + "'");
    if (o.z && o.delta) throw UsageError("--z and --delta are mutually exclusive");
    try {
        if (o.z) return fixed_z(*o.z);
        return o.delta ? parse_delta(*o.delta) : variable_delta();
    } catch (const Error& e) {
        throw UsageError(std::string(o.z ? "--z: " : "--delta: ") + e.what());
    }
}

SurvivorRule get_rule(const Options& o) {
    Options copy = o;
    copy.set = "survivors";
    return std::get<SurvivorRule>(get_set(copy));
}

std::vector<ThresholdSpec> get_thresholds(const Options& o, const char* fallback) {
    std::vector<std::string> texts = o.thresholds;
    if (texts.empty()) {
        if (fallback == nullptr) throw UsageError("--threshold is required");
        texts.emplace_back(fallback);
    }
    std::vector<ThresholdSpec> specs;
    for (const auto& t : texts) {
        try {
            specs.push_back(parse_threshold(t));
        } catch (const Error& e) {
            throw UsageError(std::string("--threshold: ") + e.what());
        }
        if (specs.back().is_adaptive() && o.threads > 1) {
            throw UsageError("--threads=" + std::to_string(o.threads) + " refused: threshold " + t +
                             " is sequential by contract; use --threads 1");
        }
    }
    return specs;
}

Tuple get_tuple(const Options& o) {
    if (o.tuple.empty()) throw UsageError("--tuple is required");
    try {
        return parse_tuple(o.tuple);
    } catch (const Error& e) {
        throw UsageError(std::string("--tuple: ") + e.what());
    }
}

// geometric:<ratio> gives round(r^j) for j >= 1, within [2, x].
std::vector<std::uint64_t> get_checkpoints(const Options& o, std::uint64_t x) {
    std::vector<std::uint64_t> cps;
    if (!o.checkpoints.empty()) {
        const std::string prefix = "geometric:";
        if (o.checkpoints.rfind(prefix, 0) != 0) {
            throw UsageError("--checkpoints: expected geometric:<ratio>, got '" + o.checkpoints + "'");
        }
        char* end = nullptr;
        const std::string num = o.checkpoints.substr(prefix.size());
        double r = std::strtod(num.c_str(), &end);
        if (num.empty() || end != num.c_str() + num.size() || !(r > 1.0) || !std::isfinite(r)) {
            throw UsageError("--checkpoints: ratio must be a number > 1, got '" + num + "'");
        }
        for (int j = 1;; ++j) {
            double c = std::round(std::pow(r, j));
            if (c > static_cast<double>(x)) break;
            if (c >= 2.0 && (cps.empty() || cps.back() != static_cast<std::uint64_t>(c))) {
                cps.push_back(static_cast<std::uint64_t>(c));
            }
            if (cps.size() > 100'000) throw UsageError("--checkpoints: ratio too close to 1");
        }
    }
    if (cps.empty() || cps.back() != x) cps.push_back(x);
    return cps;
}

// CSV-safe family label: k and eps have their own columns, so only the
// fixed family carries its parameter here.
std::string family_label(const ThresholdSpec& spec) {
    if (std::holds_alternative<FixedFamily>(spec.family)) return to_string(spec);
    return family_name(spec);
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }
std::string opt_real(const std::optional<double>& v) { return v ? real(*v) : ""; }

void cmd_pi(Context& c) {
    c.output = std::to_string(prime_count(get_x(c.o), c.stream)) + "\n";
}

void cmd_gaps(Context& c) {
    const auto x = get_x(c.o);
    const auto set = get_set(c.o);
    std::string& s = c.output;
    s = "p,p_next,gap\n";
    gap_stream(set, x, c.stream, [&](std::span<const GapRecord> block) {
        for (const auto& r : block) {
            s += std::to_string(r.p);
            s += ',';
            s += std::to_string(r.p_next);
            s += ',';
            s += std::to_string(r.gap);
            s += '\n';
        }
    });
}

void cmd_recipsum(Context& c) {
    const auto x = get_x(c.o);
    const auto specs = get_thresholds(c.o, nullptr);
    const auto set = get_set(c.o);
    const auto cps = get_checkpoints(c.o, x);
    const auto results = reciprocal_sums(x, specs, set, cps, c.stream);
    std::string& s = c.output;
    s = "x,family,k,eps,sum,count,comparator_log_k_plus_1_x\n";
    for (std::size_t i = 0; i < cps.size(); ++i) {
        for (const auto& r : results) {
            const auto& cp = r.accumulator.checkpoints().at(i);
            std::optional<int> k = family_k(r.threshold);
            if (r.adaptive) k = cp.k;
            std::optional<double> cmp;
            if (k) cmp = comparator_log_k_plus_1(*k, cp.x);
            s += std::to_string(cp.x) + "," + family_label(r.threshold) + "," + opt_int(k) + "," +
                 opt_real(family_eps(r.threshold)) + "," + real(cp.sum) + "," + std::to_string(cp.count) + "," +
                 opt_real(cmp) + "\n";
        }
    }
    for (const auto& r : results) {
        if (!r.adaptive) continue;
        ordered_json points = ordered_json::array();
        for (const auto& [t, k] : r.adaptive->switch_points) points.push_back({t, k});
        c.extra["adaptive_switch_points"][to_string(r.threshold)] = points;
    }
    c.extra["set"] = to_string(set);
}

void cmd_cdf(Context& c) {
    const auto x = get_x(c.o);
    const auto specs = get_thresholds(c.o, "fixed:1");
    const auto set = get_set(c.o);
    std::string& s = c.output;
    s = "x,family,lambda_at_x,empirical,predicted,ratio\n";
    for (const auto& r : gap_cdfs(x, specs, set, c.stream)) {
        s += std::to_string(r.x) + "," + family_label(r.threshold) + "," + real(r.lambda_at_x) + "," +
             real(r.empirical) + "," + real(r.predicted) + "," + real(r.empirical / r.predicted) + "\n";
    }
    c.extra["set"] = to_string(set);
}

void cmd_gallagher(Context& c) {
    const auto x = get_x(c.o);
    if (c.o.lambda && c.o.h) throw UsageError("--lambda and --h are mutually exclusive");
    if (c.o.kmax < 0) throw UsageError("--kmax must be >= 0");
    IntervalHistogram hist = c.o.h ? gallagher_histogram_h(x, *c.o.h, c.o.kmax, c.stream)
                                   : gallagher_histogram(x, c.o.lambda.value_or(1.0), c.o.kmax, c.stream);
    std::string& s = c.output;
    s = "x,lambda,h,k,P_k,poisson_prediction,ratio\n";
    for (int k = 0; k <= c.o.kmax; ++k) {
        const double pred = hist.poisson_prediction(k);
        const auto pk = hist.counts[static_cast<std::size_t>(k)];
        s += std::to_string(x) + "," + real(hist.lambda) + "," + real(hist.h) + "," + std::to_string(k) + "," +
             std::to_string(pk) + "," + real(pred) + "," + real(static_cast<double>(pk) / pred) + "\n";
    }
    c.extra["overflow"] = hist.overflow;
    c.extra["overflow_moment"] = hist.overflow_moment;
    c.extra["first_moment"] = hist.first_moment();
}

ordered_json tuple_json(const Tuple& t) {
    ordered_json a = ordered_json::array();
    for (auto v : t.offsets()) a.push_back(v);
    return a;
}

void cmd_sing(Context& c, std::ostream& err) {
    const Tuple t = get_tuple(c.o);
    SingularSeriesResult r;
    if (c.o.P) {
        r = singular_series_at(t, *c.o.P);
    } else {
        if (!(c.o.rel_err > 0.0 && c.o.rel_err <= 0.1)) {
            throw UsageError("--rel-err must lie in (0, 0.1], got " + real(c.o.rel_err));
        }
        const std::uint64_t top = std::end(kTruncationPoints)[-1];
        if (truncation_tail_bound(t.size(), top) <= c.o.rel_err) {
            r = singular_series(t, c.o.rel_err);
        } else {
            // Best available truncation; the reported tail bound says how far
            // it is from the request.
            r = singular_series_at(t, std::max<std::uint64_t>({top, t.diameter(), 2 * t.size()}));
            err << "gaplab sing: warning: --rel-err=" << real(c.o.rel_err) << " not certifiable; tail bound at P="
                << r.truncation_prime << " is " << real(r.tail_bound) << "\n";
            c.extra["rel_err_met"] = false;
        }
    }
    ordered_json j;
    j["tuple"] = tuple_json(t);
    j["value"] = r.value;
    j["truncation_prime"] = r.truncation_prime;
    j["tail_bound"] = r.tail_bound;
    j["admissible"] = r.admissible;
    c.output = j.dump() + "\n";
}

void cmd_singsum(Context& c) {
    const std::uint64_t P = c.o.P.value_or(10'000'000);
    ordered_json j;
    j["kind"] = c.o.kind;
    j["h"] = c.o.sum_h;
    const double h = c.o.sum_h;
    if (c.o.kind == "pair") {
        const double sum = pair_sum(c.o.sum_h, c.o.threads, P);
        j["sum"] = sum;
        j["normalized"] = sum / h;
    } else if (c.o.kind == "triple") {
        TripleOrder order;
        if (c.o.order == "row") order = TripleOrder::kRowMajor;
        else if (c.o.order == "column") order = TripleOrder::kColumnMajor;
        else throw UsageError("--order: expected row or column, got '" + c.o.order + "'");
        const auto r = triple_sum(c.o.sum_h, order, c.o.threads, P);
        j["order"] = c.o.order;
        j["ordered"] = r.ordered;
        j["unordered"] = r.unordered;
        j["normalized"] = r.normalized;
    } else {
        throw UsageError("--kind: expected pair or triple, got '" + c.o.kind + "'");
    }
    j["truncation_prime"] = P;
    c.output = j.dump() + "\n";
}

std::pair<std::uint64_t, std::uint64_t> parse_pair_offsets(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--triple: expected d1,d2, got '" + text + "'");
    return {parse_count("--triple", text.substr(0, comma)), parse_count("--triple", text.substr(comma + 1))};
}

void cmd_survivors(Context& c) {
    const auto x = get_x(c.o);
    const SurvivorRule rule = get_rule(c.o);
    const SurvivorConfig cfg{rule, x};
    const auto* fz = std::get_if<FixedZ>(&rule);
    const bool crt_ok = fz != nullptr && fz->z <= 30 && primorial_below(fz->z) != 0;
    if (c.o.pair && !c.o.triple.empty()) throw UsageError("--pair and --triple are mutually exclusive");
    if (c.o.pair) {
        ordered_json j;
        j["x"] = x;
        j["rule"] = to_string(rule);
        j["d"] = *c.o.pair;
        j["count"] = pair_count(cfg, *c.o.pair, c.stream);
        if (crt_ok) j["crt_oracle"] = crt_pair_oracle(x, fz->z, *c.o.pair);
        c.output = j.dump() + "\n";
    } else if (!c.o.triple.empty()) {
        const auto [d1, d2] = parse_pair_offsets(c.o.triple);
        if (!(1 <= d1 && d1 < d2)) throw UsageError("--triple: need 1 <= d1 < d2, got " + c.o.triple);
        ordered_json j;
        j["x"] = x;
        j["rule"] = to_string(rule);
        j["d1"] = d1;
        j["d2"] = d2;
        j["count"] = triple_count(cfg, d1, d2, c.stream);
        if (crt_ok) j["crt_oracle"] = crt_triple_oracle(x, fz->z, d1, d2);
        c.output = j.dump() + "\n";
    } else {
        std::string& s = c.output;
        s = "m\n";
        survivor_stream(cfg, c.stream, [&](std::span<const std::uint64_t> block) {
            for (auto m : block) {
                s += std::to_string(m);
                s += '\n';
            }
        });
    }
}

void cmd_hl(Context& c) {
    const auto x = get_x(c.o);
    const Tuple t = get_tuple(c.o);
    if (!is_admissible(t)) throw UsageError("--tuple: " + to_string(t) + " is not admissible");
    const auto r = hl_compare(x, t, c.o.threads);
    ordered_json j;
    j["tuple"] = tuple_json(t);
    j["x"] = x;
    j["actual"] = r.actual;
    j["predicted"] = r.predicted;
    j["ratio"] = r.ratio;
    j["singular_series"] = r.singular_series;
    c.output = j.dump() + "\n";
}

void cmd_report_dyadic(Context& c) {
    const auto x = get_x(c.o);
    if (c.o.thresholds.size() > 1) throw UsageError("--threshold: report-dyadic takes a single threshold");
    const auto spec = get_thresholds(c.o, "logk:2").front();
    if (spec.is_adaptive()) throw UsageError("--threshold: report-dyadic needs a non-adaptive threshold");
    const auto set = get_set(c.o);
    const auto rep = survivor_gap_report(x, set, spec, c.stream);
    std::string& s = c.output;
    s = "M,2M,population,qualifying_frozen,qualifying_exact,comparator\n";
    auto row = [&](const DyadicRow& r) {
        s += std::to_string(r.lo) + "," + std::to_string(r.hi) + "," + std::to_string(r.population) + "," +
             std::to_string(r.qualifying_frozen) + "," + std::to_string(r.qualifying_exact) + "," +
             real(r.comparator) + "\n";
    };
    for (const auto& r : rep.rows) row(r);
    row(rep.aggregate);
    c.extra["set"] = to_string(set);
    c.extra["threshold"] = to_string(spec);
    c.extra["rows"] = rep.rows.size();
    c.extra["aggregate_row"] = "last";
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out, "Output path (default stdout)");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    sub->add_option("--segment-len", o.segment_len, "Sieve segment length")->check(CLI::Range(std::uint64_t{64}, std::uint64_t{1} << 32));
}

void add_x(CLI::App* sub, Options& o) { sub->add_option("--x", o.x, "Upper bound x")->required(); }

void add_set(CLI::App* sub, Options& o) {
    sub->add_option("--set", o.set, "primes or survivors");
    sub->add_option("--z", o.z, "Fixed sifting bound z");
    sub->add_option("--delta", o.delta, "Variable sifting exponent 1/n");
}

ordered_json echo_params(const CLI::App* sub) {
    ordered_json p = ordered_json::object();
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->get_name() == "--help" || opt->get_name() == "--out") continue;
        const auto& res = opt->results();
        std::string key = opt->get_name().substr(2);
        if (res.empty()) {
            const std::string def = opt->get_default_str();
            if (def.empty()) p[key] = nullptr;
            else if (def == "{}") p[key] = ordered_json::array();
            else p[key] = def;
        } else if (res.size() == 1) {
            p[key] = res.front();
        } else {
            p[key] = res;
        }
    }
    return p;
}

char hex_digit(unsigned v) { return "0123456789abcdef"[v & 15]; }

std::string hex64(std::uint64_t v) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = hex_digit(static_cast<unsigned>(v));
    return s;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"gaplab: prime and sieve-survivor gap statistics"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    Options o;

    struct Command {
        CLI::App* app;
        std::function<void(Context&)> run;
    };
    std::vector<Command> commands;
    auto add = [&](const char* name, const char* help, std::function<void(Context&)> run) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_common(sub, o);
        commands.push_back({sub, std::move(run)});
        return sub;
    };

    auto* pi = add("pi", "Count primes up to x", cmd_pi);
    add_x(pi, o);

    auto* gaps = add("gaps", "Successor gaps of the primes or survivors up to x", cmd_gaps);
    add_x(gaps, o);
    add_set(gaps, o);

    auto* recip = add("recipsum", "Reciprocal sums over elements with short successor gaps", cmd_recipsum);
    add_x(recip, o);
    add_set(recip, o);
    recip->add_option("--threshold", o.thresholds, "fixed:L, logk:K, logk-eps:K,E or adaptive:K (repeatable)");
    recip->add_option("--checkpoints", o.checkpoints, "geometric:<ratio>");

    auto* cdf = add("cdf", "Empirical gap CDF against 1 - exp(-lambda)", cmd_cdf);
    add_x(cdf, o);
    add_set(cdf, o);
    cdf->add_option("--threshold", o.thresholds, "Threshold (repeatable, default fixed:1)");

    auto* gal = add("gallagher", "Prime counts in windows (n, n + h]", cmd_gallagher);
    add_x(gal, o);
    gal->add_option("--lambda", o.lambda, "h = lambda log x (default 1)");
    gal->add_option("--h", o.h, "Window length");
    gal->add_option("--kmax", o.kmax, "Largest tabulated count");

    std::ostream* err_ptr = &err;
    auto* sing = add("sing", "Hardy-Littlewood singular series of a tuple",
                     [err_ptr](Context& c) { cmd_sing(c, *err_ptr); });
    sing->add_option("--tuple", o.tuple, "Offsets, e.g. 0,2,6")->required();
    sing->add_option("--rel-err", o.rel_err, "Target relative error");
    sing->add_option("--P", o.P, "Explicit truncation prime bound");

    auto* ssum = add("singsum", "Pair or triple sums of singular series", cmd_singsum);
    ssum->add_option("--h", o.sum_h, "Offset bound h")->required()->check(CLI::Range(2u, 100'000'000u));
    ssum->add_option("--kind", o.kind, "pair or triple");
    ssum->add_option("--order", o.order, "Triple evaluation order: row or column");
    ssum->add_option("--P", o.P, "Truncation prime bound");

    auto* surv = add("survivors", "Sieve survivors, pair and triple counts", cmd_survivors);
    add_x(surv, o);
    surv->add_option("--z", o.z, "Fixed sifting bound z");
    surv->add_option("--delta", o.delta, "Variable sifting exponent 1/n (default 1/10)");
    surv->add_option("--pair", o.pair, "Count m, m + d");
    surv->add_option("--triple", o.triple, "Count m, m + d1, m + d2 (d1,d2)");

    auto* hl = add("hl", "Tuple counts against the Hardy-Littlewood prediction", cmd_hl);
    add_x(hl, o);
    hl->add_option("--tuple", o.tuple, "Offsets, e.g. 0,2")->required();

    auto* dy = add("report-dyadic", "Dyadic report of short gaps", cmd_report_dyadic);
    add_x(dy, o);
    add_set(dy, o);
    dy->add_option("--threshold", o.thresholds, "Threshold (default logk:2)");

    std::vector<std::string> argv_store{"gaplab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Command* cmd = nullptr;
    for (const auto& c : commands) {
        if (c.app->parsed()) cmd = &c;
    }
    const std::string name = cmd->app->get_name();

    Context ctx{o, {}, {}, {}};
    ctx.stream.segment_len = o.segment_len;
    ctx.stream.threads = o.threads;
    const auto start = std::chrono::steady_clock::now();
    try {
        cmd->run(ctx);
    } catch (const UsageError& e) {
        err << "gaplab " << name << ": usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "gaplab " << name << ": error: " << e.what() << "\n";
        return kExitRuntime;
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    ordered_json manifest;
    manifest["command"] = name;
    manifest["params"] = echo_params(cmd->app);
    manifest["version"] = kVersion;
    manifest["wall_time_s"] = wall;
    manifest["output_bytes"] = ctx.output.size();
    manifest["output_checksum"] = "fnv1a64:" + hex64(fnv1a64(ctx.output));
    for (auto& [k, v] : ctx.extra.items()) manifest[k] = v;

    if (o.out.empty()) {
        out << ctx.output;
        out.flush();
        err << manifest.dump() << "\n";
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << ctx.output;
        std::ofstream side(o.out + ".manifest.json", std::ios::binary);
        side << manifest.dump(2) << "\n";
        if (!file || !side) {
            err << "gaplab " << name << ": error: cannot write --out " << o.out << "\n";
            return kExitRuntime;
        }
    }
    return kExitOk;
}

}  // namespace gaplab::cli
