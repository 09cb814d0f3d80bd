#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "catalog_detail.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {

namespace detail {

std::int64_t int_param(const Params& p, const std::string& name) {
    const std::string* v = find_param(p, name);
    if (!v) throw std::invalid_argument("missing parameter '" + name + "'");
    std::size_t pos = 0;
    long long out = 0;
    try {
        out = std::stoll(*v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != v->size()) throw std::invalid_argument("parameter '" + name + "' is not an integer: " + *v);
    return out;
}

const std::string& text_param(const Params& p, const std::string& name) {
    const std::string* v = find_param(p, name);
    if (!v) throw std::invalid_argument("missing parameter '" + name + "'");
    return *v;
}

Params int_params(std::initializer_list<std::pair<const char*, std::int64_t>> kv) {
    Params out;
    for (auto& [k, v] : kv) out.emplace_back(k, std::to_string(v));
    return out;
}

Params with_last(Params prefix, const std::string& name, std::int64_t v) {
    prefix.emplace_back(name, std::to_string(v));
    return prefix;
}

ParamSpec int_spec(std::string name, std::string help) { return {std::move(name), ParamKind::Integer, std::move(help)}; }
ParamSpec seq_spec(std::string help) { return {"seq", ParamKind::Spec, std::move(help)}; }

std::string brief(const BigInt& x) {
    auto s = x.get_str();
    if (s.size() <= 30) return s;
    return std::to_string(s.size()) + " digits";
}

Interval ival(long v, int prec) { return Interval::from_long(v, prec); }
Interval ival(const Rational& q, int prec) { return Interval::from_q(q, prec); }

BoundReport log_report(std::string id, Params params, const LogExpr& lhs, const LogExpr& rhs, Relation rel,
                       const CheckContext& ctx, std::string note) {
    auto v = log_compare(lhs, rhs, rel, ctx.precision, ctx.max_precision);
    return interval_report(std::move(id), std::move(params), lhs.eval(v.precision_bits), rhs.eval(v.precision_bits), v,
                           std::move(note));
}

namespace {

BoundReport merge_sides(std::string id, Params params, const Interval& value, const Interval& lower,
                        const BoundVerdict& lo, const Interval& upper, const BoundVerdict& hi) {
    bool lower_tighter = lo.margin <= hi.margin;
    BoundVerdict v;
    v.verdict = combine(lo.verdict, hi.verdict);
    v.margin = std::min(lo.margin, hi.margin);
    v.precision_bits = std::max(lo.precision_bits, hi.precision_bits);
    return interval_report(std::move(id), std::move(params), value, lower_tighter ? lower : upper, v,
                           lower_tighter ? "lower side binding" : "upper side binding");
}

}  // namespace

BoundReport sandwich_report(std::string id, Params params, const LogExpr& lower, const LogExpr& value,
                            const LogExpr& upper, const CheckContext& ctx) {
    auto lo = log_compare(lower, value, Relation::LessEq, ctx.precision, ctx.max_precision);
    auto hi = log_compare(value, upper, Relation::LessEq, ctx.precision, ctx.max_precision);
    int prec = std::max(lo.precision_bits, hi.precision_bits);
    return merge_sides(std::move(id), std::move(params), value.eval(prec), lower.eval(prec), lo, upper.eval(prec), hi);
}

BoundReport enclosure_report(std::string id, Params params, const Interval& lhs, const Interval& rhs,
                             Relation rel) {
    return interval_report(std::move(id), std::move(params), lhs, rhs, compare_enclosures(lhs, rhs, rel));
}

BoundReport sandwich_enclosure(std::string id, Params params, const Interval& lower, const Interval& value,
                               const Interval& upper) {
    auto lo = compare_enclosures(lower, value, Relation::LessEq);
    auto hi = compare_enclosures(value, upper, Relation::LessEq);
    return merge_sides(std::move(id), std::move(params), value, lower, lo, upper, hi);
}

LcmAccumulator::LcmAccumulator(const PrimeTable& t, int prec) : table_(t), cache_(prec), log_(prec) {}

void LcmAccumulator::add_prime_power(std::uint64_t p, std::uint32_t e) {
    std::uint32_t old = lcm_.valuation(p);
    if (e <= old) return;
    lcm_.max_prime_power(p, e);
    log_ += cache_.log_of(p) * Interval::from_long(static_cast<long>(e - old), cache_.precision());
}

void LcmAccumulator::add(std::uint64_t v) {
    if (v == 0) throw std::domain_error("lcm of zero");
    scratch_.clear();
    table_.factor_into(v, scratch_);
    for (auto [p, e] : scratch_) add_prime_power(p, e);
}

void LcmAccumulator::add(const FactoredInteger& f) {
    for (auto [p, e] : f.powers()) add_prime_power(p, e);
}

}  // namespace detail

using namespace detail;

const std::vector<CheckSpec>& registry() {
    static const std::vector<CheckSpec> all = [] {
        std::vector<CheckSpec> out;
        add_chebyshev_checks(out);
        add_progression_checks(out);
        add_quadratic_checks(out);
        add_identity_checks(out);
        add_lucas_checks(out);
        add_n2plus1_checks(out);
        return out;
    }();
    return all;
}

const CheckSpec& find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    std::string msg = "unknown check id '" + id + "'; valid ids:";
    for (const auto& c : registry()) msg += " " + c.id;
    throw UnknownId(msg);
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

Params canonical_params(const CheckSpec& spec, const Params& given) {
    Params out;
    for (const auto& ps : spec.params) {
        const std::string* v = find_param(given, ps.name);
        if (!v) throw std::invalid_argument("check " + spec.id + " needs parameter '" + ps.name + "'");
        out.emplace_back(ps.name, *v);
    }
    for (const auto& [k, v] : given)
        if (!find_param(out, k)) throw std::invalid_argument("check " + spec.id + " has no parameter '" + k + "'");
    return out;
}

BoundReport run_point(const CheckSpec& spec, const Params& params, const CheckContext& ctx) {
    if (spec.skip_reason) {
        std::string why = spec.skip_reason(params);
        if (!why.empty()) return skipped_report(spec.id, params, why);
    }
    return spec.run(params, ctx);
}

// Emits one group (fixed prefix, every value of the last parameter) through sink.
bool run_group(const CheckSpec& spec, const Params& prefix, const std::vector<std::string>& last_values,
               const CheckContext& ctx, const ReportSink& sink) {
    const std::string& last_name = spec.params.back().name;
    auto t0 = Clock::now();
    auto emit = [&](BoundReport r) {
        r.elapsed_us = micros_since(t0);
        t0 = Clock::now();
        return sink(std::move(r));
    };
    auto point = [&](const std::string& v) {
        Params p = prefix;
        p.emplace_back(last_name, v);
        return p;
    };

    if (!spec.sweep || spec.params.back().kind != ParamKind::Integer) {
        for (const auto& v : last_values)
            if (!emit(run_point(spec, point(v), ctx))) return false;
        return true;
    }

    std::vector<std::int64_t> applicable;
    std::vector<std::optional<std::string>> skip(last_values.size());
    for (std::size_t i = 0; i < last_values.size(); ++i) {
        if (spec.skip_reason) {
            std::string why = spec.skip_reason(point(last_values[i]));
            if (!why.empty()) {
                skip[i] = why;
                continue;
            }
        }
        applicable.push_back(std::stoll(last_values[i]));
    }

    std::size_t next = 0;
    bool go = true;
    auto flush_skipped = [&]() {
        while (go && next < last_values.size() && skip[next]) {
            go = emit(skipped_report(spec.id, point(last_values[next]), *skip[next]));
            ++next;
        }
    };
    flush_skipped();
    if (!go) return false;
    std::size_t produced = 0;
    if (!applicable.empty()) {
        spec.sweep(prefix, applicable, ctx, [&](BoundReport r) {
            ++produced;
            if (r.verdict == Verdict::Inconclusive && !r.exact) r = spec.run(r.params, ctx);
            go = emit(std::move(r));
            ++next;
            if (go) flush_skipped();
            return go;
        });
        if (go && produced != applicable.size())
            throw std::logic_error("sweep for " + spec.id + " produced the wrong number of reports");
    }
    return go;
}

struct Expanded {
    std::vector<Params> prefixes;
    std::vector<std::string> last_values;
};

Expanded expand(const CheckSpec& spec, const Grid& grid) {
    for (const auto& [k, v] : grid) {
        bool known = std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& p) { return p.name == k; });
        if (!known) throw std::invalid_argument("check " + spec.id + " has no parameter '" + k + "'");
    }
    std::vector<std::vector<std::string>> values;
    for (const auto& ps : spec.params) {
        auto it = grid.find(ps.name);
        if (it == grid.end() || it->second.empty())
            throw std::invalid_argument("check " + spec.id + " needs parameter '" + ps.name + "'");
        std::vector<std::string> vals;
        if (ps.kind == ParamKind::Integer) {
            std::vector<std::int64_t> ints;
            for (const auto& text : it->second) {
                auto part = parse_int_list(text);
                ints.insert(ints.end(), part.begin(), part.end());
            }
            std::sort(ints.begin(), ints.end());
            ints.erase(std::unique(ints.begin(), ints.end()), ints.end());
            for (auto i : ints) vals.push_back(std::to_string(i));
        } else {
            for (const auto& text : it->second) {
                auto canonical = spec_to_string(parse_spec(text));
                if (std::find(vals.begin(), vals.end(), canonical) == vals.end()) vals.push_back(canonical);
            }
        }
        values.push_back(std::move(vals));
    }
    Expanded out;
    out.last_values = values.back();
    out.prefixes.emplace_back();
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        std::vector<Params> next;
        for (const auto& pre : out.prefixes)
            for (const auto& v : values[i]) {
                Params p = pre;
                p.emplace_back(spec.params[i].name, v);
                next.push_back(std::move(p));
            }
        out.prefixes = std::move(next);
    }
    return out;
}

void tally(ScanSummary& s, Verdict v) {
    switch (v) {
        case Verdict::Holds: ++s.holds; break;
        case Verdict::Fails: ++s.fails; break;
        case Verdict::Inconclusive: ++s.inconclusive; break;
        case Verdict::Skipped: ++s.skipped; break;
    }
}

}  // namespace

BoundReport check(const std::string& id, const Params& params, const CheckContext& ctx) {
    const CheckSpec& spec = find_check(id);
    Params p = canonical_params(spec, params);
    for (const auto& ps : spec.params)
        if (ps.kind == ParamKind::Integer) int_param(p, ps.name);
    auto t0 = Clock::now();
    BoundReport r = run_point(spec, p, ctx);
    r.elapsed_us = micros_since(t0);
    return r;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) throw std::invalid_argument("bad integer '" + s + "' in '" + text + "'");
        return static_cast<std::int64_t>(v);
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty item in '" + text + "'");
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(to_int(item));
            continue;
        }
        std::int64_t lo = to_int(item.substr(0, dots)), hi = to_int(item.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range '" + item + "'");
        if (hi - lo > 100'000'000) throw std::invalid_argument("range too large '" + item + "'");
        for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
    return out;
}

ScanSummary scan(const std::string& id, const Grid& grid, const CheckContext& ctx, const ReportSink& sink,
                 const ScanOptions& opts) {
    const CheckSpec& spec = find_check(id);
    Expanded ex = expand(spec, grid);
    ScanSummary summary;
    auto counted = [&](BoundReport r) {
        tally(summary, r.verdict);
        bool failed = r.verdict == Verdict::Fails;
        bool go = sink(std::move(r));
        if (!go || (opts.fail_fast && failed)) {
            summary.stopped = true;
            return false;
        }
        return true;
    };

    const std::size_t groups = ex.prefixes.size();
    if (opts.workers <= 1 || groups <= 1) {
        for (const auto& prefix : ex.prefixes)
            if (!run_group(spec, prefix, ex.last_values, ctx, counted)) break;
        return summary;
    }

    // Workers fill per-group buffers; this thread emits them in group order.
    struct Slot {
        bool ready = false;
        std::vector<BoundReport> reports;
        std::exception_ptr error;
    };
    std::vector<Slot> slots(groups);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&]() {
        for (;;) {
            if (stop) return;
            std::size_t g = next++;
            if (g >= groups) return;
            Slot local;
            try {
                run_group(spec, ex.prefixes[g], ex.last_values, ctx, [&](BoundReport r) {
                    bool failed = r.verdict == Verdict::Fails;
                    local.reports.push_back(std::move(r));
                    return !(opts.fail_fast && failed) && !stop;
                });
            } catch (...) {
                local.error = std::current_exception();
            }
            std::lock_guard<std::mutex> lock(mu);
            slots[g].reports = std::move(local.reports);
            slots[g].error = local.error;
            slots[g].ready = true;
            cv.notify_all();
        }
    };

    unsigned n_threads = std::min<unsigned>(opts.workers, static_cast<unsigned>(groups));
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);

    std::exception_ptr error;
    for (std::size_t g = 0; g < groups && !stop; ++g) {
        Slot slot;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return slots[g].ready; });
            slot = std::move(slots[g]);
        }
        for (auto& r : slot.reports) {
            if (!counted(std::move(r))) {
                stop = true;
                break;
            }
        }
        if (slot.error && !stop) {
            error = slot.error;
            stop = true;
        }
    }
    stop = true;
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return summary;
}

std::vector<BoundReport> scan(const std::string& id, const Grid& grid, const CheckContext& ctx,
                              const ScanOptions& opts) {
    std::vector<BoundReport> out;
    scan(id, grid, ctx, [&](BoundReport r) {
        out.push_back(std::move(r));
        return true;
    }, opts);
    return out;
}

const std::vector<ProbeSpec>& probe_registry() {
    static const std::vector<ProbeSpec> all = [] {
        std::vector<ProbeSpec> out;
        add_probes(out);
        return out;
    }();
    return all;
}

ProbeSeries probe(const std::string& id, const Params& params, std::vector<std::uint64_t> points,
                  const CheckContext& ctx) {
    const ProbeSpec* spec = nullptr;
    for (const auto& p : probe_registry())
        if (p.id == id) spec = &p;
    if (!spec) {
        std::string msg = "unknown probe id '" + id + "'; valid ids:";
        for (const auto& p : probe_registry()) msg += " " + p.id;
        throw UnknownId(msg);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::invalid_argument("probe needs at least one point");
    if (points.front() == 0) throw std::invalid_argument("probe points must be positive");
    Params full;
    for (const auto& [k, def] : spec->defaults) {
        const std::string* v = find_param(params, k);
        full.emplace_back(k, v ? *v : def);
    }
    for (const auto& [k, v] : params)
        if (!find_param(full, k)) throw std::invalid_argument("probe " + id + " has no parameter '" + k + "'");
    return spec->run(full, points, ctx);
}

}  // namespace lcmkit
