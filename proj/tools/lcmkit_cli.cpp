// Command-line frontend for the lcm toolkit.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcm/bounds_catalog.hpp"
#include "lcm/identities.hpp"
#include "lcm/quadratic_lcm.hpp"
#include "lcm/report_io.hpp"
#include "lcm/sequences.hpp"

using namespace lcmkit;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kInvariant = 3, kInconclusive = 4 };

struct RunConfig {
    std::uint64_t sieve_limit = kDefaultSieveLimit;
    int precision_bits = kDefaultPrecision;
    std::string format = "text";
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 0;
    bool timing = false;
};

std::string with_digits(const BigInt& v) {
    std::string s = v.get_str();
    std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
    return s + " (" + std::to_string(digits) + " digits)";
}

std::string join(const std::vector<BigInt>& xs) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty()) out += ' ';
        out += x.get_str();
    }
    return out;
}

std::vector<std::string> string_list(const std::vector<BigInt>& xs) {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
}

std::int64_t to_int(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw std::invalid_argument(std::string(what) + ": not an integer: " + s);
    return v;
}

// Output for `compute`: a text line or a JSON object.
void emit(const RunConfig& cfg, const std::string& object, const std::string& text, const json& value) {
    if (cfg.format == "json") {
        json j;
        j["object"] = object;
        j["value"] = value;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
}

int compute(const RunConfig& cfg, const std::vector<std::string>& args) {
    if (args.empty()) throw std::invalid_argument("compute needs an object: lcm, u-decomp, row, bezout, divisor, M");
    const std::string& what = args[0];
    auto need = [&](std::size_t k, const char* usage) {
        if (args.size() != k + 1) throw std::invalid_argument(std::string("usage: compute ") + usage);
    };
    if (what == "lcm") {
        need(3, "lcm <spec> <m> <n>");
        auto spec = parse_spec(args[1]);
        auto m = to_int(args[2], "m"), n = to_int(args[3], "n");
        std::int64_t first = zero_based(spec) ? 0 : 1;
        if (m < first || m > n) throw std::invalid_argument("compute lcm needs " + std::to_string(first) + " <= m <= n");
        auto terms = generate(spec, static_cast<std::size_t>(n - first + 1));
        std::vector<BigInt> range;
        for (auto k = m; k <= n; ++k) range.push_back(abs(terms[static_cast<std::size_t>(k - first)]));
        BigInt L = lcm_big(range);
        emit(cfg, "lcm", with_digits(L), L.get_str());
    } else if (what == "u-decomp") {
        need(2, "u-decomp <spec> <n>");
        auto spec = parse_spec(args[1]);
        auto n = to_int(args[2], "n");
        if (n < 1) throw std::invalid_argument("compute u-decomp needs n >= 1");
        auto terms = generate(spec, static_cast<std::size_t>(n));
        for (auto& t : terms) t = abs(t);
        auto u = extract_u(terms);
        if (extract_u(terms, UMethod::Moebius) != u) throw std::logic_error("u-extraction methods disagree");
        emit(cfg, "u-decomp", join(u), string_list(u));
    } else if (what == "row") {
        need(2, "row <spec> <n>");
        auto n = to_int(args[2], "n");
        if (n < 0) throw std::invalid_argument("compute row needs n >= 0");
        auto row = a_binomial_row(parse_spec(args[1]), static_cast<std::uint64_t>(n));
        emit(cfg, "row", join(row), string_list(row));
    } else if (what == "bezout") {
        need(2, "bezout <c> <k>");
        auto c = to_int(args[1], "c"), k = to_int(args[2], "k");
        auto b = bezout_coefficients(c, k);
        auto polys = bezout_polynomials(b);
        std::string text;
        json theta = json::array();
        for (std::size_t l = 0; l < b.theta.size(); ++l) {
            const auto& t = b.theta[l];
            text += "theta_" + std::to_string(l) + " = " + to_string(t.re) + " + (" + to_string(t.im) + ") sqrt(-" +
                    std::to_string(c) + ")\n";
            theta.push_back({{"re", to_string(t.re)}, {"im", to_string(t.im)}});
        }
        text += "d = " + polys.d.get_str() + "\nr = " + join(polys.r) + "\ns = " + join(polys.s);
        json v = {{"theta", theta}, {"d", polys.d.get_str()}, {"r", string_list(polys.r)}, {"s", string_list(polys.s)},
                  {"integral", polys.integral}};
        emit(cfg, "bezout", text, v);
    } else if (what == "divisor") {
        need(3, "divisor <c> <m> <n>");
        auto c = to_int(args[1], "c"), m = to_int(args[2], "m"), n = to_int(args[3], "n");
        Rational q = quadratic_divisor(c, m, n);
        PrimeTable table(cfg.sieve_limit);
        BigInt L = L_quadratic(table, c, m, n).value();
        bool multiple = is_multiple_of_rational(L, q);
        if (!multiple) throw std::logic_error("lcm is not a multiple of the divisor");
        emit(cfg, "divisor", to_string(q) + "\nL = " + with_digits(L),
             {{"divisor", to_string(q)}, {"lcm", L.get_str()}, {"multiple", multiple}});
    } else if (what == "M") {
        need(1, "M <r>");
        auto r = to_int(args[1], "r");
        if (r < 1) throw std::invalid_argument("compute M needs r >= 1");
        Rational v = M_of(static_cast<std::uint64_t>(r));
        emit(cfg, "M", to_string(v), to_string(v));
    } else {
        throw std::invalid_argument("unknown compute object '" + what + "'");
    }
    return kOk;
}

std::vector<std::string> grid_values(const ParamSpec& ps, const std::string& text) {
    std::vector<std::string> out;
    if (ps.kind == ParamKind::Spec) {
        // Spec values contain commas, so several specs are separated by ';'.
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find(';', start);
            if (end == std::string::npos) end = text.size();
            out.push_back(text.substr(start, end - start));
            start = end + 1;
        }
    } else {
        out.push_back(text);
    }
    return out;
}

// Cartesian product in canonical order, for sampling.
std::vector<Params> expand(const CheckSpec& spec, const Grid& grid) {
    std::vector<Params> points{Params{}};
    for (const auto& ps : spec.params) {
        std::vector<std::string> values;
        for (const auto& v : grid.at(ps.name)) {
            if (ps.kind == ParamKind::Integer)
                for (auto x : parse_int_list(v)) values.push_back(std::to_string(x));
            else
                values.push_back(spec_to_string(parse_spec(v)));
        }
        std::vector<Params> next;
        for (const auto& pre : points)
            for (const auto& v : values) {
                Params p = pre;
                p.emplace_back(ps.name, v);
                next.push_back(std::move(p));
            }
        points = std::move(next);
        if (points.size() > 50'000'000) throw std::invalid_argument("grid too large to sample");
    }
    return points;
}

class Printer {
public:
    Printer(const RunConfig& cfg) : cfg_(cfg), fmt_(format_from_string(cfg.format)) {
        if (fmt_ == Format::Csv) std::cout << kCsvHeader << '\n';
    }
    void report(const BoundReport& r) {
        switch (fmt_) {
            case Format::Text: std::cout << report_text(r, cfg_.timing) << '\n'; break;
            case Format::Csv: std::cout << report_csv(r, cfg_.timing) << '\n'; break;
            case Format::Json: std::cout << report_json(r, cfg_.timing) << '\n'; break;
        }
    }
    void summary(const ScanSummary& s) {
        if (fmt_ == Format::Text) std::cout << summary_text(s) << '\n';
        if (fmt_ == Format::Json) std::cout << summary_json(s) << '\n';
        if (fmt_ == Format::Csv) std::cerr << summary_text(s) << '\n';
    }

private:
    const RunConfig& cfg_;
    Format fmt_;
};

int exit_for(const ScanSummary& s) {
    if (s.fails) return kFails;
    if (s.inconclusive) return kInconclusive;
    return kOk;
}

int verify(const RunConfig& cfg, const std::string& id, const std::map<std::string, std::string>& flags,
           bool fail_fast, std::size_t sample) {
    const CheckSpec& spec = find_check(id);
    Grid grid;
    for (const auto& ps : spec.params) {
        auto it = flags.find(ps.name);
        if (it == flags.end()) {
            std::string need;
            for (const auto& q : spec.params) need += " --" + q.name;
            throw std::invalid_argument("check " + id + " needs" + need);
        }
        grid[ps.name] = grid_values(ps, it->second);
    }
    for (const auto& [name, value] : flags) {
        bool known = std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& p) { return p.name == name; });
        if (!known) throw std::invalid_argument("check " + id + " has no parameter --" + name);
    }
    PrimeTable table(cfg.sieve_limit);
    CheckContext ctx{table, cfg.precision_bits, std::max(cfg.precision_bits, kMaxPrecision)};
    Printer out(cfg);
    ScanSummary summary;
    if (sample > 0) {
        auto points = expand(spec, grid);
        std::vector<std::size_t> idx(points.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(idx.begin(), idx.end(), rng);
        idx.resize(std::min(sample, idx.size()));
        std::sort(idx.begin(), idx.end());
        for (auto i : idx) {
            auto r = check(id, points[i], ctx);
            out.report(r);
            switch (r.verdict) {
                case Verdict::Holds: ++summary.holds; break;
                case Verdict::Fails: ++summary.fails; break;
                case Verdict::Inconclusive: ++summary.inconclusive; break;
                case Verdict::Skipped: ++summary.skipped; break;
            }
            if (fail_fast && r.verdict == Verdict::Fails) {
                summary.stopped = true;
                break;
            }
        }
    } else {
        summary = scan(id, grid, ctx, [&](BoundReport r) {
            out.report(r);
            return true;
        }, ScanOptions{cfg.workers, fail_fast});
    }
    out.summary(summary);
    return exit_for(summary);
}

int run_probe(const RunConfig& cfg, const std::string& id, const std::string& points_text,
              const std::map<std::string, std::string>& flags) {
    std::vector<std::uint64_t> points;
    for (auto v : parse_int_list(points_text)) {
        if (v <= 0) throw std::invalid_argument("probe points must be positive");
        points.push_back(static_cast<std::uint64_t>(v));
    }
    Params params(flags.begin(), flags.end());
    PrimeTable table(cfg.sieve_limit);
    CheckContext ctx{table, cfg.precision_bits, std::max(cfg.precision_bits, kMaxPrecision)};
    auto s = probe(id, params, points, ctx);
    switch (format_from_string(cfg.format)) {
        case Format::Text: std::cout << probe_text(s); break;
        case Format::Csv: std::cout << probe_csv(s); break;
        case Format::Json: std::cout << probe_json(s) << '\n'; break;
    }
    return kOk;
}

int list_checks(const RunConfig& cfg) {
    if (cfg.format == "json") {
        json checks = json::array(), probes = json::array();
        for (const auto& c : registry()) {
            json params = json::array();
            for (const auto& p : c.params) params.push_back(p.name);
            checks.push_back({{"id", c.id}, {"params", params}, {"window", c.window}, {"exact", c.exact},
                              {"summary", c.summary}});
        }
        for (const auto& p : probe_registry()) {
            json defaults = json::object();
            for (const auto& [k, v] : p.defaults) defaults[k] = v;
            probes.push_back({{"id", p.id}, {"defaults", defaults}, {"summary", p.summary}});
        }
        std::cout << json{{"checks", checks}, {"probes", probes}}.dump(2) << '\n';
        return kOk;
    }
    for (const auto& c : registry()) {
        std::string params;
        for (const auto& p : c.params) params += " --" + p.name;
        std::cout << c.id << params << "\n    " << c.summary << "\n    window: " << c.window
                  << (c.exact ? " (exact)" : "") << '\n';
    }
    std::cout << "probes:\n";
    for (const auto& p : probe_registry()) {
        std::string params;
        for (const auto& [k, v] : p.defaults) params += " --" + k + " " + v;
        std::cout << p.id << " --points" << params << "\n    " << p.summary << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and certified computations on least common multiples of integer sequences"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--precision", cfg.precision_bits, "Starting interval precision in bits")
        ->envname("LCM_PRECISION_BITS")
        ->check(CLI::Range(32, 1 << 16));
    app.add_option("--sieve-limit", cfg.sieve_limit, "Prime sieve limit")
        ->envname("LCM_SIEVE_LIMIT")
        ->check(CLI::Range(std::uint64_t{100}, std::uint64_t{2'000'000'000}));
    app.add_option("--workers", cfg.workers, "Worker threads for scans")->check(CLI::Range(1u, 1024u));
    app.add_option("--seed", cfg.seed, "Seed for --sample");
    app.add_flag("--timing", cfg.timing, "Report elapsed time per check");

    auto* compute_cmd = app.add_subcommand("compute", "Print exact objects: lcm, u-decomp, row, bezout, divisor, M");
    std::vector<std::string> compute_args;
    compute_cmd->add_option("args", compute_args, "Object and its arguments")->required();

    // One range flag per parameter name used anywhere in the catalog.
    auto* verify_cmd = app.add_subcommand("verify", "Run a catalog check over a parameter grid");
    std::string check_id;
    verify_cmd->add_option("id", check_id, "Check id (see list-checks)")->required();
    std::map<std::string, std::string> verify_flags;
    std::set<std::string> names;
    for (const auto& c : registry())
        for (const auto& p : c.params) names.insert(p.name);
    std::map<std::string, std::string> verify_values;
    for (const auto& name : names)
        verify_cmd->add_option("--" + name, verify_values[name], "Values such as 1..100 or 1,2,5; specs use ';'");
    bool fail_fast = false;
    std::size_t sample = 0;
    verify_cmd->add_flag("--fail-fast", fail_fast, "Stop at the first FAILS");
    verify_cmd->add_option("--sample", sample, "Check a seeded random subset of this many grid points");

    auto* probe_cmd = app.add_subcommand("probe", "Emit a convergence series");
    std::string probe_id, points_text;
    probe_cmd->add_option("id", probe_id, "Probe id (see list-checks)")->required();
    probe_cmd->add_option("--points", points_text, "Points such as 100,1000 or 10..20")->required();
    std::set<std::string> probe_names;
    for (const auto& p : probe_registry())
        for (const auto& [k, v] : p.defaults) probe_names.insert(k);
    std::map<std::string, std::string> probe_values;
    for (const auto& name : probe_names) probe_cmd->add_option("--" + name, probe_values[name], "Probe parameter");

    auto* list_cmd = app.add_subcommand("list-checks", "List check and probe ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute_cmd) return compute(cfg, compute_args);
        if (*verify_cmd) {
            for (const auto& name : names)
                if (verify_cmd->count("--" + name)) verify_flags[name] = verify_values[name];
            return verify(cfg, check_id, verify_flags, fail_fast, sample);
        }
        if (*probe_cmd) {
            std::map<std::string, std::string> flags;
            for (const auto& name : probe_names)
                if (probe_cmd->count("--" + name)) flags[name] = probe_values[name];
            return run_probe(cfg, probe_id, points_text, flags);
        }
        if (*list_cmd) return list_checks(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::range_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    }
    return kUsage;
}
