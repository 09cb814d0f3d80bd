#include <numeric>

#include "catalog_detail.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {
namespace detail {

namespace {

std::string midpoint_text(const Interval& x) {
    mpfr_t m;
    mpfr_init2(m, x.precision() + 1);
    mpfr_add(m, x.lo(), x.hi(), MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    char buf[64];
    mpfr_snprintf(buf, sizeof buf, "%.20Rg", m);
    mpfr_clear(m);
    return buf;
}

ProbePoint make_point(std::uint64_t n, const Interval& ratio) {
    return {n, ratio.lo_d(), ratio.hi_d(), midpoint_text(ratio)};
}

ProbeSeries series(std::string id, Params params, const Interval& target, std::string target_text) {
    ProbeSeries s;
    s.probe_id = std::move(id);
    s.params = std::move(params);
    s.target = target.mid_d();
    s.target_text = std::move(target_text) + " = " + midpoint_text(target);
    return s;
}

void require_sieve(const PrimeTable& t, std::uint64_t x) {
    if (x > t.limit())
        throw std::range_error("point " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(t.limit()));
}

Interval ln_u(std::uint64_t v, int prec) { return log(Interval::from_long(static_cast<long>(v), prec)); }

// psi(n) / n.
ProbeSeries pnt(const Params& p, const std::vector<std::uint64_t>& pts, const CheckContext& ctx) {
    int prec = ctx.precision;
    require_sieve(ctx.primes, pts.back());
    // Prime powers up to the last point, in increasing order, each tagged with its prime.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> powers;
    for (auto q : ctx.primes.primes()) {
        if (q > pts.back()) break;
        for (std::uint64_t pk = q; pk <= pts.back(); pk *= q) {
            powers.emplace_back(pk, q);
            if (pk > pts.back() / q) break;
        }
    }
    std::sort(powers.begin(), powers.end());
    LogCache cache(prec);
    Interval psi(prec);
    std::size_t i = 0;
    auto s = series("pnt", p, ival(1, prec), "1");
    for (auto n : pts) {
        for (; i < powers.size() && powers[i].first <= n; ++i) psi += cache.log_of(powers[i].second);
        s.points.push_back(make_point(n, psi / Interval::from_long(static_cast<long>(n), prec)));
    }
    return s;
}

// log lcm(a + b, ..., a + n b) / n against (b / phi(b)) sum_{m <= b, gcd(m, b) = 1} 1/m.
ProbeSeries bateman(const Params& p, const std::vector<std::uint64_t>& pts, const CheckContext& ctx) {
    auto a = int_param(p, "a"), b = int_param(p, "b");
    if (a < 0 || b < 1 || std::gcd(a, b) != 1) throw std::invalid_argument("bateman needs a >= 0, b >= 1, gcd(a, b) = 1");
    int prec = ctx.precision;
    Rational target = M_of(static_cast<std::uint64_t>(b)) * b;
    auto s = series("bateman", p, ival(target, prec), "(b/phi(b)) sum 1/m = " + to_string(target));
    LcmAccumulator acc(ctx.primes, prec);
    std::uint64_t at = 0;
    for (auto n : pts) {
        for (; at < n; ++at) acc.add(static_cast<std::uint64_t>(a) + (at + 1) * static_cast<std::uint64_t>(b));
        s.points.push_back(make_point(n, acc.log() / Interval::from_long(static_cast<long>(n), prec)));
    }
    return s;
}

// log lcm(F_1..F_n) / (n^2 log phi), with log lcm = sum_{e <= n} log F_e * Mertens(n / e).
ProbeSeries matiyasevich(const Params& p, const std::vector<std::uint64_t>& pts, const CheckContext& ctx) {
    int prec = ctx.precision;
    std::uint64_t N = pts.back();
    std::vector<std::int64_t> mertens(N + 1, 0);
    for (std::uint64_t k = 1; k <= N; ++k) mertens[k] = mertens[k - 1] + moebius(k);
    auto fib = generate(Lucas{1, -1}, N);
    std::vector<Interval> logF;
    logF.reserve(N);
    for (const auto& f : fib) logF.push_back(log(Interval::from_z(f, prec)));
    Interval log_phi = log((ival(1, prec) + sqrt(ival(5, prec))) / ival(2, prec));
    Interval target = ival(3, prec) / (Interval::pi(prec) * Interval::pi(prec));
    auto s = series("matiyasevich", p, target, "3/pi^2");
    for (auto n : pts) {
        Interval sum(prec);
        for (std::uint64_t e = 1; e <= n; ++e) {
            auto m = mertens[n / e];
            if (m != 0) sum += logF[e - 1] * ival(static_cast<long>(m), prec);
        }
        Interval nn = Interval::from_long(static_cast<long>(n), prec);
        s.points.push_back(make_point(n, sum / (nn * nn * log_phi)));
    }
    return s;
}

// log lcm(f(1..n)) / (n log n); the limit is 1 for irreducible quadratics.
ProbeSeries cilleruelo_leading(const Params& p, const std::vector<std::uint64_t>& pts, const CheckContext& ctx) {
    auto spec = parse_spec(text_param(p, "f"));
    if (!std::holds_alternative<Polynomial>(spec)) throw std::invalid_argument("cilleruelo_leading needs f = poly:...");
    int prec = ctx.precision;
    auto values = generate(spec, pts.back());
    auto s = series("cilleruelo_leading", p, ival(1, prec), "1");
    LcmAccumulator acc(ctx.primes, prec);
    std::uint64_t at = 0;
    for (auto n : pts) {
        for (; at < n; ++at) {
            const BigInt& v = values[at];
            if (v <= 0 || !v.fits_ulong_p()) throw std::range_error("f(" + std::to_string(at + 1) + ") out of range");
            acc.add(v.get_ui());
        }
        if (n < 2) throw std::invalid_argument("cilleruelo_leading needs points >= 2");
        s.points.push_back(make_point(n, acc.log() / (Interval::from_long(static_cast<long>(n), prec) * ln_u(n, prec))));
    }
    return s;
}

// r M(r) / log r.
ProbeSeries M_trend(const Params& p, const std::vector<std::uint64_t>& pts, const CheckContext& ctx) {
    int prec = ctx.precision;
    auto s = series("M_trend", p, ival(1, prec), "1");
    for (auto r : pts) {
        if (r < 2) throw std::invalid_argument("M_trend needs points >= 2");
        Interval sum(prec);
        for (std::uint64_t l = 1; l <= r; ++l)
            if (std::gcd(l, r) == 1) sum += ival(Rational(1, static_cast<unsigned long>(l)), prec);
        Interval rM = sum * Interval::from_long(static_cast<long>(r), prec) /
                      Interval::from_long(static_cast<long>(euler_phi(r)), prec);
        s.points.push_back(make_point(r, rM / ln_u(r, prec)));
    }
    return s;
}

}  // namespace

void add_probes(std::vector<ProbeSpec>& out) {
    out.push_back({"pnt", "psi(n)/n, target 1", {}, pnt});
    out.push_back({"bateman", "log lcm(a+b, ..., a+nb) / n, target (b/phi(b)) sum_{gcd(m,b)=1} 1/m",
                   {{"a", "1"}, {"b", "3"}}, bateman});
    out.push_back({"matiyasevich", "log lcm(F_1..F_n) / (n^2 log phi), target 3/pi^2", {}, matiyasevich});
    out.push_back({"cilleruelo_leading", "log lcm(f(1..n)) / (n log n), target 1 for irreducible quadratic f",
                   {{"f", "poly:1,0,1"}}, cilleruelo_leading});
    out.push_back({"M_trend", "r M(r) / log r, target 1 (no rate)", {}, M_trend});
}

}  // namespace detail
}  // namespace lcmkit
