#include <map>

#include "catalog_detail.hpp"
#include "lcm/quadratic_lcm.hpp"

namespace lcmkit {

namespace {

void require_sieve(const PrimeTable& t, std::uint64_t x) {
    if (x > t.limit())
        throw std::range_error("x = " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(t.limit()));
}

}  // namespace

Interval ch5_c1(const PrimeTable& t, int prec) {
    require_sieve(t, 1000);
    Interval ten = Interval::from_long(10, prec), log10 = log(ten);
    Interval integral(prec);
    Rational thousandth(1, 1000);
    for (auto p : t.primes()) {
        if (p > 1000) break;
        if (p % 4 != 3) continue;
        integral += log(Interval::from_long(p, prec)) * Interval::from_q(Rational(1, p) - thousandth, prec);
    }
    Interval two_fifths = Interval::from_q(Rational(2, 5), prec);
    Interval r = Interval::from_q(Rational(1, 2), prec);
    r -= two_fifths / (Interval::from_long(3, prec) * log10);
    r += integral;
    r -= Interval::from_q(Rational(3, 2), prec) * log10;
    r += two_fifths * log(Interval::from_long(3, prec) * log10);
    return r;
}

namespace detail {

namespace {

Interval log_u64(std::uint64_t v, int prec) { return log(Interval::from_long(static_cast<long>(v), prec)); }

// n (log alpha1 + (1/2) log n - 0.4 log log n).
Interval n2plus1_lower(std::int64_t n, int prec) {
    Interval ln = log_u64(static_cast<std::uint64_t>(n), prec);
    Interval per = log(ch5::alpha1.enclose(prec)) + ival(Rational(1, 2), prec) * ln -
                   ival(Rational(2, 5), prec) * log(ln);
    return ival(static_cast<long>(n), prec) * per;
}

// log alpha2 + n (log alpha3 + log n + 0.8 log log n).
Interval n2plus1_upper(std::int64_t n, int prec) {
    Interval ln = log_u64(static_cast<std::uint64_t>(n), prec);
    Interval per = log(ch5::alpha3.enclose(prec)) + ln + ival(Rational(4, 5), prec) * log(ln);
    return log(ch5::alpha2.enclose(prec)) + ival(static_cast<long>(n), prec) * per;
}

// n (log beta + (1/2) log n + sign 0.4 log log n).
Interval factorial_bound(const DecimalConstant& beta, int sign, std::int64_t n, int prec) {
    Interval ln = log_u64(static_cast<std::uint64_t>(n), prec);
    Interval per = log(beta.enclose(prec)) + ival(Rational(1, 2), prec) * ln +
                   ival(Rational(2 * sign, 5), prec) * log(ln);
    return ival(static_cast<long>(n), prec) * per;
}

// prod_{p = 3 mod 4, p <= n} p^{v_p(n!)}.
FactoredInteger factorial_3mod4(const PrimeTable& t, std::uint64_t n) {
    FactoredInteger f;
    for (auto p : t.primes()) {
        if (p > n) break;
        if (p % 4 == 3) f.mul_prime_power(p, static_cast<std::uint32_t>(factorial_valuation(p, n)));
    }
    return f;
}

struct PrimeData {
    std::int64_t vQ = 0, vL = 0, vfact = 0;
};

// Valuations of Q_n = prod (k^2 + 1), L_n = lcm(k^2 + 1) and n! at every prime involved.
std::map<std::uint64_t, PrimeData> n2plus1_valuations(const PrimeTable& t, std::uint64_t n) {
    std::map<std::uint64_t, PrimeData> data;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> f;
    for (std::uint64_t k = 1; k <= n; ++k) {
        f.clear();
        t.factor_into(k * k + 1, f);
        for (auto [p, e] : f) {
            auto& d = data[p];
            d.vQ += e;
            d.vL = std::max<std::int64_t>(d.vL, e);
        }
    }
    for (auto p : t.primes()) {
        if (p > n) break;
        data[p].vfact = static_cast<std::int64_t>(factorial_valuation(p, n));
    }
    return data;
}

// Shared exponent of Q_n / n!^2 prod_{p = 3 mod 4, p <= n} p^{2 v_p(n!)} at p.
std::int64_t core_valuation(std::uint64_t p, const PrimeData& d) {
    std::int64_t v = d.vQ - 2 * d.vfact;
    if (p % 4 == 3) v += 2 * d.vfact;
    return v;
}

BoundReport bennett_report(const Params& p, const Interval& theta, std::uint64_t pi_count, std::uint64_t x,
                           int prec) {
    Interval X = Interval::from_long(static_cast<long>(x), prec);
    Interval lx = log(X);
    Interval half = X * ival(Rational(1, 2), prec);
    Interval slack = ival(Rational(2, 5), prec) * X / lx;
    auto r = sandwich_enclosure("bennett", p, half - slack, theta, half + slack);
    // pi(x; 4, 1) <= x / (2 log x) (1 + 5 / (2 log x)).
    Interval two_lx = ival(2, prec) * lx;
    Interval pi_bound = X / two_lx * (ival(1, prec) + ival(5, prec) / two_lx);
    auto v = compare_enclosures(Interval::from_long(static_cast<long>(pi_count), prec), pi_bound, Relation::LessEq);
    r.verdict = combine(r.verdict, v.verdict);
    if (v.verdict != Verdict::Holds) r.note += "; pi(x;4,1) side " + std::string(to_string(v.verdict));
    return r;
}

std::string n_at_least(const Params& p, std::int64_t lo) {
    return int_param(p, "n") < lo ? "needs n >= " + std::to_string(lo) : std::string();
}

}  // namespace

void add_n2plus1_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c;
        c.id = "n2plus1_sandwich";
        c.summary = "(alpha1 sqrt(n) (log n)^-0.4)^n <= lcm(1^2+1, ..., n^2+1) <= alpha2 (alpha3 n (log n)^0.8)^n";
        c.params = {int_spec("n", "last index")};
        c.window = "n >= 2";
        c.skip_reason = [](const Params& p) { return n_at_least(p, 2); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = int_param(p, "n");
            return sandwich_report("n2plus1_sandwich", p,
                                   LogExpr::custom([n](int prec) { return n2plus1_lower(n, prec); }),
                                   LogExpr::log_of(L_quadratic(ctx.primes, 1, 1, n)),
                                   LogExpr::custom([n](int prec) { return n2plus1_upper(n, prec); }), ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                     const ReportSink& sink) {
            LcmAccumulator acc(ctx.primes, ctx.precision);
            std::int64_t at = 0;
            for (auto n : ns) {
                for (; at < n; ++at) acc.add(static_cast<std::uint64_t>((at + 1) * (at + 1) + 1));
                if (!sink(sandwich_enclosure("n2plus1_sandwich", with_last(pre, "n", n),
                                             n2plus1_lower(n, ctx.precision), acc.log(),
                                             n2plus1_upper(n, ctx.precision))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "n2plus1_square_divisor";
        c.summary = "L_n^2 is a multiple of 2^(floor(n/2)+1) Q_n / n!^2 prod_{p = 3 mod 4, p <= n} p^(2 v_p(n!))";
        c.params = {int_spec("n", "last index")};
        c.window = "n >= 1";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return n_at_least(p, 1); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = static_cast<std::uint64_t>(int_param(p, "n"));
            for (auto& [q, d] : n2plus1_valuations(ctx.primes, n)) {
                std::int64_t vD = core_valuation(q, d) + (q == 2 ? static_cast<std::int64_t>(n / 2 + 1) : 0);
                if (2 * d.vL < vD)
                    return exact_report("n2plus1_square_divisor", p, false, "fails at p=" + std::to_string(q));
            }
            return exact_report("n2plus1_square_divisor", p, true);
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "n2plus1_large_prime_divisor";
        c.summary = "prod_{p > n} p^(v_p(L_n)) divides 2^(2 v_2(n!) - floor((n-1)/2) - 1) Q_n / n!^2 "
                    "prod_{p = 3 mod 4, p <= n} p^(2 v_p(n!))";
        c.params = {int_spec("n", "last index")};
        c.window = "n >= 2";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return n_at_least(p, 2); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = static_cast<std::uint64_t>(int_param(p, "n"));
            for (auto& [q, d] : n2plus1_valuations(ctx.primes, n)) {
                std::int64_t vM = core_valuation(q, d);
                if (q == 2) vM += 2 * d.vfact - static_cast<std::int64_t>((n - 1) / 2) - 1;
                std::int64_t vG = q > n ? d.vL : 0;
                if (vM < vG)
                    return exact_report("n2plus1_large_prime_divisor", p, false, "fails at p=" + std::to_string(q));
            }
            return exact_report("n2plus1_large_prime_divisor", p, true);
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "factorial_3mod4_sandwich";
        c.summary = "(beta1 sqrt(n) (log n)^-0.4)^n <= prod_{p = 3 mod 4, p <= n} p^(v_p(n!)) <= "
                    "(beta2 sqrt(n) (log n)^0.4)^n";
        c.params = {int_spec("n", "factorial argument")};
        c.window = "n >= 1000";
        c.skip_reason = [](const Params& p) { return n_at_least(p, 1000); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = int_param(p, "n");
            require_sieve(ctx.primes, static_cast<std::uint64_t>(n));
            return sandwich_report(
                "factorial_3mod4_sandwich", p,
                LogExpr::custom([n](int prec) { return factorial_bound(ch5::beta1, -1, n, prec); }),
                LogExpr::log_of(factorial_3mod4(ctx.primes, static_cast<std::uint64_t>(n))),
                LogExpr::custom([n](int prec) { return factorial_bound(ch5::beta2, 1, n, prec); }), ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                     const ReportSink& sink) {
            require_sieve(ctx.primes, static_cast<std::uint64_t>(ns.back()));
            LogCache cache(ctx.precision);
            for (auto n : ns) {
                Interval value = cache.log_of(factorial_3mod4(ctx.primes, static_cast<std::uint64_t>(n)));
                if (!sink(sandwich_enclosure("factorial_3mod4_sandwich", with_last(pre, "n", n),
                                             factorial_bound(ch5::beta1, -1, n, ctx.precision), value,
                                             factorial_bound(ch5::beta2, 1, n, ctx.precision))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "bennett";
        c.summary = "|theta(x;4,3) - x/2| <= 0.4 x/log x and pi(x;4,1) <= x/(2 log x) (1 + 5/(2 log x))";
        c.params = {int_spec("x", "integer point")};
        c.window = "1000 <= x <= sieve limit";
        c.skip_reason = [](const Params& p) {
            return int_param(p, "x") < 1000 ? std::string("needs x >= 1000") : std::string();
        };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto x = static_cast<std::uint64_t>(int_param(p, "x"));
            require_sieve(ctx.primes, x);
            BoundReport r;
            for (int prec = ctx.precision; prec <= ctx.max_precision; prec *= 2) {
                r = bennett_report(p, chebyshev_progression(ctx.primes, ProgressionKind::Theta, x, 4, 3, prec),
                                   prime_count_progression(ctx.primes, x, 4, 1), x, prec);
                if (r.verdict != Verdict::Inconclusive) break;
            }
            return r;
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& xs, const CheckContext& ctx,
                     const ReportSink& sink) {
            require_sieve(ctx.primes, static_cast<std::uint64_t>(xs.back()));
            const auto& primes = ctx.primes.primes();
            Interval theta(ctx.precision);
            std::uint64_t pi_count = 0;
            std::size_t i = 0;
            for (auto xv : xs) {
                auto x = static_cast<std::uint64_t>(xv);
                for (; i < primes.size() && primes[i] <= x; ++i) {
                    if (primes[i] % 4 == 3) theta += log_u64(primes[i], ctx.precision);
                    if (primes[i] % 4 == 1) ++pi_count;
                }
                if (!sink(bennett_report(with_last(pre, "x", xv), theta, pi_count, x, ctx.precision))) return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
}

}  // namespace detail
}  // namespace lcmkit
