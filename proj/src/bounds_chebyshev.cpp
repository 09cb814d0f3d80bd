#include "catalog_detail.hpp"
#include "lcm/identities.hpp"

namespace lcmkit {

Interval chebyshev_A(int prec) {
    auto l = [prec](long v) { return log(Interval::from_long(v, prec)); };
    auto q = [prec](long a, long b) { return Interval::from_q(Rational(a, b), prec); };
    return q(1, 2) * l(2) + q(1, 3) * l(3) + q(1, 5) * l(5) - q(1, 30) * l(30);
}

namespace detail {

namespace {

// The prime p when m = p^k (k >= 1), else 0.
std::uint64_t prime_power_base(const PrimeTable& t, std::uint64_t m) {
    if (m < 2) return 0;
    std::uint64_t p = t.smallest_factor(m);
    while (m % p == 0) m /= p;
    return m == 1 ? p : 0;
}

void require_in_table(const PrimeTable& t, std::uint64_t x) {
    if (x > t.limit())
        throw std::range_error("x = " + std::to_string(x) + " exceeds the sieve limit " + std::to_string(t.limit()));
}

struct ChebBounds {
    int prec;
    Interval A;
    Interval log6;
    explicit ChebBounds(int p) : prec(p), A(chebyshev_A(p)), log6(log(Interval::from_long(6, p))) {}

    Interval q(long a, long b) const { return Interval::from_q(Rational(a, b), prec); }
    Interval x_(std::int64_t x) const { return Interval::from_long(static_cast<long>(x), prec); }

    // A x - (5/2) log x - 1
    Interval psi_lower(std::int64_t x) const {
        Interval lx = log(x_(x));
        return A * x_(x) - q(5, 2) * lx - q(1, 1);
    }
    // (6/5) A x + 5/(4 log 6) log^2 x + (5/4) log x + 1
    Interval psi_upper(std::int64_t x) const {
        Interval lx = log(x_(x));
        return q(6, 5) * A * x_(x) + q(5, 4) * lx * lx / log6 + q(5, 4) * lx + q(1, 1);
    }
    // A x - (12/5) x^(1/2) - 5/(8 log 6) log^2 x - (15/4) log x - 3
    Interval theta_lower(std::int64_t x) const {
        Interval lx = log(x_(x));
        return A * x_(x) - q(12, 5) * sqrt(x_(x)) - q(5, 8) * lx * lx / log6 - q(15, 4) * lx - q(3, 1);
    }
};

std::string need_at_least(const Params& p, const char* name, std::int64_t lo) {
    if (int_param(p, name) < lo) return std::string("needs ") + name + " >= " + std::to_string(lo);
    return {};
}

Interval psi_direct(const PrimeTable& t, std::uint64_t x, int prec) {
    return chebyshev(t, ChebyshevKind::Psi, x, prec);
}

// Walks m = from+1 .. to and adds log p at every prime power (psi) or prime (theta).
void advance(const PrimeTable& t, LogCache& cache, Interval& acc, std::uint64_t from, std::uint64_t to, bool psi) {
    for (std::uint64_t m = from + 1; m <= to; ++m) {
        if (psi) {
            std::uint64_t p = prime_power_base(t, m);
            if (p) acc += cache.log_of(p);
        } else if (m >= 2 && t.smallest_factor(m) == m) {
            acc += cache.log_of(m);
        }
    }
}

BigInt big_pow(unsigned long base, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

// lcm(1..n) against base^n, exact. upper: lcm <= base^n, otherwise lcm >= base^n.
BoundReport lcm_vs_power(const char* id, std::int64_t n, const BigInt& lcm, const BigInt& pw, unsigned long base,
                         bool upper) {
    bool ok = upper ? lcm <= pw : lcm >= pw;
    std::string rel = upper ? " <= " : " >= ";
    return exact_report(id, int_params({{"n", n}}), ok,
                        brief(lcm) + rel + std::to_string(base) + "^" + std::to_string(n));
}

CheckSpec lcm_power_check(const char* id, const char* summary, unsigned long base, bool upper, std::int64_t n_min) {
    CheckSpec c;
    c.id = id;
    c.summary = summary;
    c.params = {int_spec("n", "upper end of 1..n")};
    c.window = "n >= " + std::to_string(n_min);
    c.exact = true;
    c.skip_reason = [n_min](const Params& p) { return need_at_least(p, "n", n_min); };
    c.run = [=](const Params& p, const CheckContext&) {
        auto n = int_param(p, "n");
        return lcm_vs_power(id, n, lcm_upto(static_cast<std::uint64_t>(n)), big_pow(base, static_cast<unsigned long>(n)),
                            base, upper);
    };
    c.sweep = [=](const Params&, const std::vector<std::int64_t>& ns, const CheckContext& ctx, const ReportSink& sink) {
        BigInt L = 1, pw = 1;
        std::int64_t at = 0;
        for (auto n : ns) {
            require_in_table(ctx.primes, static_cast<std::uint64_t>(n));
            for (; at < n; ++at) {
                std::uint64_t p = prime_power_base(ctx.primes, static_cast<std::uint64_t>(at + 1));
                if (p) L *= static_cast<unsigned long>(p);
                pw *= base;
            }
            if (!sink(lcm_vs_power(id, n, L, pw, base, upper))) return false;
        }
        return true;
    };
    return c;
}

}  // namespace

void add_chebyshev_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c;
        c.id = "chebyshev_psi";
        c.summary = "A x - (5/2) log x - 1 <= psi(x) <= (6/5) A x + 5/(4 log 6) log^2 x + (5/4) log x + 1";
        c.params = {int_spec("x", "integer argument")};
        c.window = "x >= 1";
        c.skip_reason = [](const Params& p) { return need_at_least(p, "x", 1); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto x = int_param(p, "x");
            const PrimeTable& t = ctx.primes;
            return sandwich_report("chebyshev_psi", p, LogExpr::custom([x](int prec) { return ChebBounds(prec).psi_lower(x); }),
                                   LogExpr::custom([&t, x](int prec) { return psi_direct(t, static_cast<std::uint64_t>(x), prec); }),
                                   LogExpr::custom([x](int prec) { return ChebBounds(prec).psi_upper(x); }), ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& xs, const CheckContext& ctx, const ReportSink& sink) {
            ChebBounds b(ctx.precision);
            LogCache cache(ctx.precision);
            Interval psi(ctx.precision);
            std::uint64_t at = 0;
            for (auto x : xs) {
                require_in_table(ctx.primes, static_cast<std::uint64_t>(x));
                advance(ctx.primes, cache, psi, at, static_cast<std::uint64_t>(x), true);
                at = static_cast<std::uint64_t>(x);
                if (!sink(sandwich_enclosure("chebyshev_psi", with_last(pre, "x", x), b.psi_lower(x), psi, b.psi_upper(x))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "chebyshev_theta";
        c.summary = "A x - (12/5) x^(1/2) - 5/(8 log 6) log^2 x - (15/4) log x - 3 <= theta(x) <= psi upper bound";
        c.params = {int_spec("x", "integer argument")};
        c.window = "x >= 1";
        c.skip_reason = [](const Params& p) { return need_at_least(p, "x", 1); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto x = int_param(p, "x");
            const PrimeTable& t = ctx.primes;
            return sandwich_report(
                "chebyshev_theta", p, LogExpr::custom([x](int prec) { return ChebBounds(prec).theta_lower(x); }),
                LogExpr::custom([&t, x](int prec) { return chebyshev(t, ChebyshevKind::Theta, static_cast<std::uint64_t>(x), prec); }),
                LogExpr::custom([x](int prec) { return ChebBounds(prec).psi_upper(x); }), ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& xs, const CheckContext& ctx, const ReportSink& sink) {
            ChebBounds b(ctx.precision);
            LogCache cache(ctx.precision);
            Interval theta(ctx.precision);
            std::uint64_t at = 0;
            for (auto x : xs) {
                require_in_table(ctx.primes, static_cast<std::uint64_t>(x));
                advance(ctx.primes, cache, theta, at, static_cast<std::uint64_t>(x), false);
                at = static_cast<std::uint64_t>(x);
                if (!sink(sandwich_enclosure("chebyshev_theta", with_last(pre, "x", x), b.theta_lower(x), theta,
                                             b.psi_upper(x))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "chebyshev_lcm";
        c.summary = "e^-1 n^(-5/2) c1^n <= lcm(1..n) <= e n^(5/4) e^(5/(4 log 6) log^2 n) c2^n, c1 = e^A, c2 = e^(6A/5)";
        c.params = {int_spec("n", "upper end of 1..n")};
        c.window = "n >= 1";
        c.skip_reason = [](const Params& p) { return need_at_least(p, "n", 1); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = int_param(p, "n");
            LcmAccumulator acc(ctx.primes, ctx.max_precision);
            for (std::int64_t k = 2; k <= n; ++k) acc.add(static_cast<std::uint64_t>(k));
            FactoredInteger L = acc.value();
            return sandwich_report("chebyshev_lcm", p, LogExpr::custom([n](int prec) { return ChebBounds(prec).psi_lower(n); }),
                                   LogExpr::log_of(L), LogExpr::custom([n](int prec) { return ChebBounds(prec).psi_upper(n); }),
                                   ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx, const ReportSink& sink) {
            ChebBounds b(ctx.precision);
            LcmAccumulator acc(ctx.primes, ctx.precision);
            std::int64_t at = 1;
            for (auto n : ns) {
                require_in_table(ctx.primes, static_cast<std::uint64_t>(n));
                for (; at < n; ++at) acc.add(static_cast<std::uint64_t>(at + 1));
                if (!sink(sandwich_enclosure("chebyshev_lcm", with_last(pre, "n", n), b.psi_lower(n), acc.log(), b.psi_upper(n))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "psi_pi_sandwich";
        c.summary = "psi(x)/log x <= pi(x) <= 2 psi(x)/log x, compared in logs";
        c.params = {int_spec("x", "integer argument")};
        c.window = "x >= 2";
        c.skip_reason = [](const Params& p) { return need_at_least(p, "x", 2); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto x = static_cast<std::uint64_t>(int_param(p, "x"));
            const PrimeTable& t = ctx.primes;
            require_in_table(t, x);
            long pix = static_cast<long>(t.pi(x));
            auto side = [&t, x](long factor) {
                return LogExpr::custom([&t, x, factor](int prec) {
                    Interval lx = log(Interval::from_long(static_cast<long>(x), prec));
                    return log(Interval::from_long(factor, prec) * psi_direct(t, x, prec)) - log(lx);
                });
            };
            return sandwich_report("psi_pi_sandwich", p, side(1), LogExpr::log_of(BigInt(pix)), side(2), ctx);
        };
        out.push_back(std::move(c));
    }
    out.push_back(lcm_power_check("hanson_3n", "lcm(1..n) <= 3^n", 3, true, 1));
    out.push_back(lcm_power_check("nair_2n", "lcm(1..n) >= 2^n", 2, false, 7));
    out.push_back(lcm_power_check("nair_4n", "lcm(1..n) <= 4^n", 4, true, 1));
    {
        CheckSpec c;
        c.id = "hanson_pi";
        c.summary = "pi(x) <= 1.25506 x / log x";
        c.params = {int_spec("x", "integer argument")};
        c.window = "x >= 2";
        c.skip_reason = [](const Params& p) { return need_at_least(p, "x", 2); };
        auto rhs = [](std::int64_t x, int prec) {
            Interval lx = log(Interval::from_long(static_cast<long>(x), prec));
            return log(Interval::from_q(Rational(125506, 100000), prec)) + lx - log(lx);
        };
        c.run = [rhs](const Params& p, const CheckContext& ctx) {
            auto x = int_param(p, "x");
            require_in_table(ctx.primes, static_cast<std::uint64_t>(x));
            long pix = static_cast<long>(ctx.primes.pi(static_cast<std::uint64_t>(x)));
            return log_report("hanson_pi", p, LogExpr::log_of(BigInt(pix)),
                              LogExpr::custom([rhs, x](int prec) { return rhs(x, prec); }), Relation::LessEq, ctx);
        };
        c.sweep = [rhs](const Params& pre, const std::vector<std::int64_t>& xs, const CheckContext& ctx,
                        const ReportSink& sink) {
            LogCache cache(ctx.precision);
            for (auto x : xs) {
                require_in_table(ctx.primes, static_cast<std::uint64_t>(x));
                auto pix = ctx.primes.pi(static_cast<std::uint64_t>(x));
                if (!sink(enclosure_report("hanson_pi", with_last(pre, "x", x), cache.log_of(pix), rhs(x, ctx.precision),
                                           Relation::LessEq)))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "hanson_multinomial";
        c.summary = "C_n = n! / prod floor(n/b_i)! over Sylvester b is an integer, a multiple of lcm(1..n), and <= 3^n";
        c.params = {int_spec("n", "argument")};
        c.window = "n >= 1";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return need_at_least(p, "n", 1); };
        c.run = [](const Params& p, const CheckContext&) {
            auto h = hanson_C(static_cast<std::uint64_t>(int_param(p, "n")));
            std::string note = std::string("integral=") + (h.integral ? "yes" : "no") +
                               " lcm_divides=" + (h.lcm_divides ? "yes" : "no") + " at_most_3n=" + (h.at_most_3n ? "yes" : "no");
            return exact_report("hanson_multinomial", p, h.integral && h.lcm_divides && h.at_most_3n, note);
        };
        out.push_back(std::move(c));
    }
}

}  // namespace detail
}  // namespace lcmkit
