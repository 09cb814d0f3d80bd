#include <numeric>

#include "catalog_detail.hpp"
#include "lcm/identities.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {

Rational M_of(std::uint64_t r) {
    if (r == 0) throw std::invalid_argument("M_of: r >= 1");
    BigInt D = lcm_upto(r), sum = 0, t;
    for (std::uint64_t l = 1; l <= r; ++l) {
        if (std::gcd(l, r) != 1) continue;
        mpz_divexact_ui(t.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(l));
        sum += t;
    }
    Rational out(sum, D * static_cast<unsigned long>(euler_phi(r)));
    out.canonicalize();
    return out;
}

namespace detail {

namespace {

BigInt pow_ui(unsigned long b, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), b, e);
    return out;
}

BigInt lcm_ap(std::int64_t u0, std::int64_t r, std::int64_t n) {
    BigInt L = 1;
    for (std::int64_t k = 0; k <= n; ++k) {
        BigInt u = static_cast<long>(u0 + k * r);
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), u.get_mpz_t());
    }
    return L;
}

std::string ap_window(const Params& p, bool coprime) {
    auto u0 = int_param(p, "u0"), r = int_param(p, "r"), n = int_param(p, "n");
    if (u0 < 1 || r < 1) return "needs u0 >= 1 and r >= 1";
    if (n < 0) return "needs n >= 0";
    if (coprime && std::gcd(u0, r) != 1) return "needs gcd(u0, r) = 1";
    return {};
}

std::vector<ParamSpec> ap_params() {
    return {int_spec("u0", "first term"), int_spec("r", "common difference"), int_spec("n", "last index")};
}

std::string ab_window(const Params& p, bool prime_b) {
    auto a = int_param(p, "a"), b = int_param(p, "b"), n = int_param(p, "n");
    if (a < 1 || b < 2) return "needs a >= 1 and b >= 2";
    if (std::gcd(a, b) != 1) return "needs gcd(a, b) = 1";
    if (prime_b && (!is_prime_trial(static_cast<std::uint64_t>(b)) || a >= b)) return "needs b prime and a < b";
    if (n < b + 1) return "needs n >= b + 1";
    return {};
}

std::vector<ParamSpec> ab_params() {
    return {int_spec("a", "first term"), int_spec("b", "common difference"), int_spec("n", "last index")};
}

// log of (c1 b log b)^(n + floor(a/b)).
Interval ap_upper_rhs(std::int64_t a, std::int64_t b, std::int64_t n, int prec) {
    Interval lb = log(ival(static_cast<long>(b), prec));
    Interval base = log(ch4::c1.enclose(prec)) + lb + log(lb);
    return ival(static_cast<long>(n + a / b), prec) * base;
}

// log of (c2 b^(b/(b-1)))^n.
Interval ap_upper_prime_rhs(std::int64_t b, std::int64_t n, int prec) {
    Interval lb = log(ival(static_cast<long>(b), prec));
    return ival(static_cast<long>(n), prec) * (log(ch4::c2.enclose(prec)) + ival(Rational(b, b - 1), prec) * lb);
}

CheckSpec ap_upper_check(bool prime_b) {
    CheckSpec c;
    c.id = prime_b ? "ap_upper_prime" : "ap_upper";
    c.summary = prime_b ? "lcm(a, a+b, ..., a+nb) <= (c2 b^(b/(b-1)))^n, c2 = 12.30641"
                        : "lcm(a, a+b, ..., a+nb) <= (c1 b log b)^(n + floor(a/b)), c1 = 41.30142";
    c.params = ab_params();
    c.window = prime_b ? "b prime, 1 <= a < b, n >= b + 1" : "a >= 1, b >= 2, gcd(a, b) = 1, n >= b + 1";
    c.skip_reason = [prime_b](const Params& p) { return ab_window(p, prime_b); };
    auto rhs = [prime_b](std::int64_t a, std::int64_t b, std::int64_t n, int prec) {
        return prime_b ? ap_upper_prime_rhs(b, n, prec) : ap_upper_rhs(a, b, n, prec);
    };
    std::string id = c.id;
    c.run = [id, rhs](const Params& p, const CheckContext& ctx) {
        auto a = int_param(p, "a"), b = int_param(p, "b"), n = int_param(p, "n");
        LcmAccumulator acc(ctx.primes, ctx.precision);
        for (std::int64_t k = 0; k <= n; ++k) acc.add(static_cast<std::uint64_t>(a + k * b));
        return log_report(id, p, LogExpr::log_of(acc.value()),
                          LogExpr::custom([=](int prec) { return rhs(a, b, n, prec); }), Relation::LessEq, ctx);
    };
    c.sweep = [id, rhs](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                        const ReportSink& sink) {
        auto a = int_param(pre, "a"), b = int_param(pre, "b");
        LcmAccumulator acc(ctx.primes, ctx.precision);
        std::int64_t at = -1;
        for (auto n : ns) {
            for (; at < n; ++at) acc.add(static_cast<std::uint64_t>(a + (at + 1) * b));
            if (!sink(enclosure_report(id, with_last(pre, "n", n), acc.log(), rhs(a, b, n, ctx.precision),
                                       Relation::LessEq)))
                return false;
        }
        return true;
    };
    return c;
}

// Valuation bookkeeping for a(a+b)...(a+nb) and its lcm.
struct ApValuations {
    std::map<std::uint64_t, std::uint64_t> product;
    std::map<std::uint64_t, std::uint32_t> lcm;
};

ApValuations ap_valuations(const PrimeTable& t, std::int64_t a, std::int64_t b, std::int64_t n) {
    ApValuations out;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pe;
    for (std::int64_t k = 0; k <= n; ++k) {
        pe.clear();
        t.factor_into(static_cast<std::uint64_t>(a + k * b), pe);
        for (auto [p, e] : pe) {
            out.product[p] += e;
            auto& m = out.lcm[p];
            m = std::max(m, e);
        }
    }
    return out;
}

}  // namespace

void add_progression_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c;
        c.id = "ap_divisor";
        c.summary = "lcm(u_0..u_n) is a multiple of u_0...u_n/(n! g^n) and of every u_k...u_n/((n-k)! g^(n-k)), g = gcd(u_0, u_1)";
        c.params = ap_params();
        c.window = "u0 >= 1, r >= 1, n >= 0";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return ap_window(p, false); };
        c.run = [](const Params& p, const CheckContext&) {
            auto u0 = int_param(p, "u0"), r = int_param(p, "r"), n = int_param(p, "n");
            BigInt L = lcm_ap(u0, r, n);
            unsigned long g = std::gcd(static_cast<unsigned long>(u0), static_cast<unsigned long>(r));
            // k runs downward so the tail product and (n-k)! g^(n-k) grow by one factor per step.
            BigInt tail = 1, den = 1;
            std::int64_t bad = -1;
            for (std::int64_t k = n; k >= 0; --k) {
                tail *= static_cast<long>(u0 + k * r);
                if (k < n) den *= static_cast<unsigned long>(n - k) * g;
                BigInt scaled = L * den;
                if (!mpz_divisible_p(scaled.get_mpz_t(), tail.get_mpz_t())) bad = k;
            }
            std::string note = bad < 0 ? "lcm=" + brief(L) : "fails at k=" + std::to_string(bad);
            return exact_report("ap_divisor", p, bad < 0, note);
        };
        out.push_back(std::move(c));
    }
    for (bool hong : {false, true}) {
        CheckSpec c;
        c.id = hong ? "hong_ap" : "farhi_ap";
        c.summary = hong ? "lcm(u_0..u_n) >= u_0 (1+r)^n"
                         : "lcm(u_0..u_n) >= u_0 (1+r)^(n-1), and >= u_0 (1+r)^n when (r+1) | n";
        c.params = ap_params();
        c.window = "u0 >= 1, r >= 1, gcd(u0, r) = 1, n >= 0";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return ap_window(p, true); };
        std::string id = c.id;
        c.run = [id, hong](const Params& p, const CheckContext&) {
            auto u0 = int_param(p, "u0"), r = int_param(p, "r"), n = int_param(p, "n");
            BigInt L = lcm_ap(u0, r, n);
            auto base = static_cast<unsigned long>(r + 1);
            bool ok;
            std::string note = "lcm=" + brief(L);
            if (hong) {
                ok = L >= u0 * pow_ui(base, static_cast<unsigned long>(n));
            } else {
                // n = 0 makes the bound u0/(1+r).
                ok = n == 0 ? L * base >= u0 : L >= u0 * pow_ui(base, static_cast<unsigned long>(n - 1));
                if (n % (r + 1) == 0) {
                    ok = ok && L >= u0 * pow_ui(base, static_cast<unsigned long>(n));
                    note += "; (r+1) | n";
                }
            }
            return exact_report(id, p, ok, note);
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "farhi_quad";
        c.summary = "u_k = a k (k+t) + b: lcm(u_0..u_n) >= 2b (a/4)^n (t = 0) or b/(t 2^t) (a/4)^n (t >= 1), and a multiple of a^n u_0...u_n / f(t,n)";
        c.params = {int_spec("a", "leading coefficient"), int_spec("b", "constant term"), int_spec("t", "shift"),
                    int_spec("n", "last index")};
        c.window = "a, b >= 1, t >= 0, gcd(a, b) = 1, n >= 0 (n >= 1 when t = 0)";
        c.exact = true;
        c.skip_reason = [](const Params& p) -> std::string {
            auto a = int_param(p, "a"), b = int_param(p, "b"), t = int_param(p, "t"), n = int_param(p, "n");
            if (a < 1 || b < 1 || t < 0 || n < 0) return "needs a, b >= 1, t >= 0, n >= 0";
            if (std::gcd(a, b) != 1) return "needs gcd(a, b) = 1";
            // f(0, 0) = 1/2 is not an integer and 2b > u_0 = b.
            if (t == 0 && n == 0) return "needs n >= 1 when t = 0";
            return {};
        };
        c.run = [](const Params& p, const CheckContext&) {
            auto a = int_param(p, "a"), b = int_param(p, "b"), t = int_param(p, "t"), n = int_param(p, "n");
            auto un = static_cast<unsigned long>(n);
            BigInt L = 1, prod = 1;
            for (std::int64_t k = 0; k <= n; ++k) {
                BigInt u = BigInt(static_cast<long>(a)) * k * (k + t) + b;
                mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), u.get_mpz_t());
                prod *= u;
            }
            BigInt an = pow_ui(static_cast<unsigned long>(a), un), four_n = pow_ui(4, un);
            bool bound = t == 0 ? L * four_n >= 2 * b * an
                                : L * four_n * static_cast<unsigned long>(t) * pow_ui(2, static_cast<unsigned long>(t)) >= b * an;
            // a^n u_0...u_n / f(t, n) with a^n cancelled.
            Rational divisor = t == 0 ? Rational(2 * prod, factorial(2 * un))
                                      : Rational(prod * factorial(static_cast<unsigned long>(t - 1)),
                                                 factorial(2 * un + static_cast<unsigned long>(t)));
            divisor.canonicalize();
            bool divides = is_multiple_of_rational(L, divisor);
            return exact_report("farhi_quad", p, bound && divides,
                                std::string("bound ") + (bound ? "holds" : "fails") + ", divisor " +
                                    (divides ? "divides" : "does not divide"));
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "farhi_n2plus1";
        c.summary = "lcm(1^2+1, ..., n^2+1) >= 0.32 (1.442)^n";
        c.params = {int_spec("n", "last index")};
        c.window = "n >= 1";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return int_param(p, "n") < 1 ? std::string("needs n >= 1") : std::string(); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = int_param(p, "n");
            LcmAccumulator acc(ctx.primes, ctx.precision);
            for (std::int64_t k = 1; k <= n; ++k) acc.add(static_cast<std::uint64_t>(k * k + 1));
            BigInt L = acc.value().value();
            auto un = static_cast<unsigned long>(n);
            bool ok = L * 100 * pow_ui(1000, un) >= 32 * pow_ui(1442, un);
            return exact_report("farhi_n2plus1", p, ok, "lcm=" + brief(L));
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "hong_poly";
        c.summary = "lcm(f(m), ..., f(n)) >= 2^n for non-constant f with non-negative coefficients";
        c.params = {{"f", ParamKind::Spec, "polynomial as poly:c0,c1,... (low degree first)"},
                    int_spec("m", "first argument"), int_spec("n", "last argument")};
        c.window = "n >= 7, 0 < m <= ceil(n/2)";
        c.exact = true;
        c.skip_reason = [](const Params& p) -> std::string {
            auto spec = parse_spec(text_param(p, "f"));
            auto* poly = std::get_if<Polynomial>(&spec);
            if (!poly) return "f must be a poly: spec";
            bool nonconst = false;
            for (std::size_t i = 0; i < poly->coeffs.size(); ++i) {
                if (poly->coeffs[i] < 0) return "needs non-negative coefficients";
                if (i > 0 && poly->coeffs[i] != 0) nonconst = true;
            }
            if (!nonconst) return "needs a non-constant polynomial";
            auto m = int_param(p, "m"), n = int_param(p, "n");
            if (n < 7) return "needs n >= 7";
            if (m < 1 || m > (n + 1) / 2) return "needs 0 < m <= ceil(n/2)";
            return {};
        };
        c.run = [](const Params& p, const CheckContext&) {
            auto poly = std::get<Polynomial>(parse_spec(text_param(p, "f")));
            auto m = int_param(p, "m"), n = int_param(p, "n");
            BigInt L = 1;
            for (std::int64_t k = m; k <= n; ++k) {
                BigInt v = 0;
                for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) v = v * k + static_cast<long>(*it);
                mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), v.get_mpz_t());
            }
            bool ok = L >= pow_ui(2, static_cast<unsigned long>(n));
            return exact_report("hong_poly", p, ok, brief(L) + " >= 2^" + std::to_string(n));
        };
        out.push_back(std::move(c));
    }
    out.push_back(ap_upper_check(false));
    out.push_back(ap_upper_check(true));
    {
        CheckSpec c;
        c.id = "M_sandwich";
        c.summary = "log(r+1) <= r M(r) <= log r + log log r + log 41.30142";
        c.params = {int_spec("r", "argument")};
        c.window = "r >= 2";
        c.skip_reason = [](const Params& p) { return int_param(p, "r") < 2 ? std::string("needs r >= 2") : std::string(); };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto r = int_param(p, "r");
            Rational rM = M_of(static_cast<std::uint64_t>(r)) * static_cast<long>(r);
            auto lower = LogExpr::custom([r](int prec) { return log(ival(static_cast<long>(r + 1), prec)); });
            auto upper = LogExpr::custom([r](int prec) {
                Interval lr = log(ival(static_cast<long>(r), prec));
                return lr + log(lr) + log(ch4::c1.enclose(prec));
            });
            auto rep = sandwich_report("M_sandwich", p, lower, LogExpr::constant(rM), upper, ctx);
            rep.note += "; values, not logs";
            return rep;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "theta_prog_upper";
        c.summary = "theta(x; k, l) <= x (2 c3/k + log k/(k-1)), c3 = 1.25507";
        c.params = {int_spec("k", "prime modulus"), int_spec("l", "residue"), int_spec("x", "integer argument")};
        c.window = "k prime, 1 <= l < k, x >= k(k+1)";
        c.skip_reason = [](const Params& p) -> std::string {
            auto k = int_param(p, "k"), l = int_param(p, "l"), x = int_param(p, "x");
            if (k < 2 || !is_prime_trial(static_cast<std::uint64_t>(k))) return "needs k prime";
            if (l < 1 || l >= k) return "needs 1 <= l < k";
            if (x < k * (k + 1)) return "needs x >= k(k+1)";
            return {};
        };
        auto rhs = [](std::int64_t k, std::int64_t x, int prec) {
            Interval kk = ival(static_cast<long>(k), prec);
            return ival(static_cast<long>(x), prec) *
                   (ival(2, prec) * ch4::c3.enclose(prec) / kk + log(kk) / ival(static_cast<long>(k - 1), prec));
        };
        c.run = [rhs](const Params& p, const CheckContext& ctx) {
            auto k = int_param(p, "k"), l = int_param(p, "l"), x = int_param(p, "x");
            const PrimeTable& t = ctx.primes;
            auto lhs = LogExpr::custom([&t, k, l, x](int prec) {
                return chebyshev_progression(t, ProgressionKind::Theta, static_cast<std::uint64_t>(x),
                                             static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(l), prec);
            });
            auto rep = log_report("theta_prog_upper", p, lhs, LogExpr::custom([=](int prec) { return rhs(k, x, prec); }),
                                  Relation::LessEq, ctx);
            rep.note = "values, not logs";
            return rep;
        };
        c.sweep = [rhs](const Params& pre, const std::vector<std::int64_t>& xs, const CheckContext& ctx,
                        const ReportSink& sink) {
            auto k = int_param(pre, "k"), l = int_param(pre, "l");
            LogCache cache(ctx.precision);
            Interval theta(ctx.precision);
            std::uint64_t at = 0;
            const PrimeTable& t = ctx.primes;
            for (auto x : xs) {
                if (static_cast<std::uint64_t>(x) > t.limit()) throw std::range_error("x exceeds the sieve limit");
                for (std::uint64_t m = at + 1; m <= static_cast<std::uint64_t>(x); ++m)
                    if (m >= 2 && t.smallest_factor(m) == m && m % static_cast<std::uint64_t>(k) == static_cast<std::uint64_t>(l))
                        theta += cache.log_of(m);
                at = static_cast<std::uint64_t>(x);
                auto rep = enclosure_report("theta_prog_upper", with_last(pre, "x", x), theta, rhs(k, x, ctx.precision),
                                            Relation::LessEq);
                rep.note = "values, not logs";
                if (!sink(std::move(rep))) return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "ap_tail_divisor";
        c.summary = "prod_{p > n} p^v_p(lcm(a, ..., a+nb)) divides a(a+b)...(a+nb) prod_{p<=n, p|b} p^v_p(n!) / (n! prod_{p<=n, p!|b} p^v_p(n+1))";
        c.params = ab_params();
        c.window = "a, b >= 1, gcd(a, b) = 1, n >= 0";
        c.exact = true;
        c.skip_reason = [](const Params& p) -> std::string {
            auto a = int_param(p, "a"), b = int_param(p, "b"), n = int_param(p, "n");
            if (a < 1 || b < 1 || n < 0) return "needs a, b >= 1 and n >= 0";
            if (std::gcd(a, b) != 1) return "needs gcd(a, b) = 1";
            return {};
        };
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto a = int_param(p, "a"), b = int_param(p, "b"), n = int_param(p, "n");
            auto v = ap_valuations(ctx.primes, a, b, n);
            auto un = static_cast<std::uint64_t>(n);
            std::map<std::uint64_t, bool> primes;
            for (auto& [q, e] : v.product) primes[q] = true;
            for (auto q : ctx.primes.primes()) {
                if (q > un) break;
                primes[q] = true;
            }
            if (un > ctx.primes.limit()) throw std::range_error("n exceeds the sieve limit");
            for (auto& [q, unused] : primes) {
                std::int64_t vb = static_cast<std::int64_t>(v.product.count(q) ? v.product.at(q) : 0);
                std::int64_t va = 0;
                if (q <= un) {
                    // For q | b the numerator's q^v_q(n!) cancels the one in n!.
                    if (static_cast<std::uint64_t>(b) % q != 0)
                        vb -= static_cast<std::int64_t>(factorial_valuation(q, un) + valuation(un + 1, q));
                } else {
                    va = v.lcm.count(q) ? v.lcm.at(q) : 0;
                }
                if (vb < va)
                    return exact_report("ap_tail_divisor", p, false,
                                        "p=" + std::to_string(q) + ": " + std::to_string(va) + " > " + std::to_string(vb));
            }
            return exact_report("ap_tail_divisor", p, true);
        };
        out.push_back(std::move(c));
    }
}

}  // namespace detail
}  // namespace lcmkit
