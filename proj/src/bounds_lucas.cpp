#include <numeric>

#include "catalog_detail.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {
namespace detail {

namespace {

struct LucasParams {
    std::int64_t P, Q;
    std::int64_t disc() const { return P * P - 4 * Q; }
};

std::string lucas_window(const Params& p) {
    auto P = int_param(p, "P"), Q = int_param(p, "Q");
    if (P == 0 || Q == 0) return "needs P, Q nonzero";
    if (std::gcd(P, Q) != 1) return "needs gcd(P, Q) = 1";
    if (P * P - 4 * Q <= 0) return "needs P^2 - 4Q > 0";
    if (int_param(p, "n") < 1) return "needs n >= 1";
    return {};
}

// log |alpha| with |alpha| = (|P| + sqrt(P^2 - 4Q)) / 2.
Interval log_alpha(const LucasParams& lp, int prec) {
    Interval root = sqrt(ival(static_cast<long>(lp.disc()), prec));
    return log((ival(static_cast<long>(lp.P < 0 ? -lp.P : lp.P), prec) + root) / ival(2, prec));
}

LogExpr alpha_power(const LucasParams& lp, const Rational& e) {
    return LogExpr::custom([lp, e](int prec) { return log_alpha(lp, prec) * ival(e, prec); });
}

// Integer alpha when the discriminant is a perfect square, else 0.
BigInt integer_alpha(const LucasParams& lp) {
    BigInt d = lp.disc(), r;
    if (!mpz_perfect_square_p(d.get_mpz_t())) return 0;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    BigInt twice = BigInt(lp.P < 0 ? -lp.P : lp.P) + r;
    return twice / 2;
}

// Exact test of alpha^(e_lo) <= x <= alpha^(e_hi) for integer alpha and exponents in (1/12)Z.
bool exact_sandwich(const BigInt& alpha, const BigInt& x, const Rational& e_lo, const Rational& e_hi) {
    auto side = [&](const Rational& e, bool x_is_larger) {
        Rational twelve = e * 12;
        long k = twelve.get_num().get_si();
        BigInt x12, ak;
        mpz_pow_ui(x12.get_mpz_t(), x.get_mpz_t(), 12);
        mpz_pow_ui(ak.get_mpz_t(), alpha.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
        // Compare x^12 with alpha^k, moving a negative power to the other side.
        BigInt lhs = k < 0 ? BigInt(x12 * ak) : x12, rhs = k < 0 ? BigInt(1) : ak;
        return x_is_larger ? lhs >= rhs : lhs <= rhs;
    };
    return side(e_lo, true) && side(e_hi, false);
}

Rational lcm_lower_exp(std::int64_t n) { return Rational(3 * n * n - 6 * n - 12, 12); }
Rational lcm_upper_exp(std::int64_t n) { return Rational(4 * n * n + 28 * n - 32, 12); }

LucasParams lucas_of(const Params& p) { return {int_param(p, "P"), int_param(p, "Q")}; }

std::vector<BigInt> abs_lucas(const LucasParams& lp, std::size_t n) {
    auto t = generate(Lucas{lp.P, lp.Q}, n);
    for (auto& x : t) x = abs(x);
    return t;
}

BoundReport lucas_sandwich_point(const std::string& id, const Params& p, const LucasParams& lp, const BigInt& x,
                                 const Rational& e_lo, const Rational& e_hi, const CheckContext& ctx) {
    auto r = sandwich_report(id, p, alpha_power(lp, e_lo), LogExpr::log_of(x), alpha_power(lp, e_hi), ctx);
    if (r.verdict != Verdict::Inconclusive) return r;
    BigInt alpha = integer_alpha(lp);
    if (alpha == 0) return r;
    bool ok = exact_sandwich(alpha, x, e_lo, e_hi);
    auto e = exact_report(id, p, ok, "decided exactly with alpha = " + brief(alpha));
    e.lhs_log = r.lhs_log;
    e.rhs_log = r.rhs_log;
    return e;
}

CheckSpec lucas_params_check(std::string id, std::string summary) {
    CheckSpec c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.params = {int_spec("P", "nonzero, coprime to Q"), int_spec("Q", "nonzero"), int_spec("n", "index")};
    c.window = "P, Q nonzero, gcd(P, Q) = 1, P^2 - 4Q > 0, n >= 1";
    c.skip_reason = lucas_window;
    return c;
}

}  // namespace

void add_lucas_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c = lucas_params_check(
            "lucas_sandwich", "|alpha|^(n^2/4 - n/2 - 1) <= lcm(U_1..U_n) <= |alpha|^(n^2/3 + 7n/3 - 8/3)");
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto lp = lucas_of(p);
            auto n = int_param(p, "n");
            return lucas_sandwich_point("lucas_sandwich", p, lp, lcm_big(abs_lucas(lp, static_cast<std::size_t>(n))),
                                        lcm_lower_exp(n), lcm_upper_exp(n), ctx);
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                     const ReportSink& sink) {
            LucasParams lp{int_param(pre, "P"), int_param(pre, "Q")};
            auto terms = abs_lucas(lp, static_cast<std::size_t>(ns.back()));
            Interval la = log_alpha(lp, ctx.precision);
            BigInt L = 1;
            std::int64_t at = 0;
            for (auto n : ns) {
                for (; at < n; ++at) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), terms[static_cast<std::size_t>(at)].get_mpz_t());
                Interval value = log(Interval::from_z(L, ctx.precision));
                if (!sink(sandwich_enclosure("lucas_sandwich", with_last(pre, "n", n),
                                             la * ival(lcm_lower_exp(n), ctx.precision), value,
                                             la * ival(lcm_upper_exp(n), ctx.precision))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c = lucas_params_check("lucas_term_sandwich", "|alpha|^(n-2) <= |U_n| <= |alpha|^n");
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto lp = lucas_of(p);
            auto n = int_param(p, "n");
            BigInt u = abs(lucas_closed_form(lp.P, lp.Q, static_cast<std::uint64_t>(n)));
            return lucas_sandwich_point("lucas_term_sandwich", p, lp, u, Rational(n - 2), Rational(n), ctx);
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "fib_sandwich";
        c.summary = "phi^(n^2/4 - 9/4) <= lcm(F_1..F_n) <= phi^(n^2/3 + 4n/3)";
        c.params = {int_spec("n", "index")};
        c.window = "n >= 1";
        c.skip_reason = [](const Params& p) { return int_param(p, "n") < 1 ? std::string("needs n >= 1") : std::string(); };
        auto lower = [](std::int64_t n) { return Rational(n * n - 9, 4); };
        auto upper = [](std::int64_t n) { return Rational(n * n + 4 * n, 3); };
        c.run = [lower, upper](const Params& p, const CheckContext& ctx) {
            LucasParams fib{1, -1};
            auto n = int_param(p, "n");
            BigInt L = lcm_big(abs_lucas(fib, static_cast<std::size_t>(n)));
            return sandwich_report("fib_sandwich", p, alpha_power(fib, lower(n)), LogExpr::log_of(L),
                                   alpha_power(fib, upper(n)), ctx);
        };
        c.sweep = [lower, upper](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                                 const ReportSink& sink) {
            LucasParams fib{1, -1};
            auto terms = abs_lucas(fib, static_cast<std::size_t>(ns.back()));
            Interval lphi = log_alpha(fib, ctx.precision);
            BigInt L = 1;
            std::int64_t at = 0;
            for (auto n : ns) {
                for (; at < n; ++at) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), terms[static_cast<std::size_t>(at)].get_mpz_t());
                if (!sink(sandwich_enclosure("fib_sandwich", with_last(pre, "n", n),
                                             lphi * ival(lower(n), ctx.precision),
                                             log(Interval::from_z(L, ctx.precision)),
                                             lphi * ival(upper(n), ctx.precision))))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
}

}  // namespace detail
}  // namespace lcmkit
