#include "catalog_detail.hpp"
#include "lcm/quadratic_lcm.hpp"

namespace lcmkit {
namespace detail {

namespace {

std::vector<ParamSpec> cmn_params() {
    return {int_spec("c", "shift c >= 1"), int_spec("m", "first index"), int_spec("n", "last index")};
}

std::string cmn_window(const Params& p) {
    auto c = int_param(p, "c"), m = int_param(p, "m"), n = int_param(p, "n");
    if (c < 1) return "needs c >= 1";
    if (m < 1 || m > n) return "needs 1 <= m <= n";
    return {};
}

FactoredInteger L_of(const Params& p, const CheckContext& ctx) {
    return L_quadratic(ctx.primes, int_param(p, "c"), int_param(p, "m"), int_param(p, "n"));
}

using RhsFn = Interval (*)(std::int64_t c, std::int64_t m, std::int64_t n, int prec);

Interval rhs_factorial(std::int64_t c, std::int64_t m, std::int64_t n, int prec) { return log_factorial_lower(c, m, n, prec); }
Interval rhs_smooth(std::int64_t c, std::int64_t m, std::int64_t n, int prec) { return log_smooth_lower(c, m, n, prec); }
Interval rhs_wide(std::int64_t c, std::int64_t, std::int64_t n, int prec) { return log_wide_lower(c, n, prec); }
Interval rhs_narrow(std::int64_t c, std::int64_t m, std::int64_t n, int prec) { return log_narrow_lower(c, m, n, prec); }
Interval rhs_oon(std::int64_t, std::int64_t, std::int64_t n, int prec) {
    return ival(static_cast<long>(n), prec) * log(ival(2, prec));
}

// L_{c,m,n} >= exp(rhs), swept over n with an incremental lcm.
CheckSpec quad_bound(std::string id, std::string summary, std::string window, RhsFn rhs,
                     std::function<std::string(std::int64_t, std::int64_t)> extra_window) {
    CheckSpec c;
    c.id = id;
    c.summary = std::move(summary);
    c.params = cmn_params();
    c.window = std::move(window);
    c.skip_reason = [extra_window](const Params& p) {
        std::string why = cmn_window(p);
        if (why.empty()) why = extra_window(int_param(p, "m"), int_param(p, "n"));
        return why;
    };
    c.run = [id, rhs](const Params& p, const CheckContext& ctx) {
        auto cc = int_param(p, "c"), m = int_param(p, "m"), n = int_param(p, "n");
        return log_report(id, p, LogExpr::log_of(L_of(p, ctx)),
                          LogExpr::custom([=](int prec) { return rhs(cc, m, n, prec); }), Relation::GreaterEq, ctx);
    };
    c.sweep = [id, rhs](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                        const ReportSink& sink) {
        auto cc = int_param(pre, "c"), m = int_param(pre, "m");
        LcmAccumulator acc(ctx.primes, ctx.precision);
        std::int64_t at = m - 1;
        for (auto n : ns) {
            for (; at < n; ++at) acc.add(static_cast<std::uint64_t>((at + 1) * (at + 1) + cc));
            if (!sink(enclosure_report(id, with_last(pre, "n", n), acc.log(), rhs(cc, m, n, ctx.precision),
                                       Relation::GreaterEq)))
                return false;
        }
        return true;
    };
    return c;
}

std::string bezout_window(const Params& p) {
    auto c = int_param(p, "c"), k = int_param(p, "k");
    if (c < 1) return "needs c >= 1";
    if (k < 0 || k > kBezoutCap) return "needs 0 <= k <= " + std::to_string(kBezoutCap);
    return {};
}

CheckSpec bezout_check(std::string id, std::string summary,
                       std::function<BoundReport(std::int64_t, std::int64_t, const Params&)> body) {
    CheckSpec c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.params = {int_spec("c", "shift c >= 1"), int_spec("k", "degree k = n - m")};
    c.window = "c >= 1, 0 <= k <= " + std::to_string(kBezoutCap);
    c.exact = true;
    c.skip_reason = bezout_window;
    c.run = [body](const Params& p, const CheckContext&) { return body(int_param(p, "c"), int_param(p, "k"), p); };
    return c;
}

}  // namespace

void add_quadratic_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c;
        c.id = "hc_multiple";
        c.summary = "h_c(prod_{l=m}^{n} (l + sqrt(-c))) divides c prod_{l=1}^{n-m} (l^2 + 4c)";
        c.params = cmn_params();
        c.window = "c >= 1, 1 <= m <= n";
        c.exact = true;
        c.skip_reason = cmn_window;
        c.run = [](const Params& p, const CheckContext&) {
            auto r = hc_multiple_check(int_param(p, "c"), int_param(p, "m"), int_param(p, "n"));
            r.params = p;
            return r;
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "quadratic_divisor";
        c.summary = "L_{c,m,n} is a multiple of prod (k^2 + c) / (c (n-m)! prod_{k=1}^{n-m} (k^2 + 4c))";
        c.params = cmn_params();
        c.window = "c >= 1, 1 <= m <= n";
        c.exact = true;
        c.skip_reason = cmn_window;
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto r = quadratic_divisor_check(ctx.primes, int_param(p, "c"), int_param(p, "m"), int_param(p, "n"));
            r.params = p;
            return r;
        };
        out.push_back(std::move(c));
    }
    {
        // Exact in run(); the sweep compares logs and falls back to run() when undecided.
        CheckSpec c = quad_bound("oon", "L_{c,m,n} >= 2^n", "c >= 1, 1 <= m <= ceil(n/2)", rhs_oon,
                                 [](std::int64_t m, std::int64_t n) {
                                     return m <= (n + 1) / 2 ? std::string() : std::string("needs m <= ceil(n/2)");
                                 });
        c.exact = true;
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto n = int_param(p, "n");
            BigInt L = L_of(p, ctx).value(), two_n;
            mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
            return exact_report("oon", p, L >= two_n, brief(L) + " >= 2^" + std::to_string(n));
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "oon_binomial";
        c.summary = "L_{c,m,n} >= m C(n, m)";
        c.params = cmn_params();
        c.window = "c >= 1, 1 <= m <= n";
        c.exact = true;
        c.skip_reason = cmn_window;
        c.run = [](const Params& p, const CheckContext& ctx) {
            auto m = int_param(p, "m"), n = int_param(p, "n");
            BigInt L = L_of(p, ctx).value();
            BigInt rhs = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
            return exact_report("oon_binomial", p, L >= rhs, brief(L) + " >= " + brief(rhs));
        };
        c.sweep = [](const Params& pre, const std::vector<std::int64_t>& ns, const CheckContext& ctx,
                     const ReportSink& sink) {
            auto cc = int_param(pre, "c"), m = int_param(pre, "m");
            LcmAccumulator acc(ctx.primes, ctx.precision);
            LogCache cache(ctx.precision);
            // log(m C(n, m)) updated by log n - log(n - m) per step.
            Interval rhs = log(ival(static_cast<long>(m), ctx.precision));
            std::int64_t at = m - 1;
            for (auto n : ns) {
                for (; at < n; ++at) {
                    std::int64_t k = at + 1;
                    acc.add(static_cast<std::uint64_t>(k * k + cc));
                    if (k > m) rhs += cache.log_of(static_cast<std::uint64_t>(k)) - cache.log_of(static_cast<std::uint64_t>(k - m));
                }
                if (!sink(enclosure_report("oon_binomial", with_last(pre, "n", n), acc.log(), rhs, Relation::GreaterEq)))
                    return false;
            }
            return true;
        };
        out.push_back(std::move(c));
    }
    out.push_back(quad_bound("quad_factorial_lower", "L_{c,m,n} >= lambda1(c) m^2 n!^2 / (m!^2 (n-m)!^3)",
                             "c >= 1, 1 <= m <= n", rhs_factorial,
                             [](std::int64_t, std::int64_t) { return std::string(); }));
    out.push_back(quad_bound("quad_smooth_lower",
                             "L_{c,m,n} >= lambda2(c) n m / (n-m)^(3/2) (m^2/(n-m)^3)^(n-m) e^(3(n-m))",
                             "c >= 1, 1 <= m < n", rhs_smooth, [](std::int64_t m, std::int64_t n) {
                                 return m < n ? std::string() : std::string("needs m < n");
                             }));
    out.push_back(quad_bound("quad_wide_lower",
                             "L_{c,m,n} >= lambda3(c) (n - n^(2/3)/2) (2 e^3)^floor(n^(2/3)/2)",
                             "c >= 1, 1 <= m <= n - n^(2/3)/2", rhs_wide, [](std::int64_t m, std::int64_t n) {
                                 return wide_window(m, n) ? std::string() : std::string("needs m <= n - n^(2/3)/2");
                             }));
    out.push_back(quad_bound("quad_narrow_lower", "L_{c,m,n} >= lambda2(c) n e^(3(n-m))",
                             "c >= 1, n - n^(2/3)/2 <= m <= n", rhs_narrow, [](std::int64_t m, std::int64_t n) {
                                 return narrow_window(m, n) ? std::string() : std::string("needs m >= n - n^(2/3)/2");
                             }));
    out.push_back(bezout_check(
        "bezout_residual", "sigma_k(s + sqrt(-c)) P_k(s + sqrt(-c)) = 1 for s = 0..k",
        [](std::int64_t c, std::int64_t k, const Params& p) {
            auto b = bezout_coefficients(c, k);
            for (std::int64_t s = 0; s <= k; ++s) {
                QuadraticRational x(static_cast<long>(c), static_cast<long>(s), 1);
                QuadraticRational prod = sigma_at_shift(b, s) * P_k(c, k, x);
                if (!(prod == QuadraticRational(static_cast<long>(c), 1, 0)))
                    return exact_report("bezout_residual", p, false, "residual at s=" + std::to_string(s));
            }
            return exact_report("bezout_residual", p, true);
        }));
    out.push_back(bezout_check(
        "bezout_closed_form", "finite-difference coefficients equal the closed form for every l",
        [](std::int64_t c, std::int64_t k, const Params& p) {
            auto b = bezout_coefficients(c, k);
            for (std::int64_t l = 0; l <= k; ++l)
                if (!(b.theta[static_cast<std::size_t>(l)] == bezout_theta_closed(c, k, l)))
                    return exact_report("bezout_closed_form", p, false, "mismatch at l=" + std::to_string(l));
            return exact_report("bezout_closed_form", p, true);
        }));
    out.push_back(bezout_check(
        "bezout_integral", "2 d sigma_k = r + s sqrt(-c) with r, s in Z[X] and r A - c s B = d",
        [](std::int64_t c, std::int64_t k, const Params& p) {
            auto polys = bezout_polynomials(bezout_coefficients(c, k));
            auto comb = bezout_combination(polys, c);
            bool identity = comb.size() == 1 && comb[0] == polys.d;
            return exact_report("bezout_integral", p, polys.integral && identity,
                                std::string("integral=") + (polys.integral ? "yes" : "no") +
                                    " identity=" + (identity ? "yes" : "no") + " d=" + brief(polys.d));
        }));
}

}  // namespace detail
}  // namespace lcmkit
