#include "lcm/quadratic_lcm.hpp"

#include <cmath>
#include <stdexcept>

namespace lcmkit {

namespace {

void require_instance(std::int64_t c, std::int64_t m, std::int64_t n) {
    if (c < 1 || m < 1 || m > n) throw std::invalid_argument("quadratic instance needs c >= 1 and 1 <= m <= n");
}

Params cmn(std::int64_t c, std::int64_t m, std::int64_t n) {
    return {{"c", std::to_string(c)}, {"m", std::to_string(m)}, {"n", std::to_string(n)}};
}

std::string brief(const BigInt& x) {
    auto s = x.get_str();
    return s.size() <= 30 ? s : std::to_string(s.size()) + " digits";
}

using QPoly = std::vector<QuadraticRational>;

QPoly qpoly_mul(const QPoly& a, const QPoly& b, long c) {
    QPoly out(a.size() + b.size() - 1, QuadraticRational(c, 0, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Interval iv(long v, int prec) { return Interval::from_long(v, prec); }

Interval log_z(const BigInt& v, int prec) { return log(Interval::from_z(v, prec)); }

}  // namespace

FactoredInteger L_quadratic(const PrimeTable& t, std::int64_t c, std::int64_t m, std::int64_t n) {
    require_instance(c, m, n);
    FactoredInteger out;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pe;
    for (std::int64_t k = m; k <= n; ++k) {
        pe.clear();
        t.factor_into(static_cast<std::uint64_t>(k * k + c), pe);
        for (auto [p, e] : pe) out.max_prime_power(p, e);
    }
    return out;
}

BigInt h_c(const QuadraticInteger& z) {
    if (z.is_zero()) throw std::domain_error("h_c: zero argument");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), z.re.get_mpz_t(), z.im.get_mpz_t());
    return g;
}

QuadraticInteger shifted_product(std::int64_t c, std::int64_t m, std::int64_t n) {
    QuadraticInteger acc{static_cast<long>(c), 1, 0};
    for (std::int64_t l = m; l <= n; ++l) acc = acc * QuadraticInteger{static_cast<long>(c), static_cast<long>(l), 1};
    return acc;
}

BigInt bezout_denominator(std::int64_t c, std::int64_t k) {
    BigInt d = static_cast<long>(c);
    for (std::int64_t l = 1; l <= k; ++l) d *= static_cast<long>(l * l + 4 * c);
    return d;
}

BoundReport hc_multiple_check(std::int64_t c, std::int64_t m, std::int64_t n) {
    require_instance(c, m, n);
    BigInt h = h_c(shifted_product(c, m, n));
    BigInt d = bezout_denominator(c, n - m);
    bool ok = mpz_divisible_p(d.get_mpz_t(), h.get_mpz_t()) != 0;
    return exact_report("hc_multiple", cmn(c, m, n), ok, "h=" + brief(h) + " d=" + brief(d));
}

Rational quadratic_divisor(std::int64_t c, std::int64_t m, std::int64_t n) {
    require_instance(c, m, n);
    BigInt num = 1;
    for (std::int64_t k = m; k <= n; ++k) num *= static_cast<long>(k * k + c);
    BigInt den = bezout_denominator(c, n - m) * factorial(static_cast<unsigned long>(n - m));
    Rational out(num, den);
    out.canonicalize();
    return out;
}

BoundReport quadratic_divisor_check(const PrimeTable& t, std::int64_t c, std::int64_t m, std::int64_t n) {
    Rational D = quadratic_divisor(c, m, n);
    BigInt L = L_quadratic(t, c, m, n).value();
    bool ok = is_multiple_of_rational(L, D);
    return exact_report("quadratic_divisor", cmn(c, m, n), ok, "D=" + D.get_str().substr(0, 60));
}

bool ring_multiple(const BigInt& N, const QuadraticInteger& z) {
    if (z.is_zero()) throw std::domain_error("ring_multiple: zero divisor");
    // N / z = N conj(z) / norm(z)
    BigInt nrm = z.norm();
    BigInt re = N * z.re, im = -N * z.im;
    return mpz_divisible_p(re.get_mpz_t(), nrm.get_mpz_t()) && mpz_divisible_p(im.get_mpz_t(), nrm.get_mpz_t());
}

bool ring_multiple_by_norm(const BigInt& N, const QuadraticInteger& z) {
    BigInt g = h_c(z);
    BigInt q = z.norm() / g;
    return mpz_divisible_p(N.get_mpz_t(), q.get_mpz_t()) != 0;
}

QuadraticRational P_k(std::int64_t c, std::int64_t k, const QuadraticRational& x) {
    QuadraticRational out(static_cast<long>(c), 1, 0);
    for (std::int64_t i = 0; i <= k; ++i) {
        QuadraticRational f = x;
        f.re -= static_cast<long>(i);
        f.im += 1;
        out *= f;
    }
    return out;
}

BezoutCoefficients bezout_coefficients(std::int64_t c, std::int64_t k, std::int64_t cap) {
    if (c < 1 || k < 0) throw std::invalid_argument("bezout_coefficients: need c >= 1, k >= 0");
    if (k > cap) throw std::range_error("bezout_coefficients: k exceeds the configured cap");
    const long cc = static_cast<long>(c);
    std::vector<QuadraticRational> inv;
    for (std::int64_t j = 0; j <= k; ++j)
        inv.push_back(P_k(c, k, QuadraticRational(cc, static_cast<long>(j), 1)).inverse());
    BezoutCoefficients out{c, k, {}};
    for (std::int64_t l = 0; l <= k; ++l) {
        QuadraticRational acc(cc, 0, 0);
        for (std::int64_t j = 0; j <= l; ++j) {
            Rational coef(binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(j)));
            if ((l - j) % 2) coef = -coef;
            acc += inv[j] * coef;
        }
        acc *= Rational(BigInt(1), factorial(static_cast<unsigned long>(l)));
        out.theta.push_back(acc);
    }
    return out;
}

QuadraticRational bezout_theta_closed(std::int64_t c, std::int64_t k, std::int64_t l) {
    const long cc = static_cast<long>(c);
    QuadraticRational two_root(cc, 0, 2);
    QuadraticRational den = two_root;
    den *= falling_power(QuadraticRational(cc, static_cast<long>(k), -2), static_cast<unsigned>(k));
    den *= falling_power(QuadraticRational(cc, static_cast<long>(l), 2), static_cast<unsigned>(l));
    Rational num(binomial(static_cast<unsigned long>(k + l), static_cast<unsigned long>(l)));
    if ((k + l) % 2) num = -num;
    return QuadraticRational(cc, num, 0) / den;
}

QuadraticRational sigma_at_shift(const BezoutCoefficients& b, std::int64_t s) {
    const long cc = static_cast<long>(b.c);
    QuadraticRational acc(cc, 0, 0);
    for (std::size_t l = 0; l < b.theta.size(); ++l) {
        Rational fall = 1;
        for (std::size_t i = 0; i < l; ++i) fall *= static_cast<long>(s - static_cast<std::int64_t>(i));
        acc += b.theta[l] * fall;
    }
    return acc;
}

BezoutPolynomials bezout_polynomials(const BezoutCoefficients& b) {
    const long cc = static_cast<long>(b.c);
    BezoutPolynomials out;
    out.d = bezout_denominator(b.c, b.k);

    // sigma_k(X) = sum_l theta_l (X - sqrt(-c))^{l falling}
    QPoly sigma(1, QuadraticRational(cc, 0, 0));
    QPoly basis(1, QuadraticRational(cc, 1, 0));
    for (std::size_t l = 0; l < b.theta.size(); ++l) {
        if (sigma.size() < basis.size()) sigma.resize(basis.size(), QuadraticRational(cc, 0, 0));
        for (std::size_t i = 0; i < basis.size(); ++i) sigma[i] += basis[i] * b.theta[l];
        // multiply basis by (X - sqrt(-c) - l)
        QPoly lin{QuadraticRational(cc, -static_cast<long>(l), -1), QuadraticRational(cc, 1, 0)};
        basis = qpoly_mul(basis, lin, cc);
    }

    out.integral = true;
    Rational two_d(2 * out.d);
    for (auto& coef : sigma) {
        QuadraticRational scaled = coef * two_d;
        if (scaled.re.get_den() != 1 || scaled.im.get_den() != 1) out.integral = false;
        out.r.push_back(scaled.re.get_num());
        out.s.push_back(scaled.im.get_num());
    }

    QPoly P(1, QuadraticRational(cc, 1, 0));
    for (std::int64_t i = 0; i <= b.k; ++i)
        P = qpoly_mul(P, {QuadraticRational(cc, -static_cast<long>(i), 1), QuadraticRational(cc, 1, 0)}, cc);
    for (auto& coef : P) {
        out.A.push_back(coef.re.get_num());
        out.B.push_back(coef.im.get_num());
    }
    return out;
}

std::vector<BigInt> bezout_combination(const BezoutPolynomials& p, std::int64_t c) {
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
        std::vector<BigInt> out(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    auto rA = mul(p.r, p.A);
    auto sB = mul(p.s, p.B);
    rA.resize(std::max(rA.size(), sB.size()), 0);
    for (std::size_t i = 0; i < sB.size(); ++i) rA[i] -= static_cast<long>(c) * sB[i];
    while (rA.size() > 1 && rA.back() == 0) rA.pop_back();
    return rA;
}

bool wide_window(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) return false;
    __int128 k = n - m;
    return 8 * k * k * k >= static_cast<__int128>(n) * n;
}

bool narrow_window(std::int64_t m, std::int64_t n) {
    if (m < 1 || m > n) return false;
    __int128 k = n - m;
    return 8 * k * k * k <= static_cast<__int128>(n) * n;
}

std::int64_t half_n_two_thirds_floor(std::int64_t n) {
    auto j = static_cast<std::int64_t>(std::cbrt(static_cast<double>(n) * static_cast<double>(n) / 8.0));
    auto fits = [n](std::int64_t x) {
        __int128 xx = x;
        return 8 * xx * xx * xx <= static_cast<__int128>(n) * n;
    };
    while (j > 0 && !fits(j)) --j;
    while (fits(j + 1)) ++j;
    return j;
}

namespace {

Interval two_pi_sq_c_over_3(std::int64_t c, int prec) {
    Interval pi = Interval::pi(prec);
    return pi * pi * Interval::from_q(Rational(2 * c, 3), prec);
}

}  // namespace

Interval log_lambda1(std::int64_t c, int prec) {
    return -two_pi_sq_c_over_3(c, prec) - log(iv(static_cast<long>(c), prec));
}

Interval log_lambda2(std::int64_t c, int prec) {
    Interval two_pi = Interval::pi(prec) * iv(2, prec);
    return -two_pi_sq_c_over_3(c, prec) - Interval::from_q(Rational(5, 12), prec) -
           Interval::from_q(Rational(3, 2), prec) * log(two_pi) - log(iv(static_cast<long>(c), prec));
}

Interval log_lambda3(std::int64_t c, int prec) {
    return -two_pi_sq_c_over_3(c, prec) - Interval::from_q(Rational(5, 12), prec) -
           Interval::from_q(Rational(3, 2), prec) * log(Interval::pi(prec)) - log(iv(static_cast<long>(c), prec));
}

Interval log_factorial_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec) {
    auto um = static_cast<unsigned long>(m), un = static_cast<unsigned long>(n);
    BigInt fn = factorial(un), fm = factorial(um), fk = factorial(un - um);
    BigInt num = BigInt(um) * um * fn * fn;
    BigInt den = fm * fm * fk * fk * fk;
    return log_lambda1(c, prec) + log_z(num, prec) - log_z(den, prec);
}

Interval log_smooth_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec) {
    if (m >= n) throw std::invalid_argument("log_smooth_lower: needs m < n");
    long k = static_cast<long>(n - m);
    Interval lm = log(iv(static_cast<long>(m), prec)), lk = log(iv(k, prec));
    return log_lambda2(c, prec) + log(iv(static_cast<long>(n), prec)) + lm -
           Interval::from_q(Rational(3, 2), prec) * lk + iv(k, prec) * (iv(2, prec) * lm - iv(3, prec) * lk) +
           iv(3 * k, prec);
}

Interval log_wide_lower(std::int64_t c, std::int64_t n, int prec) {
    Interval nn = iv(static_cast<long>(n), prec);
    Interval n23 = pow(nn, Rational(2, 3));
    Interval base = nn - n23 * Interval::from_q(Rational(1, 2), prec);
    long j = static_cast<long>(half_n_two_thirds_floor(n));
    return log_lambda3(c, prec) + log(base) + iv(j, prec) * (log(iv(2, prec)) + iv(3, prec));
}

Interval log_narrow_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec) {
    return log_lambda2(c, prec) + log(iv(static_cast<long>(n), prec)) + iv(3 * static_cast<long>(n - m), prec);
}

std::vector<BoundReport> quadratic_lower_bounds(const PrimeTable& t, std::int64_t c, std::int64_t m,
                                                std::int64_t n, int prec) {
    require_instance(c, m, n);
    FactoredInteger Lf = L_quadratic(t, c, m, n);
    BigInt L = Lf.value();
    LogExpr lhs = LogExpr::log_of(Lf);
    auto params = cmn(c, m, n);
    std::vector<BoundReport> out;

    auto interval_bound = [&](const std::string& id, LogExpr::Term rhs_fn) {
        LogExpr rhs = LogExpr::custom(std::move(rhs_fn));
        auto v = log_compare(lhs, rhs, Relation::GreaterEq, prec);
        out.push_back(interval_report(id, params, lhs.eval(v.precision_bits), rhs.eval(v.precision_bits), v));
    };

    interval_bound("quad_factorial_lower", [=](int p) { return log_factorial_lower(c, m, n, p); });
    if (m < n)
        interval_bound("quad_smooth_lower", [=](int p) { return log_smooth_lower(c, m, n, p); });
    else
        out.push_back(skipped_report("quad_smooth_lower", params, "needs m < n"));
    if (wide_window(m, n))
        interval_bound("quad_wide_lower", [=](int p) { return log_wide_lower(c, n, p); });
    else
        out.push_back(skipped_report("quad_wide_lower", params, "needs m <= n - n^(2/3)/2"));
    if (narrow_window(m, n))
        interval_bound("quad_narrow_lower", [=](int p) { return log_narrow_lower(c, m, n, p); });
    else
        out.push_back(skipped_report("quad_narrow_lower", params, "needs m >= n - n^(2/3)/2"));
    if (m <= (n + 1) / 2) {
        BigInt two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        out.push_back(exact_report("oon", params, L >= two_n, brief(L) + " >= 2^" + std::to_string(n)));
    } else {
        out.push_back(skipped_report("oon", params, "needs m <= ceil(n/2)"));
    }
    BigInt rhs = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(m)) * static_cast<unsigned long>(m);
    out.push_back(exact_report("oon_binomial", params, L >= rhs, brief(L) + " >= " + brief(rhs)));
    return out;
}

}  // namespace lcmkit
