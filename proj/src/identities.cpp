#include "lcm/identities.hpp"

#include <stdexcept>

#include "lcm/prime_toolkit.hpp"

namespace lcmkit {

namespace {

std::vector<BigInt> abs_terms(std::vector<BigInt> a) {
    for (auto& x : a) x = abs(x);
    return a;
}

std::vector<std::uint64_t> small_primes(std::uint64_t n) {
    std::vector<char> comp(n + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = 1;
    }
    return out;
}

std::string brief(const BigInt& x) {
    auto s = x.get_str();
    if (s.size() <= 30) return s;
    return std::to_string(s.size()) + " digits";
}

Params seq_params(const SequenceSpec& spec, std::uint64_t n) {
    return {{"seq", spec_to_string(spec)}, {"n", std::to_string(n)}};
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

BigInt a_binomial_ratio(const std::vector<BigInt>& a, std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("a_binomial: k > n");
    if (n > a.size()) throw std::out_of_range("a_binomial: not enough terms");
    BigInt num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        num *= abs(a[n - 1 - i]);
        den *= abs(a[i]);
    }
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("a_binomial: non-integral ratio; the sequence is not a strong divisibility sequence");
    return exact_div(num, den);
}

bool floor_deficit(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    return k / d + (n - k) / d < n / d;
}

bool floor_deficit_exists(std::uint64_t n, std::uint64_t d) {
    for (std::uint64_t k = 0; k <= n; ++k)
        if (floor_deficit(n, k, d)) return true;
    return false;
}

BigInt a_binomial_via_u(const std::vector<BigInt>& u, std::uint64_t n, std::uint64_t k) {
    if (k > n) throw std::invalid_argument("a_binomial: k > n");
    if (n > u.size()) throw std::out_of_range("a_binomial: not enough terms");
    BigInt out = 1;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (floor_deficit(n, k, d)) out *= u[d - 1];
    return out;
}

BigInt a_binomial(const SequenceSpec& spec, std::uint64_t n, std::uint64_t k) {
    auto a = abs_terms(generate(spec, n));
    BigInt ratio = a_binomial_ratio(a, n, k);
    BigInt prod = a_binomial_via_u(extract_u(a), n, k);
    if (ratio != prod) throw std::logic_error("a_binomial: ratio and u-product forms disagree");
    return ratio;
}

std::vector<BigInt> a_binomial_row(const std::vector<BigInt>& a, std::uint64_t n) {
    if (n > a.size()) throw std::out_of_range("a_binomial_row: not enough terms");
    std::vector<BigInt> row;
    row.reserve(n + 1);
    row.emplace_back(1);
    BigInt num;
    for (std::uint64_t k = 1; k <= n; ++k) {
        num = row.back() * abs(a[n - k]);
        BigInt ak = abs(a[k - 1]);
        if (!mpz_divisible_p(num.get_mpz_t(), ak.get_mpz_t()))
            throw std::domain_error("a_binomial_row: non-integral entry");
        row.push_back(exact_div(num, ak));
    }
    return row;
}

std::vector<BigInt> a_binomial_row(const SequenceSpec& spec, std::uint64_t n) {
    return a_binomial_row(generate(spec, n), n);
}

BoundReport farhi_identity_check(std::uint64_t n) {
    FactoredInteger row_lcm, rhs;
    for (auto p : small_primes(n + 1)) {
        // exponent of p in m! for m <= n
        std::vector<std::uint64_t> vf(n + 1, 0);
        for (std::uint64_t m = 1; m <= n; ++m) {
            std::uint64_t v = 0;
            for (std::uint64_t t = m; t % p == 0; t /= p) ++v;
            vf[m] = vf[m - 1] + v;
        }
        std::uint64_t best = 0;
        for (std::uint64_t k = 0; k <= n; ++k) best = std::max(best, vf[n] - vf[k] - vf[n - k]);
        row_lcm.mul_prime_power(p, static_cast<std::uint32_t>(best));

        std::uint32_t top = 0;
        for (std::uint64_t q = p; q <= n + 1; q *= p) ++top;
        rhs.mul_prime_power(p, top - valuation(n + 1, p));
    }
    bool ok = row_lcm == rhs;
    return exact_report("farhi_identity", {{"n", std::to_string(n)}}, ok,
                        "lcm(row)=" + brief(row_lcm.value()) + " rhs=" + brief(rhs.value()));
}

BoundReport general_identity_check(const SequenceSpec& spec, std::uint64_t n) {
    auto a = abs_terms(generate(spec, n + 1));
    BigInt lhs = lcm_big(a_binomial_row(a, n));
    BigInt rhs = exact_div(lcm_big(a), a[n]);
    return exact_report("general_identity", seq_params(spec, n), lhs == rhs,
                        "lcm(row)=" + brief(lhs) + " rhs=" + brief(rhs));
}

BoundReport lcm_row_multiples_check(const SequenceSpec& spec, std::uint64_t n) {
    auto a = abs_terms(generate(spec, n));
    auto row = a_binomial_row(a, n);
    BigInt lhs = lcm_big(a);
    BigInt rhs = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        BigInt t = a[k - 1] * row[k];
        mpz_lcm(rhs.get_mpz_t(), rhs.get_mpz_t(), t.get_mpz_t());
    }
    return exact_report("lcm_row_multiples", seq_params(spec, n), lhs == rhs,
                        "lcm=" + brief(lhs) + " rhs=" + brief(rhs));
}

BoundReport lcm_row_gcd_check(const SequenceSpec& spec, std::uint64_t n) {
    auto a = abs_terms(generate(spec, n));
    auto row = a_binomial_row(a, n);
    std::vector<BigInt> prefix(n + 1, 1);
    for (std::uint64_t k = 1; k <= n; ++k)
        mpz_lcm(prefix[k].get_mpz_t(), prefix[k - 1].get_mpz_t(), a[k - 1].get_mpz_t());
    BigInt rhs = 0;
    for (std::uint64_t k = (n + 1) / 2; k <= n; ++k) {
        BigInt t = row[k] * prefix[k];
        mpz_gcd(rhs.get_mpz_t(), rhs.get_mpz_t(), t.get_mpz_t());
    }
    return exact_report("lcm_row_gcd", seq_params(spec, n), prefix[n] == rhs,
                        "lcm=" + brief(prefix[n]) + " rhs=" + brief(rhs));
}

BigInt lcm_upto(std::uint64_t n) {
    BigInt out = 1;
    for (auto p : small_primes(n)) {
        std::uint64_t q = p;
        while (q <= n / p) q *= p;
        out *= static_cast<unsigned long>(q);
    }
    return out;
}

HansonC hanson_C(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("hanson_C: n >= 1");
    BigInt den = 1;
    for (const auto& b : sylvester(8)) {
        BigInt q = BigInt(static_cast<unsigned long>(n)) / b;
        den *= factorial(q.get_ui());
    }
    HansonC out;
    out.value = Rational(factorial(n), den);
    out.value.canonicalize();
    out.integral = out.value.get_den() == 1;
    BigInt L = lcm_upto(n);
    out.lcm_divides = out.integral && mpz_divisible_p(out.value.get_num().get_mpz_t(), L.get_mpz_t());
    BigInt three_n;
    mpz_ui_pow_ui(three_n.get_mpz_t(), 3, n);
    out.at_most_3n = out.value <= Rational(three_n);
    return out;
}

BoundReport nair_divisor_check(std::uint64_t k, std::uint64_t l) {
    Params params{{"k", std::to_string(k)}, {"l", std::to_string(l)}};
    if (l < 1 || l > k) return skipped_report("nair_divisor", params, "needs 1 <= l <= k");
    BigInt lhs = binomial(k, l) * static_cast<unsigned long>(l);
    BigInt L = lcm_upto(k);
    bool ok = mpz_divisible_p(L.get_mpz_t(), lhs.get_mpz_t()) != 0;
    return exact_report("nair_divisor", params, ok, brief(lhs) + " | " + brief(L));
}

}  // namespace lcmkit
