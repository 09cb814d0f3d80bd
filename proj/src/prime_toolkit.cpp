#include "lcm/prime_toolkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcmkit {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(std::max<std::uint64_t>(limit, 2)) {
    spf_.assign(limit_ + 1, 0);
    for (std::uint64_t i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(static_cast<std::uint32_t>(i));
        }
        for (auto p : primes_) {
            std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > spf_[i] || m > limit_) break;
            spf_[m] = p;
        }
    }
}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n <= limit_) return spf_[n] == n;
    if (n / limit_ > limit_) throw std::range_error("is_prime: beyond limit^2");
    for (auto p : primes_) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p == 0) return false;
    }
    return true;
}

std::uint64_t PrimeTable::pi(std::uint64_t x) const {
    if (x > limit_) throw std::range_error("pi: x beyond sieve limit");
    return static_cast<std::uint64_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

void PrimeTable::factor_into(std::uint64_t n,
                             std::vector<std::pair<std::uint64_t, std::uint32_t>>& out) const {
    if (n == 0) throw std::domain_error("factor: zero");
    if (n > limit_) {
        for (auto p : primes_) {
            if (n <= limit_) break;
            if (static_cast<std::uint64_t>(p) * p > n) {
                out.emplace_back(n, 1);
                return;
            }
            if (n % p == 0) {
                std::uint32_t e = 0;
                while (n % p == 0) n /= p, ++e;
                out.emplace_back(p, e);
            }
        }
        if (n > limit_) throw std::range_error("factor: cofactor beyond sieve reach");
    }
    while (n > 1) {
        std::uint32_t p = spf_[n], e = 0;
        while (n % p == 0) n /= p, ++e;
        out.emplace_back(p, e);
    }
}

FactoredInteger PrimeTable::factor(std::uint64_t n) const {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> pe;
    factor_into(n, pe);
    FactoredInteger out;
    for (auto [p, e] : pe) out.mul_prime_power(p, e);
    return out;
}

FactoredInteger PrimeTable::factor(const BigInt& n) const {
    if (n <= 0) throw std::domain_error("factor: non-positive");
    if (n.fits_ulong_p()) return factor(static_cast<std::uint64_t>(n.get_ui()));
    BigInt m = n;
    FactoredInteger out;
    for (auto p : primes_) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            std::uint32_t e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            out.mul_prime_power(p, e);
            if (m.fits_ulong_p()) {
                std::uint64_t r = m.get_ui();
                if (r == 1 || r / limit_ <= limit_) {
                    if (r > 1) out *= factor(r);
                    return out;
                }
            }
        }
    }
    throw std::range_error("factor: cofactor beyond sieve reach");
}

namespace {

void require_range(const PrimeTable& t, std::uint64_t x) {
    if (x > t.limit()) throw std::range_error("chebyshev: x beyond sieve limit");
}

Interval log_u(std::uint64_t p, int prec) {
    return log(Interval::from_z(BigInt(static_cast<unsigned long>(p)), prec));
}

}  // namespace

Interval chebyshev(const PrimeTable& t, ChebyshevKind kind, std::uint64_t x, int prec) {
    require_range(t, x);
    Interval acc(prec);
    for (auto p : t.primes()) {
        if (p > x) break;
        long e = 1;
        if (kind == ChebyshevKind::Psi)
            for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= x; q *= p) ++e;
        acc += log_u(p, prec) * Interval::from_long(e, prec);
    }
    return acc;
}

Interval chebyshev(const PrimeTable& t, ChebyshevKind kind, double x, int prec) {
    if (!(x >= 0)) return Interval(prec);
    return chebyshev(t, kind, static_cast<std::uint64_t>(std::floor(x)), prec);
}

Interval chebyshev_progression(const PrimeTable& t, ProgressionKind kind, std::uint64_t x,
                               std::uint64_t modulus, std::uint64_t residue, int prec) {
    if (modulus == 0) throw std::invalid_argument("progression: modulus 0");
    require_range(t, x);
    residue %= modulus;
    if (kind == ProgressionKind::Pi)
        return Interval::from_long(static_cast<long>(prime_count_progression(t, x, modulus, residue)), prec);
    Interval acc(prec);
    for (auto p : t.primes()) {
        if (p > x) break;
        if (p % modulus == residue) acc += log_u(p, prec);
    }
    return acc;
}

std::uint64_t prime_count_progression(const PrimeTable& t, std::uint64_t x, std::uint64_t modulus,
                                      std::uint64_t residue) {
    if (modulus == 0) throw std::invalid_argument("progression: modulus 0");
    require_range(t, x);
    residue %= modulus;
    std::uint64_t n = 0;
    for (auto p : t.primes()) {
        if (p > x) break;
        if (p % modulus == residue) ++n;
    }
    return n;
}

bool is_prime_trial(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
        if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
}

std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t n) {
    if (!is_prime_trial(p)) throw std::invalid_argument("factorial_valuation: p is not prime");
    std::uint64_t s = 0;
    while (n) {
        n /= p;
        s += n;
    }
    return s;
}

std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) throw std::invalid_argument("binomial_valuation: k > n");
    return factorial_valuation(p, n) - factorial_valuation(p, k) - factorial_valuation(p, n - k);
}

std::uint64_t kummer_borrows(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
    if (k > n) throw std::invalid_argument("kummer_borrows: k > n");
    if (p < 2) throw std::invalid_argument("kummer_borrows: base < 2");
    std::uint64_t borrows = 0, carry = 0;
    while (n || k) {
        std::int64_t a = static_cast<std::int64_t>(n % p), b = static_cast<std::int64_t>(k % p);
        carry = (a - b - static_cast<std::int64_t>(carry) < 0) ? 1 : 0;
        borrows += carry;
        n /= p;
        k /= p;
    }
    return borrows;
}

std::pair<std::uint64_t, std::uint64_t> max_binomial_valuation(std::uint64_t n, std::uint64_t p) {
    if (!is_prime_trial(p)) throw std::invalid_argument("max_binomial_valuation: p is not prime");
    // n = c_N p^N + ... + c_0 with c_N != 0.
    std::vector<std::uint64_t> digits;
    for (std::uint64_t m = n; m; m /= p) digits.push_back(m % p);
    if (digits.empty()) return {0, 0};
    std::uint64_t N = digits.size() - 1;
    std::uint64_t witness = 1;
    for (std::uint64_t i = 0; i < N; ++i) witness *= p;
    --witness;
    std::uint64_t i0 = 0;
    while (i0 < digits.size() && digits[i0] == p - 1) ++i0;
    if (i0 == digits.size()) return {0, witness};
    return {N - i0, witness};
}

std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    std::uint32_t e = 0;
    while (n % p == 0) n /= p, ++e;
    return e;
}

std::uint32_t valuation(const BigInt& n, std::uint64_t p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    BigInt q(static_cast<unsigned long>(p)), rest;
    return static_cast<std::uint32_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t()));
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t out = n;
    const auto f = factor_small(n);
    for (auto [p, e] : f.powers()) out = out / p * (p - 1);
    return out;
}

int moebius(std::uint64_t n) {
    if (n == 0) throw std::domain_error("moebius of zero");
    int s = 1;
    const auto f = factor_small(n);
    for (auto [p, e] : f.powers()) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    const auto f = factor_small(n);
    for (auto [p, e] : f.powers()) {
        std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (std::uint32_t i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lcmkit
