#include "lcm/exact_arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

static_assert(sizeof(unsigned long) == 8, "GMP ui calls assume 64-bit unsigned long");

namespace lcmkit {

FactoredInteger::FactoredInteger(Powers powers) : powers_(std::move(powers)) {
    std::erase_if(powers_, [](const auto& kv) { return kv.second == 0; });
}

std::uint32_t FactoredInteger::valuation(std::uint64_t p) const {
    auto it = powers_.find(p);
    return it == powers_.end() ? 0 : it->second;
}

void FactoredInteger::mul_prime_power(std::uint64_t p, std::uint32_t e) {
    if (e != 0) powers_[p] += e;
}

void FactoredInteger::max_prime_power(std::uint64_t p, std::uint32_t e) {
    if (e == 0) return;
    auto& slot = powers_[p];
    slot = std::max(slot, e);
}

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& other) {
    for (auto [p, e] : other.powers_) powers_[p] += e;
    return *this;
}

bool FactoredInteger::divides(const FactoredInteger& other) const {
    for (auto [p, e] : powers_)
        if (other.valuation(p) < e) return false;
    return true;
}

BigInt FactoredInteger::value() const {
    BigInt out = 1, pk;
    for (auto [p, e] : powers_) {
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), e);
        out *= pk;
    }
    return out;
}

std::string FactoredInteger::to_string() const {
    if (powers_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [p, e] : powers_) {
        if (!first) os << " * ";
        first = false;
        os << p;
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

FactoredInteger lcm(const FactoredInteger& a, const FactoredInteger& b) {
    FactoredInteger out = a;
    for (auto [p, e] : b.powers()) out.max_prime_power(p, e);
    return out;
}

FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b) {
    FactoredInteger::Powers out;
    for (auto [p, e] : a.powers()) {
        auto f = std::min(e, b.valuation(p));
        if (f) out[p] = f;
    }
    return FactoredInteger(std::move(out));
}

FactoredInteger factor_small(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor_small: zero has no factorization");
    FactoredInteger out;
    for (std::uint64_t p : {2u, 3u}) {
        std::uint32_t e = 0;
        while (n % p == 0) n /= p, ++e;
        out.mul_prime_power(p, e);
    }
    for (std::uint64_t p = 5; p * p <= n; p += 6) {
        for (std::uint64_t q : {p, p + 2}) {
            std::uint32_t e = 0;
            while (n % q == 0) n /= q, ++e;
            out.mul_prime_power(q, e);
        }
    }
    if (n > 1) out.mul_prime_power(n, 1);
    return out;
}

namespace {

std::vector<FactoredInteger> factor_all(const std::vector<std::uint64_t>& xs, const char* who) {
    if (xs.empty()) throw std::domain_error(std::string(who) + ": empty list");
    std::vector<FactoredInteger> fs;
    fs.reserve(xs.size());
    for (auto x : xs) {
        if (x == 0) throw std::domain_error(std::string(who) + ": zero entry");
        fs.push_back(factor_small(x));
    }
    return fs;
}

}  // namespace

FactoredInteger lcm_factored(const std::vector<FactoredInteger>& xs) {
    if (xs.empty()) throw std::domain_error("lcm_factored: empty list");
    FactoredInteger out;
    for (const auto& x : xs) out = lcm(out, x);
    return out;
}

FactoredInteger lcm_factored(const std::vector<std::uint64_t>& xs) {
    return lcm_factored(factor_all(xs, "lcm_factored"));
}

FactoredInteger gcd_factored(const std::vector<FactoredInteger>& xs) {
    if (xs.empty()) throw std::domain_error("gcd_factored: empty list");
    FactoredInteger out = xs.front();
    for (const auto& x : xs) out = gcd(out, x);
    return out;
}

FactoredInteger gcd_factored(const std::vector<std::uint64_t>& xs) {
    return gcd_factored(factor_all(xs, "gcd_factored"));
}

BigInt lcm_big(const std::vector<BigInt>& xs) {
    BigInt out = 1;
    for (const auto& x : xs) mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), x.get_mpz_t());
    return out;
}

QuadraticInteger operator*(const QuadraticInteger& a, const QuadraticInteger& b) {
    if (a.c != b.c) throw std::invalid_argument("quadratic product: mixed c");
    return {a.c, a.re * b.re - a.c * a.im * b.im, a.re * b.im + a.im * b.re};
}

QuadraticInteger quad_product(const std::vector<QuadraticInteger>& zs) {
    if (zs.empty()) throw std::domain_error("quad_product: empty list");
    QuadraticInteger acc{zs.front().c, 1, 0};
    for (const auto& z : zs) acc = acc * z;
    return acc;
}

QuadraticRational::QuadraticRational(long c_, Rational re_, Rational im_)
    : c(c_), re(std::move(re_)), im(std::move(im_)) {}

QuadraticRational QuadraticRational::from(const QuadraticInteger& z) {
    return {z.c, Rational(z.re), Rational(z.im)};
}

QuadraticRational QuadraticRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(-c))");
    Rational n = norm();
    return {c, re / n, -im / n};
}

QuadraticRational& QuadraticRational::operator+=(const QuadraticRational& o) {
    if (c != o.c) throw std::invalid_argument("quadratic sum: mixed c");
    re += o.re;
    im += o.im;
    return *this;
}

QuadraticRational& QuadraticRational::operator-=(const QuadraticRational& o) {
    if (c != o.c) throw std::invalid_argument("quadratic difference: mixed c");
    re -= o.re;
    im -= o.im;
    return *this;
}

QuadraticRational& QuadraticRational::operator*=(const QuadraticRational& o) {
    if (c != o.c) throw std::invalid_argument("quadratic product: mixed c");
    Rational r = re * o.re - c * im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

QuadraticRational& QuadraticRational::operator*=(const Rational& q) {
    re *= q;
    im *= q;
    return *this;
}

bool is_multiple_of_rational(const BigInt& N, const Rational& q) {
    if (sgn(q) == 0) throw std::domain_error("is_multiple_of_rational: q = 0");
    BigInt num = N * q.get_den();
    return mpz_divisible_p(num.get_mpz_t(), q.get_num().get_mpz_t()) != 0;
}

BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    if (k > n) return 0;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

QuadraticRational falling_power(const QuadraticRational& x, unsigned k) {
    QuadraticRational out(x.c, 1, 0);
    QuadraticRational step = x;
    for (unsigned i = 0; i < k; ++i) {
        out *= step;
        step.re -= 1;
    }
    return out;
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace lcmkit
