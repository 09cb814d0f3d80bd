#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lcmkit {

using BigInt = mpz_class;
using Rational = mpq_class;

// Integer as a map prime -> exponent. The empty map is 1; zero is not representable.
class FactoredInteger {
public:
    using Powers = std::map<std::uint64_t, std::uint32_t>;

    FactoredInteger() = default;
    explicit FactoredInteger(Powers powers);

    const Powers& powers() const { return powers_; }
    std::uint32_t valuation(std::uint64_t p) const;
    bool is_one() const { return powers_.empty(); }

    // Multiply by p^e.
    void mul_prime_power(std::uint64_t p, std::uint32_t e);
    // Raise the exponent of p to at least e.
    void max_prime_power(std::uint64_t p, std::uint32_t e);

    FactoredInteger& operator*=(const FactoredInteger& other);
    friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }

    bool divides(const FactoredInteger& other) const;
    BigInt value() const;
    std::string to_string() const;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    Powers powers_;
};

FactoredInteger lcm(const FactoredInteger& a, const FactoredInteger& b);
FactoredInteger gcd(const FactoredInteger& a, const FactoredInteger& b);

// Trial division; fine for values up to ~1e12. Throws std::domain_error on 0.
FactoredInteger factor_small(std::uint64_t n);

// Throw std::domain_error on an empty list or a zero entry.
FactoredInteger lcm_factored(const std::vector<std::uint64_t>& xs);
FactoredInteger lcm_factored(const std::vector<FactoredInteger>& xs);
FactoredInteger gcd_factored(const std::vector<std::uint64_t>& xs);
FactoredInteger gcd_factored(const std::vector<FactoredInteger>& xs);

BigInt lcm_big(const std::vector<BigInt>& xs);

// re + im*sqrt(-c), c >= 1.
struct QuadraticInteger {
    long c = 1;
    BigInt re = 0;
    BigInt im = 0;

    BigInt norm() const { return re * re + c * im * im; }
    QuadraticInteger conj() const { return {c, re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    friend bool operator==(const QuadraticInteger& a, const QuadraticInteger& b) {
        return a.c == b.c && a.re == b.re && a.im == b.im;
    }
};

QuadraticInteger operator*(const QuadraticInteger& a, const QuadraticInteger& b);

// Throws std::invalid_argument on mixed c, std::domain_error on an empty list.
QuadraticInteger quad_product(const std::vector<QuadraticInteger>& zs);

// Element of Q(sqrt(-c)) as an exact pair of rationals.
struct QuadraticRational {
    long c = 1;
    Rational re = 0;
    Rational im = 0;

    QuadraticRational() = default;
    QuadraticRational(long c_, Rational re_, Rational im_);
    static QuadraticRational from(const QuadraticInteger& z);

    Rational norm() const { return re * re + c * im * im; }
    QuadraticRational conj() const { return {c, re, -im}; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    // Throws std::domain_error on zero.
    QuadraticRational inverse() const;

    QuadraticRational& operator+=(const QuadraticRational& o);
    QuadraticRational& operator-=(const QuadraticRational& o);
    QuadraticRational& operator*=(const QuadraticRational& o);
    QuadraticRational& operator*=(const Rational& q);
    friend QuadraticRational operator+(QuadraticRational a, const QuadraticRational& b) { return a += b; }
    friend QuadraticRational operator-(QuadraticRational a, const QuadraticRational& b) { return a -= b; }
    friend QuadraticRational operator*(QuadraticRational a, const QuadraticRational& b) { return a *= b; }
    friend QuadraticRational operator*(QuadraticRational a, const Rational& q) { return a *= q; }
    friend QuadraticRational operator/(const QuadraticRational& a, const QuadraticRational& b) {
        return a * b.inverse();
    }
    friend bool operator==(const QuadraticRational& a, const QuadraticRational& b) {
        return a.c == b.c && a.re == b.re && a.im == b.im;
    }
};

// True when N / q is an integer. q == 0 throws std::domain_error.
bool is_multiple_of_rational(const BigInt& N, const Rational& q);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

// Falling power x(x-1)...(x-k+1) of an element of Q(sqrt(-c)).
QuadraticRational falling_power(const QuadraticRational& x, unsigned k);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& q);

}  // namespace lcmkit
