#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcm/exact_arith.hpp"
#include "lcm/interval.hpp"

namespace lcmkit {

inline constexpr std::uint64_t kDefaultSieveLimit = 2'000'000;

// Linear sieve up to a fixed limit.
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit = kDefaultSieveLimit);

    std::uint64_t limit() const { return limit_; }
    const std::vector<std::uint32_t>& primes() const { return primes_; }
    // Requires 2 <= n <= limit.
    std::uint32_t smallest_factor(std::uint64_t n) const { return spf_[n]; }
    // Exact for n <= limit^2.
    bool is_prime(std::uint64_t n) const;
    // pi(x) for x <= limit.
    std::uint64_t pi(std::uint64_t x) const;

    // Factorization valid for n <= limit^2; larger n throws std::range_error
    // unless the trial division happens to leave a cofactor of 1.
    FactoredInteger factor(std::uint64_t n) const;
    FactoredInteger factor(const BigInt& n) const;
    // Appends (p, e) pairs to out; avoids map allocation in hot loops.
    void factor_into(std::uint64_t n, std::vector<std::pair<std::uint64_t, std::uint32_t>>& out) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> primes_;
    std::vector<std::uint32_t> spf_;
};

enum class ChebyshevKind { Theta, Psi };
enum class ProgressionKind { Theta, Pi };

// theta(x) or psi(x) with x floored; x > limit throws std::range_error.
Interval chebyshev(const PrimeTable& t, ChebyshevKind kind, std::uint64_t x, int prec = kDefaultPrecision);
Interval chebyshev(const PrimeTable& t, ChebyshevKind kind, double x, int prec = kDefaultPrecision);

// Restricted to primes p = residue (mod modulus), 0 <= residue < modulus after reduction.
Interval chebyshev_progression(const PrimeTable& t, ProgressionKind kind, std::uint64_t x,
                               std::uint64_t modulus, std::uint64_t residue,
                               int prec = kDefaultPrecision);
std::uint64_t prime_count_progression(const PrimeTable& t, std::uint64_t x, std::uint64_t modulus,
                                      std::uint64_t residue);

// Exponent of p in n!; p must be prime (std::invalid_argument otherwise).
std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t n);
// Exponent of p in C(n, k) through factorial valuations.
std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);
// Number of borrows when subtracting k from n in base p. k > n throws std::invalid_argument.
std::uint64_t kummer_borrows(std::uint64_t n, std::uint64_t k, std::uint64_t p);
// max over k of v_p(C(n, k)) together with the maximizing k = p^N - 1.
std::pair<std::uint64_t, std::uint64_t> max_binomial_valuation(std::uint64_t n, std::uint64_t p);

// Exponent of p in n (n > 0).
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);
std::uint32_t valuation(const BigInt& n, std::uint64_t p);

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime_trial(std::uint64_t n);

}  // namespace lcmkit
