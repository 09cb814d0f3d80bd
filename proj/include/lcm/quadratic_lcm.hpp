#pragma once

#include <cstdint>
#include <vector>

#include "lcm/exact_arith.hpp"
#include "lcm/prime_toolkit.hpp"
#include "lcm/report.hpp"

namespace lcmkit {

// lcm(k^2 + c : m <= k <= n). Throws std::invalid_argument unless 1 <= m <= n, c >= 1.
FactoredInteger L_quadratic(const PrimeTable& t, std::int64_t c, std::int64_t m, std::int64_t n);

// gcd(|re|, |im|); z = 0 throws std::domain_error.
BigInt h_c(const QuadraticInteger& z);

// prod_{l=m}^{n} (l + sqrt(-c)).
QuadraticInteger shifted_product(std::int64_t c, std::int64_t m, std::int64_t n);

// c * prod_{l=1}^{k} (l^2 + 4c).
BigInt bezout_denominator(std::int64_t c, std::int64_t k);

// h_c of the shifted product divides c * prod_{l=1}^{n-m} (l^2 + 4c).
BoundReport hc_multiple_check(std::int64_t c, std::int64_t m, std::int64_t n);

// prod (k^2 + c) / (c (n-m)! prod_{k=1}^{n-m} (k^2 + 4c)).
Rational quadratic_divisor(std::int64_t c, std::int64_t m, std::int64_t n);
// L_{c,m,n} is a multiple of the rational above.
BoundReport quadratic_divisor_check(const PrimeTable& t, std::int64_t c, std::int64_t m, std::int64_t n);

// N is a multiple of z in Z[sqrt(-c)], tested by dividing through the conjugate.
bool ring_multiple(const BigInt& N, const QuadraticInteger& z);
// Same, through norm(z)/gcd(re, im) dividing N.
bool ring_multiple_by_norm(const BigInt& N, const QuadraticInteger& z);

inline constexpr std::int64_t kBezoutCap = 64;

struct BezoutCoefficients {
    std::int64_t c = 1;
    std::int64_t k = 0;
    std::vector<QuadraticRational> theta;  // theta[l], l = 0..k
};

// Finite-difference definition: theta_l = (1/l!) sum_j (-1)^(l-j) C(l,j) / P_k(j + sqrt(-c)).
BezoutCoefficients bezout_coefficients(std::int64_t c, std::int64_t k, std::int64_t cap = kBezoutCap);
// Closed form (-1)^(k+l) C(k+l,l) / (2 sqrt(-c) (k - 2 sqrt(-c))^{k falling} (l + 2 sqrt(-c))^{l falling}).
QuadraticRational bezout_theta_closed(std::int64_t c, std::int64_t k, std::int64_t l);
// P_k(X) = prod_{i=0}^{k} (X - i + sqrt(-c)) evaluated at x.
QuadraticRational P_k(std::int64_t c, std::int64_t k, const QuadraticRational& x);
// sigma_k(s + sqrt(-c)) = sum_l theta_l s^{l falling}.
QuadraticRational sigma_at_shift(const BezoutCoefficients& b, std::int64_t s);

// Integer polynomials (low degree first) behind the Bezout identity r A - c s B = d.
struct BezoutPolynomials {
    BigInt d;
    std::vector<BigInt> r, s, A, B;
    bool integral = false;  // 2 d sigma_k has coefficients in Z[sqrt(-c)]
};
BezoutPolynomials bezout_polynomials(const BezoutCoefficients& b);
// r A - c s B, expanded.
std::vector<BigInt> bezout_combination(const BezoutPolynomials& p, std::int64_t c);

// Window tests with exact integer arithmetic: n - n^{2/3}/2 compared with m
// is the sign of 8(n-m)^3 - n^2.
bool wide_window(std::int64_t m, std::int64_t n);    // m <= n - n^{2/3}/2
bool narrow_window(std::int64_t m, std::int64_t n);  // n - n^{2/3}/2 <= m <= n
// floor(n^{2/3} / 2).
std::int64_t half_n_two_thirds_floor(std::int64_t n);

Interval log_lambda1(std::int64_t c, int prec);
Interval log_lambda2(std::int64_t c, int prec);
Interval log_lambda3(std::int64_t c, int prec);

// Logs of the closed-form lower bounds for L_{c,m,n}.
Interval log_factorial_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec);
Interval log_smooth_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec);  // m < n
Interval log_wide_lower(std::int64_t c, std::int64_t n, int prec);
Interval log_narrow_lower(std::int64_t c, std::int64_t m, std::int64_t n, int prec);

// All closed-form lower bounds at one instance; non-applicable ones are SKIPPED.
// Ids: quad_factorial_lower, quad_smooth_lower, quad_wide_lower, quad_narrow_lower, oon, oon_binomial.
std::vector<BoundReport> quadratic_lower_bounds(const PrimeTable& t, std::int64_t c, std::int64_t m,
                                                std::int64_t n, int prec = kDefaultPrecision);

}  // namespace lcmkit
