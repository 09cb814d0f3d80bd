#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lcm/exact_arith.hpp"

namespace lcmkit {

struct Naturals {};
struct Arithmetic { std::int64_t u0 = 1, r = 1; };              // u_k = u0 + k r, k >= 0
struct Quadratic { std::int64_t c = 1; };                       // k^2 + c, k >= 1
struct QuadraticGeneral { std::int64_t a = 1, b = 1, t = 0; };  // a k (k + t) + b, k >= 0
struct Lucas { std::int64_t P = 1, Q = -1; };                   // U_1, U_2, ...
struct QPower { std::int64_t q = 2; };                          // (q^n - 1)/(q - 1), n >= 1
struct Polynomial { std::vector<std::int64_t> coeffs; };        // f(1), f(2), ...; low degree first
struct Explicit { std::vector<BigInt> terms; };

using SequenceSpec =
    std::variant<Naturals, Arithmetic, Quadratic, QuadraticGeneral, Lucas, QPower, Polynomial, Explicit>;

// Text forms: nat, fib, ap:u0,r, quad:c, quadgen:a,b,t, lucas:P,Q, qpow:q,
// poly:c0,c1,..., explicit:t1,t2,...  Throws std::invalid_argument.
SequenceSpec parse_spec(const std::string& text);
std::string spec_to_string(const SequenceSpec& spec);

// True for 0-based families (Arithmetic, QuadraticGeneral).
bool zero_based(const SequenceSpec& spec);
// Families whose absolute values form a strong divisibility sequence.
bool strong_divisibility_family(const SequenceSpec& spec);

// First `count` terms in the family's own indexing. Lucas terms keep their sign.
std::vector<BigInt> generate(const SequenceSpec& spec, std::size_t count);

// (alpha^n - beta^n)/(alpha - beta) evaluated exactly in Z[sqrt(P^2 - 4Q)].
BigInt lucas_closed_form(std::int64_t P, std::int64_t Q, std::uint64_t n);

// b_1 = 2, b_{k+1} = b_k^2 - b_k + 1. count in [0, 8].
std::vector<BigInt> sylvester(std::size_t count);
// Same sequence through b_{k+1} = b_1 ... b_k + 1.
std::vector<BigInt> sylvester_by_product(std::size_t count);

enum class UMethod { Nowicki, Moebius };

// u_1..u_n for a_1..a_n (absolute values are taken). Moebius throws
// std::domain_error when a quotient is not an integer.
std::vector<BigInt> extract_u(const std::vector<BigInt>& terms, UMethod method = UMethod::Nowicki);
// u_n = a_n / lcm(a_{n/q} : q prime, q | n).
std::vector<BigInt> extract_u_by_prime_quotients(const std::vector<BigInt>& terms);

struct StrongDivisibility {
    bool holds = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // 1-based indices
};

// gcd(a_i, a_j) = a_gcd(i,j) for every pair.
StrongDivisibility is_strong_divisibility(const std::vector<BigInt>& terms);
// Same property through the u-sequence: integral u and pairwise coprime u at
// indices where neither divides the other.
StrongDivisibility strong_divisibility_via_u(const std::vector<BigInt>& terms);
// Coprimality of u at incomparable indices.
StrongDivisibility u_coprime_on_incomparable(const std::vector<BigInt>& u);
// a_n = prod_{d | n} u_d.
std::vector<BigInt> terms_from_u(const std::vector<BigInt>& u);

// Indices m (1-based) where v_p(a_m) exceeds every earlier valuation; m = 1 counts when v_p(a_1) > 0.
std::vector<std::size_t> champions(const std::vector<BigInt>& terms, std::uint64_t p);

// lcm(a_1..a_n) as the product of the u-sequence.
BigInt lcm_via_u(const std::vector<BigInt>& terms);

// (a_1...a_n) / prod_j prod_{k <= n/b_j} a_k. Sum of 1/b_j > 1 throws std::invalid_argument.
Rational myerson_divisor(const std::vector<BigInt>& terms, const std::vector<BigInt>& b, std::uint64_t n);

}  // namespace lcmkit
