#pragma once

#include <cstdint>
#include <vector>

#include "lcm/report.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {

// C(n,k)_a = a_n ... a_{n-k+1} / (a_1 ... a_k) for a_1..a_N (absolute values).
// Throws std::domain_error when the ratio is not an integer.
BigInt a_binomial_ratio(const std::vector<BigInt>& a, std::uint64_t n, std::uint64_t k);
// Product of u_d over d with floor(k/d) + floor((n-k)/d) < floor(n/d).
BigInt a_binomial_via_u(const std::vector<BigInt>& u, std::uint64_t n, std::uint64_t k);
// Both forms; std::logic_error if they disagree.
BigInt a_binomial(const SequenceSpec& spec, std::uint64_t n, std::uint64_t k);

// Row C(n,0)_a .. C(n,n)_a from a_1..a_N, N >= n.
std::vector<BigInt> a_binomial_row(const std::vector<BigInt>& a, std::uint64_t n);
std::vector<BigInt> a_binomial_row(const SequenceSpec& spec, std::uint64_t n);

bool floor_deficit(std::uint64_t n, std::uint64_t k, std::uint64_t d);
bool floor_deficit_exists(std::uint64_t n, std::uint64_t d);

// lcm of the binomial row n against lcm(1..n+1)/(n+1), via prime valuations.
BoundReport farhi_identity_check(std::uint64_t n);
// lcm of the a-binomial row n against lcm(a_1..a_{n+1})/a_{n+1}.
BoundReport general_identity_check(const SequenceSpec& spec, std::uint64_t n);
// lcm(a_1..a_n) against lcm{a_k C(n,k)_a : 1 <= k <= n}.
BoundReport lcm_row_multiples_check(const SequenceSpec& spec, std::uint64_t n);
// lcm(a_1..a_n) against gcd{C(n,k)_a lcm(a_1..a_k) : ceil(n/2) <= k <= n}.
BoundReport lcm_row_gcd_check(const SequenceSpec& spec, std::uint64_t n);

struct HansonC {
    Rational value;
    bool integral = false;
    bool lcm_divides = false;
    bool at_most_3n = false;
};

// n! / prod_i floor(n/b_i)! over the Sylvester sequence.
HansonC hanson_C(std::uint64_t n);

// l * C(k, l) divides lcm(1..k).
BoundReport nair_divisor_check(std::uint64_t k, std::uint64_t l);

// lcm(1..n) exactly.
BigInt lcm_upto(std::uint64_t n);

}  // namespace lcmkit
