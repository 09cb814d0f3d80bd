#include <doctest.h>

#include <random>

#include "lcm/interval.hpp"
#include "lcm/prime_toolkit.hpp"
#include "lcm/sequences.hpp"

using namespace lcmkit;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

BigInt direct_lcm(const std::vector<BigInt>& terms) {
    BigInt l = 1;
    for (const auto& t : terms) l = lcm(l, BigInt(abs(t)));
    return l;
}

std::vector<BigInt> fib(std::size_t n) { return generate(Lucas{1, -1}, n); }

}  // namespace

TEST_CASE("generate examples") {
    CHECK(fib(6) == big({1, 1, 2, 3, 5, 8}));
    CHECK(generate(Lucas{3, 2}, 4) == big({1, 3, 7, 15}));
    CHECK(generate(Lucas{3, 2}, 10) == generate(QPower{2}, 10));
    CHECK(generate(Quadratic{1}, 3) == big({2, 5, 10}));
    CHECK(generate(Arithmetic{1, 4}, 3) == big({1, 5, 9}));
    CHECK(generate(QuadraticGeneral{1, 1, 0}, 3) == big({1, 2, 5}));
    CHECK(generate(Polynomial{{1, 0, 1}}, 3) == big({2, 5, 10}));
    CHECK(generate(Naturals{}, 4) == big({1, 2, 3, 4}));
    CHECK(zero_based(Arithmetic{}));
    CHECK_FALSE(zero_based(Lucas{}));
}

TEST_CASE("spec text round-trips") {
    for (const char* text : {"nat", "fib", "ap:1,4", "quad:1", "quadgen:2,3,1", "lucas:3,2", "qpow:2", "poly:1,0,1"}) {
        auto spec = parse_spec(text);
        CHECK(spec_to_string(parse_spec(spec_to_string(spec))) == spec_to_string(spec));
    }
    CHECK(std::holds_alternative<Lucas>(parse_spec("fib")));
    CHECK_THROWS_AS(parse_spec("lucas:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spec("qpow:1"), std::invalid_argument);
}

TEST_CASE("Lucas closed form matches the recurrence") {
    for (auto [P, Q] : std::vector<std::pair<long, long>>{{1, -1}, {3, 2}, {2, -1}, {4, 1}, {5, 3}, {1, -3}}) {
        auto terms = generate(Lucas{P, Q}, 50);
        for (std::uint64_t n = 1; n <= 50; ++n) CHECK(lucas_closed_form(P, Q, n) == terms[n - 1]);
    }
}

// |alpha|^(n-2) <= |U_n| <= |alpha|^n.
TEST_CASE("Lucas terms sit between powers of the dominant root") {
    for (auto [P, Q] : std::vector<std::pair<long, long>>{{1, -1}, {3, 2}, {2, -1}, {4, 1}}) {
        auto terms = generate(Lucas{P, Q}, 200);
        auto log_alpha = LogExpr::custom([P = P, Q = Q](int prec) {
            auto disc = sqrt(Interval::from_long(P * P - 4 * Q, prec));
            auto alpha = (Interval::from_long(std::labs(P), prec) + disc) / Interval::from_long(2, prec);
            return log(alpha);
        });
        for (std::uint64_t n = 1; n <= 200; ++n) {
            auto lhs = LogExpr::log_of(BigInt(abs(terms[n - 1])));
            auto lo = log_compare(log_alpha.scaled(static_cast<long>(n) - 2), lhs, Relation::LessEq);
            auto hi = log_compare(lhs, log_alpha.scaled(static_cast<long>(n)), Relation::LessEq);
            CHECK(lo.verdict == Verdict::Holds);
            CHECK(hi.verdict == Verdict::Holds);
        }
    }
}

TEST_CASE("Sylvester sequence") {
    CHECK(sylvester(4) == big({2, 3, 7, 43}));
    CHECK(sylvester(5) == big({2, 3, 7, 43, 1807}));
    CHECK(sylvester(1) == big({2}));
    CHECK(sylvester(8) == sylvester_by_product(8));
    for (std::size_t n = 1; n <= 8; ++n) {
        auto b = sylvester(n);
        Rational sum = 0;
        BigInt prod = 1;
        for (const auto& x : b) sum += Rational(1, x), prod *= x;
        CHECK(sum + Rational(1, prod) == Rational(1));
    }
    CHECK_THROWS(sylvester(9));
}

TEST_CASE("extract_u examples") {
    CHECK(extract_u(generate(Naturals{}, 8)) == big({1, 2, 3, 2, 5, 1, 7, 2}));
    CHECK(extract_u(fib(6)) == big({1, 1, 2, 3, 5, 4}));
    CHECK(extract_u(generate(QPower{2}, 4)) == big({1, 3, 7, 5}));
    CHECK(extract_u(fib(6), UMethod::Moebius) == big({1, 1, 2, 3, 5, 4}));
    CHECK_THROWS_AS(extract_u(big({2, 1}), UMethod::Moebius), std::domain_error);
}

TEST_CASE("u methods agree and reproduce the lcm") {
    for (const char* text : {"nat", "fib", "lucas:3,2", "qpow:2", "qpow:3"}) {
        auto terms = generate(parse_spec(text), 300);
        auto u = extract_u(terms, UMethod::Nowicki);
        CHECK(u == extract_u(terms, UMethod::Moebius));
        CHECK(u == extract_u_by_prime_quotients(terms));
        CHECK(terms_from_u(u) == terms);
        CHECK(lcm_via_u(terms) == direct_lcm(terms));
        BigInt prod = 1;
        for (const auto& x : u) prod *= x;
        CHECK(prod == direct_lcm(terms));
    }
}

TEST_CASE("strong divisibility examples") {
    auto pow2 = is_strong_divisibility(big({2, 4, 8, 16}));
    CHECK_FALSE(pow2.holds);
    REQUIRE(pow2.witness);
    CHECK(*pow2.witness == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(is_strong_divisibility(fib(20)).holds);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(is_strong_divisibility(fib(n)).holds);
    CHECK(strong_divisibility_via_u(fib(20)).holds);
    CHECK_FALSE(strong_divisibility_via_u(big({2, 4, 8, 16})).holds);
    CHECK(strong_divisibility_family(Lucas{1, -1}));
    CHECK_FALSE(strong_divisibility_family(Quadratic{1}));
}

// Strong divisibility of a_n = prod_{d | n} u_d is equivalent to coprime u at incomparable indices.
TEST_CASE("u-criterion matches the direct test on random u") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> pick(1, 20);
    for (int trial = 0; trial < 3000; ++trial) {
        std::size_t len = 1 + trial % 6;
        std::vector<BigInt> u;
        for (std::size_t i = 0; i < len; ++i) u.emplace_back(pick(rng));
        auto a = terms_from_u(u);
        bool direct = is_strong_divisibility(a).holds;
        CHECK(direct == u_coprime_on_incomparable(u).holds);
        CHECK(direct == strong_divisibility_via_u(a).holds);
    }
}

TEST_CASE("champions") {
    CHECK(champions(generate(Naturals{}, 10), 2) == std::vector<std::size_t>{2, 4, 8});
    CHECK(champions(fib(12), 2) == std::vector<std::size_t>{3, 6, 12});
    CHECK(champions(generate(Naturals{}, 10), 13).empty());
    for (const char* text : {"nat", "fib", "qpow:3"}) {
        auto terms = generate(parse_spec(text), 120);
        auto u = extract_u(terms);
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            auto ch = champions(terms, p);
            std::vector<std::size_t> from_u;
            for (std::size_t m = 1; m <= u.size(); ++m)
                if (valuation(u[m - 1], p) > 0) from_u.push_back(m);
            CHECK(ch == from_u);
            for (std::size_t i = 1; i < ch.size(); ++i) CHECK(ch[i] % ch[i - 1] == 0);
        }
    }
}

TEST_CASE("lcm_via_u examples") {
    CHECK(lcm_via_u(generate(Naturals{}, 6)) == 60);
    CHECK(lcm_via_u(fib(6)) == 120);
    CHECK(lcm_via_u(big({37})) == 37);
}

TEST_CASE("Myerson divisor") {
    auto b = sylvester(5);
    CHECK(myerson_divisor(generate(Naturals{}, 6), b, 6) == Rational(60));
    auto ten = myerson_divisor(generate(Naturals{}, 10), b, 10);
    CHECK(ten == Rational(5040));
    CHECK(is_multiple_of_rational(ten.get_num(), Rational(2520)));
    auto f8 = myerson_divisor(fib(8), b, 8);
    CHECK(f8.get_den() == 1);
    CHECK(f8.get_num() % 840 == 0);
    CHECK_THROWS_AS(myerson_divisor(generate(Naturals{}, 6), big({2, 2, 3}), 6), std::invalid_argument);
    for (const char* text : {"nat", "fib"}) {
        auto terms = generate(parse_spec(text), 500);
        for (std::uint64_t n : {1u, 7u, 43u, 100u, 257u, 500u}) {
            std::vector<BigInt> prefix(terms.begin(), terms.begin() + static_cast<long>(n));
            auto q = myerson_divisor(prefix, b, n);
            CHECK(q.get_den() == 1);
            CHECK(q.get_num() % direct_lcm(prefix) == 0);
        }
    }
}
