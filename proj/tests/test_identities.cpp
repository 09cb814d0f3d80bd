#include <doctest.h>

#include "lcm/identities.hpp"
#include "lcm/prime_toolkit.hpp"

using namespace lcmkit;

namespace {

const char* const kStrongSpecs[] = {"nat", "fib", "lucas:3,2", "qpow:2", "qpow:3"};

std::vector<BigInt> terms(const char* text, std::size_t n) { return generate(parse_spec(text), n); }

}  // namespace

TEST_CASE("a-binomial examples") {
    CHECK(a_binomial(Lucas{1, -1}, 5, 2) == 15);
    CHECK(a_binomial(Naturals{}, 6, 3) == 20);
    CHECK(a_binomial(Lucas{1, -1}, 9, 0) == 1);
    CHECK(a_binomial(Naturals{}, 9, 9) == 1);
    CHECK(a_binomial_row(Lucas{1, -1}, 4) == std::vector<BigInt>{1, 3, 6, 3, 1});
    CHECK_THROWS_AS(a_binomial_ratio(std::vector<BigInt>{2, 3, 5}, 3, 1), std::domain_error);
}

TEST_CASE("rows are symmetric and match the u-product form") {
    for (const char* text : kStrongSpecs) {
        auto a = terms(text, 100);
        auto u = extract_u(a);
        for (std::uint64_t n = 0; n <= 100; n += (n < 20 ? 1 : 9)) {
            auto row = a_binomial_row(a, n);
            REQUIRE(row.size() == n + 1);
            for (std::uint64_t k = 0; k <= n; ++k) {
                CHECK(row[k] == row[n - k]);
                CHECK(row[k] > 0);
                CHECK(row[k] == a_binomial_via_u(u, n, k));
                CHECK(row[k] == a_binomial_ratio(a, n, k));
            }
        }
    }
}

// a_k C(n+1,k) = a_{n+1} C(n,k-1) and C(n,k) C(k,l) = C(n,l) C(n-l,k-l).
TEST_CASE("Pascal-type relations") {
    for (const char* text : kStrongSpecs) {
        auto a = terms(text, 61);
        std::vector<std::vector<BigInt>> rows;
        for (std::uint64_t n = 0; n <= 61; ++n) rows.push_back(a_binomial_row(a, n));
        for (std::uint64_t n = 0; n < 61; ++n)
            for (std::uint64_t k = 1; k <= n + 1; ++k) CHECK(abs(a[k - 1]) * rows[n + 1][k] == abs(a[n]) * rows[n][k - 1]);
        for (std::uint64_t n = 0; n <= 60; n += 3)
            for (std::uint64_t k = 0; k <= n; ++k)
                for (std::uint64_t l = 0; l <= k; ++l) CHECK(rows[n][k] * rows[k][l] == rows[n][l] * rows[n - l][k - l]);
    }
}

TEST_CASE("floor deficit exists exactly when d does not divide n + 1") {
    for (std::uint64_t n = 1; n <= 200; ++n)
        for (std::uint64_t d = 1; d <= n; ++d) {
            bool any = false;
            for (std::uint64_t k = 0; k <= n; ++k) any = any || floor_deficit(n, k, d);
            CHECK(any == floor_deficit_exists(n, d));
            CHECK(any == ((n + 1) % d != 0));
        }
}

TEST_CASE("ordinary row valuations are Kummer borrows") {
    auto a = terms("nat", 80);
    for (std::uint64_t n : {10u, 37u, 64u, 80u}) {
        auto row = a_binomial_row(a, n);
        for (std::uint64_t k = 0; k <= n; ++k)
            for (std::uint64_t p : {2u, 3u, 5u, 7u}) CHECK(valuation(row[k], p) == kummer_borrows(n, k, p));
    }
}

TEST_CASE("Farhi identity") {
    for (std::uint64_t n : {0u, 3u, 6u}) {
        auto r = farhi_identity_check(n);
        CHECK(r.verdict == Verdict::Holds);
        CHECK(r.exact);
    }
    for (std::uint64_t n = 0; n <= 300; ++n) CHECK(farhi_identity_check(n).verdict == Verdict::Holds);
    CHECK(lcm_upto(10) == 2520);
    CHECK(lcm_upto(7) / 7 == 60);
}

TEST_CASE("general identity") {
    CHECK(general_identity_check(Lucas{1, -1}, 4).verdict == Verdict::Holds);
    CHECK(general_identity_check(QPower{2}, 2).verdict == Verdict::Holds);
    CHECK(general_identity_check(Lucas{1, -1}, 0).verdict == Verdict::Holds);
    for (const char* text : kStrongSpecs)
        for (std::uint64_t n = 0; n <= 60; ++n) CHECK(general_identity_check(parse_spec(text), n).verdict == Verdict::Holds);
    for (std::uint64_t n = 0; n <= 60; ++n)
        CHECK(general_identity_check(Naturals{}, n).verdict == farhi_identity_check(n).verdict);
}

TEST_CASE("lcm as multiples and as a gcd over the row") {
    CHECK(lcm_row_multiples_check(Naturals{}, 6).verdict == Verdict::Holds);
    CHECK(lcm_row_multiples_check(Lucas{1, -1}, 6).verdict == Verdict::Holds);
    CHECK(lcm_row_multiples_check(Lucas{1, -1}, 1).verdict == Verdict::Holds);
    CHECK(lcm_row_gcd_check(Naturals{}, 4).verdict == Verdict::Holds);
    CHECK(lcm_row_gcd_check(Lucas{1, -1}, 4).verdict == Verdict::Holds);
    CHECK(lcm_row_gcd_check(Naturals{}, 1).verdict == Verdict::Holds);
    for (const char* text : kStrongSpecs)
        for (std::uint64_t n = 1; n <= 60; ++n) {
            CHECK(lcm_row_multiples_check(parse_spec(text), n).verdict == Verdict::Holds);
            CHECK(lcm_row_gcd_check(parse_spec(text), n).verdict == Verdict::Holds);
        }
    // A sequence that is not strong divisibility breaks the identity.
    auto bad = lcm_row_multiples_check(Explicit{{2, 4, 8, 16}}, 4);
    CHECK(bad.verdict != Verdict::Holds);
}

TEST_CASE("Hanson C(n)") {
    CHECK(hanson_C(6).value == Rational(60));
    CHECK(hanson_C(2).value == Rational(2));
    CHECK(hanson_C(1).value == Rational(1));
    for (std::uint64_t n = 1; n <= 400; ++n) {
        auto h = hanson_C(n);
        CHECK(h.integral);
        CHECK(h.lcm_divides);
        CHECK(h.at_most_3n);
    }
}

TEST_CASE("Nair divisor") {
    CHECK(nair_divisor_check(6, 3).verdict == Verdict::Holds);
    CHECK(nair_divisor_check(5, 1).verdict == Verdict::Holds);
    CHECK(nair_divisor_check(8, 4).verdict == Verdict::Holds);
    for (std::uint64_t k = 1; k <= 120; ++k)
        for (std::uint64_t l = 1; l <= k; ++l) CHECK(nair_divisor_check(k, l).verdict == Verdict::Holds);
}
