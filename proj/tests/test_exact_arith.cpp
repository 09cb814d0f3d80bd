#include <doctest.h>

#include <numeric>
#include <random>

#include "lcm/exact_arith.hpp"
#include "lcm/interval.hpp"

using namespace lcmkit;

namespace {

BigInt brute_lcm(const std::vector<std::uint64_t>& xs) {
    BigInt out = 1;
    for (auto x : xs) out = lcm(out, BigInt(static_cast<unsigned long>(x)));
    return out;
}

}  // namespace

TEST_CASE("lcm_factored examples") {
    CHECK(lcm_factored(std::vector<std::uint64_t>{4, 6}).value() == 12);
    CHECK(lcm_factored(std::vector<std::uint64_t>{2, 5, 10}).value() == 10);
    std::vector<std::uint64_t> first10(10);
    std::iota(first10.begin(), first10.end(), 1);
    CHECK(lcm_factored(first10).value() == brute_lcm(first10));
    CHECK(lcm_factored(first10).value() == 2520);
    CHECK_THROWS_AS(lcm_factored(std::vector<std::uint64_t>{}), std::domain_error);
}

TEST_CASE("gcd_factored examples") {
    CHECK(gcd_factored(std::vector<std::uint64_t>{12, 18}).value() == 6);
    CHECK(gcd_factored(std::vector<std::uint64_t>{7}).value() == 7);
    CHECK(gcd_factored(std::vector<std::uint64_t>{8, 27}).value() == 1);
    CHECK(gcd_factored(std::vector<std::uint64_t>{8, 27}).is_one());
    CHECK_THROWS_AS(gcd_factored(std::vector<FactoredInteger>{}), std::domain_error);
}

TEST_CASE("factored integers round-trip through their value") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        auto x = pick(rng);
        auto f = factor_small(x);
        CHECK(f.value() == static_cast<unsigned long>(x));
        for (auto [p, e] : f.powers()) {
            CHECK(e >= 1);
            CHECK(factor_small(p).powers().size() == 1);
        }
        CHECK(factor_small(f.value().get_ui()) == f);
    }
    CHECK(factor_small(1).is_one());
    CHECK_THROWS_AS(factor_small(0), std::domain_error);
}

TEST_CASE("lcm times gcd equals the product") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::uint64_t> pick(1, 1'000'000);
    for (int i = 0; i < 1000; ++i) {
        auto x = pick(rng), y = pick(rng);
        auto fx = factor_small(x), fy = factor_small(y);
        BigInt prod = BigInt(static_cast<unsigned long>(x)) * static_cast<unsigned long>(y);
        CHECK((lcm(fx, fy) * gcd(fx, fy)).value() == prod);
        CHECK(lcm(fx, fy).value() == lcm(BigInt(static_cast<unsigned long>(x)), BigInt(static_cast<unsigned long>(y))));
    }
}

TEST_CASE("divisibility of factored integers") {
    auto a = factor_small(12), b = factor_small(360), c = factor_small(7);
    CHECK(a.divides(b));
    CHECK_FALSE(b.divides(a));
    CHECK_FALSE(c.divides(b));
    CHECK(FactoredInteger().divides(c));
}

// prod x_i = lcm(S) * prod over subsets A of size >= 2 of gcd(A)^((-1)^|A|),
// exhaustively over lists of distinct integers.
TEST_CASE("inclusion-exclusion identity for lcm over subsets") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(1, 100);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t len = 1 + trial % 5;
        std::vector<std::uint64_t> xs;
        while (xs.size() < len) {
            auto v = pick(rng);
            if (std::find(xs.begin(), xs.end(), v) == xs.end()) xs.push_back(v);
        }
        Rational rhs = lcm_factored(xs).value();
        for (unsigned mask = 1; mask < (1u << len); ++mask) {
            unsigned size = static_cast<unsigned>(__builtin_popcount(mask));
            if (size < 2) continue;
            std::vector<std::uint64_t> sub;
            for (std::size_t i = 0; i < len; ++i)
                if (mask & (1u << i)) sub.push_back(xs[i]);
            BigInt g = gcd_factored(sub).value();
            if (size % 2 == 0)
                rhs *= g;
            else
                rhs /= g;
        }
        BigInt prod = 1;
        for (auto x : xs) prod *= static_cast<unsigned long>(x);
        CHECK(rhs == Rational(prod));
    }
}

TEST_CASE("quadratic ring products") {
    QuadraticInteger a{1, 1, 1}, b{1, 2, 1}, c3{1, 3, 1};
    CHECK(quad_product({a, b}) == QuadraticInteger{1, 1, 3});
    CHECK(quad_product({a, b, c3}) == QuadraticInteger{1, 0, 10});
    CHECK(quad_product({QuadraticInteger{5, 2, 0}}) == QuadraticInteger{5, 2, 0});
    CHECK_THROWS_AS(quad_product({QuadraticInteger{1, 1, 1}, QuadraticInteger{2, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(quad_product({}), std::domain_error);
}

TEST_CASE("norm is multiplicative") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> part(-10000, 10000);
    std::uniform_int_distribution<long> cpick(1, 20);
    for (int i = 0; i < 500; ++i) {
        long c = cpick(rng);
        QuadraticInteger z{c, part(rng), part(rng)}, w{c, part(rng), part(rng)};
        CHECK((z * w).norm() == z.norm() * w.norm());
        CHECK(z.norm() >= 0);
        CHECK((z.norm() == 0) == z.is_zero());
        // Products do not depend on grouping.
        QuadraticInteger v{c, part(rng), part(rng)};
        CHECK((z * w) * v == z * (w * v));
    }
}

TEST_CASE("rational multiples") {
    CHECK(is_multiple_of_rational(10, Rational(5, 4)));
    CHECK_FALSE(is_multiple_of_rational(10, Rational(3, 4)));
    CHECK(is_multiple_of_rational(0, Rational(7, 2)));
    CHECK_THROWS_AS(is_multiple_of_rational(10, Rational(0)), std::domain_error);
}

TEST_CASE("quadratic rationals") {
    QuadraticRational z(3, Rational(1, 2), Rational(-2, 3));
    auto one = z * z.inverse();
    CHECK(one == QuadraticRational(3, 1, 0));
    CHECK_THROWS_AS(QuadraticRational(3, 0, 0).inverse(), std::domain_error);
    // (x)(x-1) for x = 2 + sqrt(-1): (2+i)(1+i) = 1 + 3i.
    CHECK(falling_power(QuadraticRational(1, 2, 1), 2) == QuadraticRational(1, 1, 3));
    CHECK(falling_power(QuadraticRational(1, 2, 1), 0) == QuadraticRational(1, 1, 0));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(9, 4) == 126);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("log_compare examples") {
    auto v = log_compare(LogExpr::log_of(BigInt(2520)), LogExpr::log_of(BigInt(3), 10), Relation::LessEq, 64);
    CHECK(v.verdict == Verdict::Holds);
    CHECK(v.margin > 0);
    auto nair8 = log_compare(LogExpr::log_of(BigInt(840)), LogExpr::log_of(BigInt(2), 8), Relation::GreaterEq, 64);
    CHECK(nair8.verdict == Verdict::Holds);
    // Exact tie: never a wrong verdict.
    auto tie = log_compare(LogExpr::log_of(BigInt(8)), LogExpr::log_of(BigInt(2), 3), Relation::LessEq, 64, 256);
    CHECK(tie.verdict != Verdict::Fails);
    auto wrong = log_compare(LogExpr::log_of(BigInt(9)), LogExpr::log_of(BigInt(2), 3), Relation::LessEq, 64);
    CHECK(wrong.verdict == Verdict::Fails);
    CHECK(wrong.margin < 0);
    CHECK_THROWS_AS(LogExpr::log_of(BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(LogExpr::log_of(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("log_compare agrees with integer comparison") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<unsigned long> base(2, 50), expo(1, 60);
    for (int i = 0; i < 300; ++i) {
        unsigned long a = base(rng), b = base(rng), x = expo(rng), y = expo(rng);
        BigInt ax, by;
        mpz_ui_pow_ui(ax.get_mpz_t(), a, x);
        mpz_ui_pow_ui(by.get_mpz_t(), b, y);
        auto v = log_compare(LogExpr::log_of(BigInt(a), x), LogExpr::log_of(BigInt(b), y), Relation::LessEq);
        if (ax == by) {
            CHECK(v.verdict != Verdict::Fails);
        } else {
            CHECK(v.verdict == (ax < by ? Verdict::Holds : Verdict::Fails));
            // Raising precision never flips a decided verdict.
            auto hi = log_compare(LogExpr::log_of(BigInt(a), x), LogExpr::log_of(BigInt(b), y), Relation::LessEq, 512);
            CHECK(hi.verdict == v.verdict);
        }
    }
}
