#include <doctest.h>

#include <cmath>
#include <random>

#include "lcm/interval.hpp"

using namespace lcmkit;

namespace {

bool encloses(const Interval& x, double v) { return x.lo_d() <= v && v <= x.hi_d(); }

}  // namespace

TEST_CASE("enclosures contain the double result") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> pick(1, 1'000'000);
    for (int i = 0; i < 500; ++i) {
        long a = pick(rng), b = pick(rng);
        auto x = Interval::from_long(a, 64), y = Interval::from_long(b, 64);
        CHECK(encloses(x + y, static_cast<double>(a + b)));
        CHECK(encloses(x - y, static_cast<double>(a - b)));
        CHECK(encloses(x * y, static_cast<double>(a) * static_cast<double>(b)));
        auto q = x / y;
        CHECK(q.lo_d() <= static_cast<double>(a) / b * (1 + 1e-15));
        CHECK(q.hi_d() >= static_cast<double>(a) / b * (1 - 1e-15));
        auto l = log(x);
        CHECK(l.lo_d() <= std::log(static_cast<double>(a)) + 1e-12);
        CHECK(l.hi_d() >= std::log(static_cast<double>(a)) - 1e-12);
        CHECK(l.lo_d() <= l.hi_d());
    }
}

TEST_CASE("width shrinks with precision") {
    auto w = [](int prec) {
        auto x = log(Interval::from_long(3, prec));
        return x.hi_d() - x.lo_d();
    };
    CHECK(w(256) <= w(64));
    CHECK(w(64) < 1e-15);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(log(Interval::from_long(0, 64)), std::domain_error);
    CHECK_THROWS_AS(log(Interval::from_long(-3, 64)), std::domain_error);
    CHECK_THROWS_AS(sqrt(Interval::from_long(-1, 64)), std::domain_error);
    CHECK_THROWS_AS(Interval::from_long(1, 64) / Interval::from_long(0, 64), std::domain_error);
}

TEST_CASE("pi and rationals") {
    auto p = Interval::pi(128);
    CHECK(encloses(p, M_PI));
    auto third = Interval::from_q(Rational(1, 3), 128);
    CHECK(third.lo_d() <= 1.0 / 3 + 1e-17);
    CHECK(third.hi_d() >= 1.0 / 3 - 1e-17);
    auto r = pow(Interval::from_long(8, 128), Rational(2, 3));
    CHECK(r.lo_d() <= 4.0 + 1e-15);
    CHECK(r.hi_d() >= 4.0 - 1e-15);
}

TEST_CASE("certified comparisons") {
    auto a = Interval::from_long(2, 64), b = Interval::from_long(3, 64);
    CHECK(a.certainly_lt(b));
    CHECK_FALSE(b.certainly_le(a));
    CHECK(a.certainly_le(a));
    auto v = compare_enclosures(a, b, Relation::LessEq);
    CHECK(v.verdict == Verdict::Holds);
    CHECK(compare_enclosures(a, b, Relation::GreaterEq).verdict == Verdict::Fails);
}

TEST_CASE("verdict strings round-trip") {
    for (auto v : {Verdict::Holds, Verdict::Fails, Verdict::Inconclusive, Verdict::Skipped})
        CHECK(verdict_from_string(to_string(v)) == v);
    CHECK(std::string(to_string(Verdict::Holds)) == "HOLDS");
    CHECK_THROWS_AS(verdict_from_string("MAYBE"), std::invalid_argument);
}

TEST_CASE("LogExpr arithmetic") {
    auto e = LogExpr::log_of(BigInt(6)) - LogExpr::log_of(BigInt(2)) - LogExpr::log_of(BigInt(3));
    auto z = e.eval(128);
    CHECK(z.lo_d() <= 0.0);
    CHECK(z.hi_d() >= 0.0);
    CHECK(z.hi_d() - z.lo_d() < 1e-30);
    auto f = LogExpr::log_of(factor_small(360));
    auto g = LogExpr::log_of(BigInt(360));
    CHECK(std::abs(f.eval(128).mid_d() - g.eval(128).mid_d()) < 1e-15);
    CHECK(std::abs(LogExpr::log_of(BigInt(10)).scaled(3).eval(64).mid_d() - std::log(1000.0)) < 1e-12);
    CHECK(std::abs(LogExpr::constant(Rational(5, 2)).eval(64).mid_d() - 2.5) < 1e-15);
}

TEST_CASE("log cache matches direct evaluation") {
    LogCache cache(128);
    CHECK(cache.precision() == 128);
    for (std::uint64_t v : {2u, 3u, 97u, 2u}) {
        auto direct = log(Interval::from_long(static_cast<long>(v), 128));
        CHECK(cache.log_of(v).mid_d() == doctest::Approx(direct.mid_d()).epsilon(1e-15));
    }
    CHECK(cache.log_of(factor_small(12)).mid_d() == doctest::Approx(std::log(12.0)).epsilon(1e-15));
}
