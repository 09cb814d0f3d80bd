#include <doctest.h>

#include <cmath>
#include <set>

#include "lcm/bounds_catalog.hpp"

using namespace lcmkit;

namespace {

const PrimeTable& table() {
    static const PrimeTable t(200'000);
    return t;
}

CheckContext ctx() { return CheckContext{table()}; }

// Small values per parameter name; enough to reach every check's window.
const std::map<std::string, std::vector<std::string>>& small_values() {
    static const std::map<std::string, std::vector<std::string>> v{
        {"x", {"1..60", "1000", "1500"}}, {"n", {"0..30", "1000"}}, {"r", {"1..4"}},   {"u0", {"1..3"}},
        {"a", {"1..3"}},                  {"b", {"1..4"}},          {"t", {"0..2"}},   {"c", {"1,2"}},
        {"m", {"1..4"}},                  {"k", {"0..6"}},          {"l", {"0..4"}},   {"p", {"2,3,5"}},
        {"P", {"1,3"}},                   {"Q", {"-1,2"}},          {"f", {"poly:1,0,1", "poly:0,1"}},
        {"seq", {"nat", "fib", "qpow:2"}},
    };
    return v;
}

Grid grid_for(const CheckSpec& spec) {
    Grid g;
    for (const auto& p : spec.params) {
        auto values = small_values().at(p.name);
        // Large single points only where the window needs them.
        if ((p.name == "n" && spec.id != "factorial_3mod4_sandwich") || (p.name == "x" && spec.id != "bennett"))
            values.pop_back();
        if (p.name == "x" && spec.id != "bennett") values.pop_back();
        g[p.name] = values;
    }
    return g;
}

}  // namespace

TEST_CASE("check examples") {
    auto h = check("hanson_3n", {{"n", "4"}}, ctx());
    CHECK(h.verdict == Verdict::Holds);
    CHECK(h.exact);
    CHECK(check("nair_2n", {{"n", "8"}}, ctx()).verdict == Verdict::Holds);
    auto l = check("lucas_sandwich", {{"P", "3"}, {"Q", "2"}, {"n", "4"}}, ctx());
    CHECK(l.verdict == Verdict::Holds);
    REQUIRE(l.lhs_log);
    REQUIRE(l.rhs_log);
    // Parameters may arrive in any order.
    CHECK(check("lucas_sandwich", {{"n", "4"}, {"Q", "2"}, {"P", "3"}}, ctx()).verdict == Verdict::Holds);
}

TEST_CASE("windows and errors") {
    CHECK(check("nair_2n", {{"n", "3"}}, ctx()).verdict == Verdict::Skipped);
    CHECK(check("ap_upper", {{"a", "1"}, {"b", "2"}, {"n", "2"}}, ctx()).verdict == Verdict::Skipped);
    CHECK_THROWS_AS(check("no_such_check", {}, ctx()), UnknownId);
    try {
        find_check("no_such_check");
    } catch (const UnknownId& e) {
        std::string msg = e.what();
        CHECK(msg.find("hanson_3n") != std::string::npos);
        CHECK(msg.find("bennett") != std::string::npos);
    }
    CHECK_THROWS_AS(check("hc_multiple", {{"c", "1"}, {"n", "5"}}, ctx()), std::invalid_argument);
}

TEST_CASE("Lucas lower exponent below zero still holds") {
    for (const char* n : {"1", "2"}) {
        auto r = check("lucas_sandwich", {{"P", "1"}, {"Q", "-1"}, {"n", n}}, ctx());
        CHECK(r.verdict == Verdict::Holds);
    }
}

TEST_CASE("scan examples") {
    auto nair = scan("nair_2n", {{"n", {"7..100"}}}, ctx());
    CHECK(nair.size() == 94);
    for (const auto& r : nair) CHECK(r.verdict == Verdict::Holds);

    for (auto [u0, r] : std::vector<std::pair<const char*, const char*>>{{"1", "2"}, {"3", "4"}}) {
        auto rs = scan("farhi_ap", {{"u0", {u0}}, {"r", {r}}, {"n", {"0..50"}}}, ctx());
        CHECK(rs.size() == 51);
        for (const auto& x : rs) CHECK(x.verdict == Verdict::Holds);
    }

    auto up = scan("ap_upper", {{"a", {"1"}}, {"b", {"2"}}, {"n", {"3..100"}}}, ctx());
    CHECK(up.size() == 98);
    for (const auto& r : up) CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("sweeps agree with pointwise runs") {
    for (const char* id : {"chebyshev_psi", "chebyshev_lcm", "hanson_pi", "nair_2n", "oon", "fib_sandwich"}) {
        const auto& spec = find_check(id);
        auto g = grid_for(spec);
        auto swept = scan(id, g, ctx());
        REQUIRE(!swept.empty());
        for (const auto& r : swept) {
            auto single = check(id, r.params, ctx());
            // Sweeps of exact checks decide through certified logs, so only the verdict must match.
            CHECK(single.verdict == r.verdict);
            CHECK(r.verdict != Verdict::Inconclusive);
        }
    }
}

// Every entry is a proved statement, so no point on a small grid may fail.
TEST_CASE("no catalog check fails on a small grid") {
    std::set<std::string> ids;
    for (const auto& spec : registry()) {
        CHECK(ids.insert(spec.id).second);
        auto g = grid_for(spec);
        std::uint64_t decided = 0;
        auto summary = scan(spec.id, g, ctx(), [&](BoundReport r) {
            INFO(spec.id << " " << params_to_string(r.params) << " " << r.note);
            CHECK(r.verdict != Verdict::Fails);
            if (spec.exact) CHECK(r.verdict != Verdict::Inconclusive);
            CHECK(r.check_id == spec.id);
            decided += r.verdict == Verdict::Holds;
            return true;
        });
        INFO(spec.id);
        CHECK(summary.fails == 0);
        CHECK(decided > 0);
    }
    CHECK(registry().size() == ids.size());
}

TEST_CASE("scan output does not depend on the worker count") {
    for (const char* id : {"hc_multiple", "chebyshev_theta", "general_identity"}) {
        auto g = grid_for(find_check(id));
        auto one = scan(id, g, ctx(), ScanOptions{1, false});
        auto four = scan(id, g, ctx(), ScanOptions{4, false});
        REQUIRE(one.size() == four.size());
        for (std::size_t i = 0; i < one.size(); ++i) {
            CHECK(one[i].params == four[i].params);
            CHECK(one[i].verdict == four[i].verdict);
            CHECK(one[i].lhs_log == four[i].lhs_log);
            CHECK(one[i].rhs_log == four[i].rhs_log);
        }
    }
}

TEST_CASE("fail-fast stops at the first failure") {
    // Scanning a real check with fail_fast and no failures visits everything.
    ScanOptions opts{1, true};
    auto summary = scan("nair_4n", {{"n", {"1..50"}}}, ctx(), [](BoundReport) { return true; }, opts);
    CHECK(summary.total() == 50);
    CHECK_FALSE(summary.stopped);
    // A sink that returns false stops the scan.
    std::uint64_t seen = 0;
    scan("nair_4n", {{"n", {"1..50"}}}, ctx(), [&](BoundReport) { return ++seen < 5; });
    CHECK(seen == 5);
}

TEST_CASE("integer lists") {
    CHECK(parse_int_list("1..5") == std::vector<std::int64_t>{1, 2, 3, 4, 5});
    CHECK(parse_int_list("1,2,5") == std::vector<std::int64_t>{1, 2, 5});
    CHECK(parse_int_list("1..3,7") == std::vector<std::int64_t>{1, 2, 3, 7});
    CHECK(parse_int_list("-2..0") == std::vector<std::int64_t>{-2, -1, 0});
    CHECK_THROWS_AS(parse_int_list("5..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list("a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int_list(""), std::invalid_argument);
}

TEST_CASE("M_of") {
    CHECK(M_of(2) == Rational(1));
    CHECK(M_of(3) == Rational(3, 4));
    CHECK(M_of(1) == Rational(1));
    CHECK(M_of(4) == Rational(2, 3));
}

TEST_CASE("constants") {
    CHECK(std::abs(chebyshev_A(128).mid_d() - 0.92129202) < 1e-8);
    double c1 = ch5_c1(table(), 128).mid_d();
    CHECK(std::abs(c1 - ch5::c1_printed.approx()) < 1e-8);
    CHECK(ch4::c1.approx() == doctest::Approx(41.30142));
    CHECK(ch5::c3.approx() == doctest::Approx(2.1284));
}

TEST_CASE("probes") {
    auto pnt = probe("pnt", {}, {100'000, 1000, 1000}, ctx());
    REQUIRE(pnt.points.size() == 2);
    CHECK(pnt.points[0].n == 1000);
    CHECK(std::abs(pnt.points[1].lo - 1.0) < 0.03);
    CHECK(pnt.points[1].lo <= pnt.points[1].hi);
    CHECK(pnt.target == 1.0);

    auto bat = probe("bateman", {{"a", "1"}, {"b", "3"}}, {1000}, ctx());
    CHECK(bat.target == doctest::Approx(2.25));

    auto mat = probe("matiyasevich", {}, {300}, ctx());
    CHECK(mat.target == doctest::Approx(3.0 / (M_PI * M_PI)));
    CHECK(std::abs(mat.points[0].lo - mat.target) < 0.04);

    auto cil = probe("cilleruelo_leading", {}, {2000}, ctx());
    CHECK(cil.points.size() == 1);
    auto mt = probe("M_trend", {}, {10, 1000}, ctx());
    CHECK(mt.points.size() == 2);

    CHECK_THROWS(probe("pnt", {}, {0}, ctx()));
    CHECK_THROWS_AS(probe("pnt", {}, {10'000'000}, ctx()), std::range_error);
    CHECK_THROWS(probe("nope", {}, {10}, ctx()));
}
