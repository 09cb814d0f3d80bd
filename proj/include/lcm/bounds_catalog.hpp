#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcm/exact_arith.hpp"
#include "lcm/interval.hpp"
#include "lcm/prime_toolkit.hpp"
#include "lcm/report.hpp"

namespace lcmkit {

struct CheckContext {
    const PrimeTable& primes;
    int precision = kDefaultPrecision;
    int max_precision = kMaxPrecision;
};

enum class ParamKind { Integer, Spec };

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Integer;
    std::string help;
};

// Receives reports in order; returning false stops the producer.
using ReportSink = std::function<bool(BoundReport)>;

struct CheckSpec {
    std::string id;
    std::string summary;
    std::vector<ParamSpec> params;  // canonical order; the last one is the swept one
    std::string window;             // applicability window in words
    bool exact = false;             // decided by integer arithmetic
    // Reason the point lies outside the window, empty when applicable.
    std::function<std::string(const Params&)> skip_reason;
    std::function<BoundReport(const Params&, const CheckContext&)> run;
    // Optional incremental evaluation over ascending values of the last
    // parameter (all applicable). Must emit exactly one report per value.
    std::function<bool(const Params& prefix, const std::vector<std::int64_t>& values, const CheckContext&,
                       const ReportSink&)>
        sweep;
};

class UnknownId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<CheckSpec>& registry();
// Throws UnknownId whose message lists every valid id.
const CheckSpec& find_check(const std::string& id);

// Params must name every parameter of the check (any order); missing ones throw std::invalid_argument.
BoundReport check(const std::string& id, const Params& params, const CheckContext& ctx);

// Values per parameter name. Integer lists are sorted and deduplicated before the scan.
using Grid = std::map<std::string, std::vector<std::string>>;

struct ScanOptions {
    unsigned workers = 1;
    bool fail_fast = false;  // stop after the first FAILS
};

struct ScanSummary {
    std::uint64_t holds = 0, fails = 0, inconclusive = 0, skipped = 0;
    bool stopped = false;
    std::uint64_t total() const { return holds + fails + inconclusive + skipped; }
};

// Cartesian product of the grid, last parameter innermost. Reports reach the
// sink in that order whatever the worker count.
ScanSummary scan(const std::string& id, const Grid& grid, const CheckContext& ctx, const ReportSink& sink,
                 const ScanOptions& opts = {});
std::vector<BoundReport> scan(const std::string& id, const Grid& grid, const CheckContext& ctx,
                              const ScanOptions& opts = {});

// "1..5000" (inclusive), "1,2,5" or a mix such as "1..3,7".
std::vector<std::int64_t> parse_int_list(const std::string& text);

struct ProbePoint {
    std::uint64_t n = 0;
    double lo = 0.0, hi = 0.0;  // outward enclosure of the ratio
    std::string value;          // ratio midpoint, 20 significant digits
};

struct ProbeSeries {
    std::string probe_id;
    Params params;
    std::vector<ProbePoint> points;  // strictly increasing n
    double target = 0.0;
    std::string target_text;
};

struct ProbeSpec {
    std::string id;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> defaults;  // parameter name -> default value
    std::function<ProbeSeries(const Params&, const std::vector<std::uint64_t>&, const CheckContext&)> run;
};

const std::vector<ProbeSpec>& probe_registry();
// Points are sorted and deduplicated; zero or unknown ids throw.
ProbeSeries probe(const std::string& id, const Params& params, std::vector<std::uint64_t> points,
                  const CheckContext& ctx);

// (1/phi(r)) sum_{l <= r, gcd(l, r) = 1} 1/l.
Rational M_of(std::uint64_t r);

// Decimal constant num/den, exact.
struct DecimalConstant {
    long num;
    long den;
    Rational value() const { return Rational(num, den); }
    Interval enclose(int prec) const { return Interval::from_q(value(), prec); }
    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Constants of the arithmetic-progression chapter.
namespace ch4 {
inline constexpr DecimalConstant c1{4130142, 100000};
inline constexpr DecimalConstant c2{1230641, 100000};
inline constexpr DecimalConstant c3{125507, 100000};
inline constexpr DecimalConstant c4{335609, 100000};
inline constexpr DecimalConstant c5{138402, 100000};
inline constexpr DecimalConstant c6{157681, 100000};
inline constexpr DecimalConstant c7{21284, 10000};
}  // namespace ch4

// Constants of the n^2 + 1 chapter; c1 is printed to ten places and recomputed by ch5_c1.
namespace ch5 {
inline constexpr DecimalConstant alpha1{7993, 10000};
inline constexpr DecimalConstant alpha2{103624, 10000};
inline constexpr DecimalConstant alpha3{39497, 10000};
inline constexpr DecimalConstant beta1{6722, 10000};
inline constexpr DecimalConstant beta2{5981, 10000};
inline constexpr DecimalConstant beta3{281, 1000};
inline constexpr DecimalConstant c1_printed{1608548666, 10000000000};
inline constexpr DecimalConstant c3{21284, 10000};
}  // namespace ch5

// log(2^(1/2) 3^(1/3) 5^(1/5) / 30^(1/30)).
Interval chebyshev_A(int prec);

// 1/2 - 0.4/(3 log 10) + int_1^1000 theta(t;4,3)/t^2 dt - (3/2) log 10 + 0.4 log log 1000,
// with the integral summed exactly over the steps of theta.
Interval ch5_c1(const PrimeTable& t, int prec);

}  // namespace lcmkit
