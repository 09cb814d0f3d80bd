#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcm/interval.hpp"

namespace lcmkit {

// Ordered key/value parameters; order is the canonical grid order.
using Params = std::vector<std::pair<std::string, std::string>>;

std::string params_to_string(const Params& p);
const std::string* find_param(const Params& p, const std::string& key);

// Outward-rounded double enclosure of a log-domain side.
struct LogEnclosure {
    double lo = 0.0;
    double hi = 0.0;
    static LogEnclosure from(const Interval& x) { return {x.lo_d(), x.hi_d()}; }
    friend bool operator==(const LogEnclosure&, const LogEnclosure&) = default;
};

struct BoundReport {
    std::string check_id;
    Params params;
    std::optional<LogEnclosure> lhs_log;
    std::optional<LogEnclosure> rhs_log;
    Verdict verdict = Verdict::Inconclusive;
    bool exact = false;  // decided by integer arithmetic, never INCONCLUSIVE
    double margin = 0.0;
    int precision_bits = 0;
    std::string note;
    std::int64_t elapsed_us = 0;

    friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

BoundReport exact_report(std::string id, Params params, bool holds, std::string note = {});
BoundReport skipped_report(std::string id, Params params, std::string why);
BoundReport interval_report(std::string id, Params params, const Interval& lhs, const Interval& rhs,
                            const BoundVerdict& v, std::string note = {});

// Merge several sub-verdicts into one: any FAILS wins, then INCONCLUSIVE, then HOLDS.
Verdict combine(Verdict a, Verdict b);

}  // namespace lcmkit
