#include "lcm/report.hpp"

namespace lcmkit {

std::string params_to_string(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ';';
        out += k + '=' + v;
    }
    return out;
}

const std::string* find_param(const Params& p, const std::string& key) {
    for (const auto& kv : p)
        if (kv.first == key) return &kv.second;
    return nullptr;
}

BoundReport exact_report(std::string id, Params params, bool holds, std::string note) {
    BoundReport r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.verdict = holds ? Verdict::Holds : Verdict::Fails;
    r.exact = true;
    r.note = std::move(note);
    return r;
}

BoundReport skipped_report(std::string id, Params params, std::string why) {
    BoundReport r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.verdict = Verdict::Skipped;
    r.note = std::move(why);
    return r;
}

BoundReport interval_report(std::string id, Params params, const Interval& lhs, const Interval& rhs,
                            const BoundVerdict& v, std::string note) {
    BoundReport r;
    r.check_id = std::move(id);
    r.params = std::move(params);
    r.lhs_log = LogEnclosure::from(lhs);
    r.rhs_log = LogEnclosure::from(rhs);
    r.verdict = v.verdict;
    r.margin = v.margin;
    r.precision_bits = v.precision_bits;
    r.note = std::move(note);
    return r;
}

Verdict combine(Verdict a, Verdict b) {
    auto rank = [](Verdict v) {
        switch (v) {
            case Verdict::Fails: return 3;
            case Verdict::Inconclusive: return 2;
            case Verdict::Holds: return 1;
            case Verdict::Skipped: return 0;
        }
        return 0;
    };
    return rank(a) >= rank(b) ? a : b;
}

}  // namespace lcmkit
