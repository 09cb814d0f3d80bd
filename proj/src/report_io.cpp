#include "lcm/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lcmkit {

using json = nlohmann::ordered_json;

namespace {

std::string num(double v, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string midpoint(const std::optional<LogEnclosure>& e) {
    return e ? num((e->lo + e->hi) / 2) : std::string();
}

double distance(const ProbeSeries& s, const ProbePoint& p) { return std::abs((p.lo + p.hi) / 2 - s.target); }

std::int64_t shown_elapsed(const BoundReport& r, bool timing) { return timing ? r.elapsed_us : 0; }

json enclosure_json(const std::optional<LogEnclosure>& e) {
    if (!e) return nullptr;
    return json{{"lo", e->lo}, {"hi", e->hi}};
}

std::optional<LogEnclosure> enclosure_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return LogEnclosure{j.at("lo").get<double>(), j.at("hi").get<double>()};
}

json params_json(const Params& p) {
    json o = json::object();
    for (const auto& [k, v] : p) o[k] = v;
    return o;
}

Params params_from(const json& j) {
    Params p;
    for (auto it = j.begin(); it != j.end(); ++it) p.emplace_back(it.key(), it.value().get<std::string>());
    return p;
}

}  // namespace

Format format_from_string(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "' (text, csv, json)");
}

std::string report_text(const BoundReport& r, bool timing) {
    std::ostringstream os;
    os << to_string(r.verdict) << ' ' << r.check_id << ' ' << params_to_string(r.params);
    if (r.lhs_log) os << " lhs=[" << num(r.lhs_log->lo, 12) << ", " << num(r.lhs_log->hi, 12) << ']';
    if (r.rhs_log) os << " rhs=[" << num(r.rhs_log->lo, 12) << ", " << num(r.rhs_log->hi, 12) << ']';
    if (!r.exact && r.verdict != Verdict::Skipped) os << " margin=" << num(r.margin, 6) << " bits=" << r.precision_bits;
    if (r.exact) os << " exact";
    if (!r.note.empty()) os << " (" << r.note << ')';
    if (timing) os << ' ' << num(static_cast<double>(r.elapsed_us) / 1000.0, 6) << "ms";
    return os.str();
}

std::string report_csv(const BoundReport& r, bool timing) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", static_cast<double>(shown_elapsed(r, timing)) / 1000.0);
    return csv_field(r.check_id) + ',' + csv_field(params_to_string(r.params)) + ',' + midpoint(r.lhs_log) + ',' +
           midpoint(r.rhs_log) + ',' + to_string(r.verdict) + ',' + ms;
}

std::string report_json(const BoundReport& r, bool timing) {
    json j;
    j["check_id"] = r.check_id;
    j["params"] = params_json(r.params);
    j["lhs_log"] = enclosure_json(r.lhs_log);
    j["rhs_log"] = enclosure_json(r.rhs_log);
    j["verdict"] = to_string(r.verdict);
    j["exact"] = r.exact;
    j["margin"] = r.margin;
    j["precision_bits"] = r.precision_bits;
    j["note"] = r.note;
    j["elapsed_us"] = shown_elapsed(r, timing);
    return j.dump();
}

BoundReport report_from_json(const std::string& line) {
    try {
        json j = json::parse(line);
        BoundReport r;
        r.check_id = j.at("check_id").get<std::string>();
        r.params = params_from(j.at("params"));
        r.lhs_log = enclosure_from(j.at("lhs_log"));
        r.rhs_log = enclosure_from(j.at("rhs_log"));
        r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
        r.exact = j.at("exact").get<bool>();
        r.margin = j.at("margin").get<double>();
        r.precision_bits = j.at("precision_bits").get<int>();
        r.note = j.at("note").get<std::string>();
        r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
        return r;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
}

std::string summary_text(const ScanSummary& s) {
    std::ostringstream os;
    os << "total " << s.total() << ": " << s.holds << " HOLDS, " << s.fails << " FAILS, " << s.inconclusive
       << " INCONCLUSIVE, " << s.skipped << " SKIPPED";
    if (s.stopped) os << " (stopped at first FAILS)";
    return os.str();
}

std::string summary_json(const ScanSummary& s) {
    json j;
    j["summary"] = {{"total", s.total()},   {"holds", s.holds},     {"fails", s.fails},
                    {"inconclusive", s.inconclusive}, {"skipped", s.skipped}, {"stopped", s.stopped}};
    return j.dump();
}

std::string probe_text(const ProbeSeries& s) {
    std::ostringstream os;
    os << s.probe_id;
    if (!s.params.empty()) os << ' ' << params_to_string(s.params);
    os << " target " << s.target_text << '\n';
    for (const auto& p : s.points)
        os << p.n << ' ' << p.value << " [" << num(p.lo, 17) << ", " << num(p.hi, 17) << "] distance "
           << num(distance(s, p), 6) << '\n';
    return os.str();
}

std::string probe_csv(const ProbeSeries& s) {
    std::string out = "probe_id,params,n,ratio,lo,hi,target,distance\n";
    for (const auto& p : s.points)
        out += csv_field(s.probe_id) + ',' + csv_field(params_to_string(s.params)) + ',' + std::to_string(p.n) + ',' +
               p.value + ',' + num(p.lo) + ',' + num(p.hi) + ',' + num(s.target) + ',' + num(distance(s, p)) + '\n';
    return out;
}

std::string probe_json(const ProbeSeries& s) {
    json j;
    j["probe_id"] = s.probe_id;
    j["params"] = params_json(s.params);
    j["target"] = s.target;
    j["target_text"] = s.target_text;
    j["points"] = json::array();
    for (const auto& p : s.points)
        j["points"].push_back({{"n", p.n}, {"ratio", p.value}, {"lo", p.lo}, {"hi", p.hi}, {"distance", distance(s, p)}});
    return j.dump();
}

ProbeSeries probe_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        ProbeSeries s;
        s.probe_id = j.at("probe_id").get<std::string>();
        s.params = params_from(j.at("params"));
        s.target = j.at("target").get<double>();
        s.target_text = j.at("target_text").get<std::string>();
        for (const auto& p : j.at("points"))
            s.points.push_back({p.at("n").get<std::uint64_t>(), p.at("lo").get<double>(), p.at("hi").get<double>(),
                                p.at("ratio").get<std::string>()});
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed probe series: ") + e.what());
    }
}

}  // namespace lcmkit
