#pragma once

// Helpers shared by the catalog translation units.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lcm/bounds_catalog.hpp"

namespace lcmkit::detail {

void add_chebyshev_checks(std::vector<CheckSpec>& out);
void add_progression_checks(std::vector<CheckSpec>& out);
void add_quadratic_checks(std::vector<CheckSpec>& out);
void add_identity_checks(std::vector<CheckSpec>& out);
void add_lucas_checks(std::vector<CheckSpec>& out);
void add_n2plus1_checks(std::vector<CheckSpec>& out);
void add_probes(std::vector<ProbeSpec>& out);

std::int64_t int_param(const Params& p, const std::string& name);
const std::string& text_param(const Params& p, const std::string& name);
Params int_params(std::initializer_list<std::pair<const char*, std::int64_t>> kv);
Params with_last(Params prefix, const std::string& name, std::int64_t v);

ParamSpec int_spec(std::string name, std::string help);
ParamSpec seq_spec(std::string help);

std::string brief(const BigInt& x);

// lhs REL rhs with precision escalation.
BoundReport log_report(std::string id, Params params, const LogExpr& lhs, const LogExpr& rhs, Relation rel,
                       const CheckContext& ctx, std::string note = {});
// lower <= value <= upper with escalation; lhs_log is the value, rhs_log the tighter side.
BoundReport sandwich_report(std::string id, Params params, const LogExpr& lower, const LogExpr& value,
                            const LogExpr& upper, const CheckContext& ctx);

// Fixed-precision variants for sweeps; an INCONCLUSIVE result is re-run by scan.
BoundReport enclosure_report(std::string id, Params params, const Interval& lhs, const Interval& rhs,
                             Relation rel);
BoundReport sandwich_enclosure(std::string id, Params params, const Interval& lower, const Interval& value,
                               const Interval& upper);

Interval ival(long v, int prec);
Interval ival(const Rational& q, int prec);

// Running lcm of positive integers with its certified log.
class LcmAccumulator {
public:
    LcmAccumulator(const PrimeTable& t, int prec);
    void add(std::uint64_t v);
    void add(const FactoredInteger& f);
    void add_prime_power(std::uint64_t p, std::uint32_t e);
    const Interval& log() const { return log_; }
    const FactoredInteger& value() const { return lcm_; }

private:
    const PrimeTable& table_;
    LogCache cache_;
    FactoredInteger lcm_;
    Interval log_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> scratch_;
};

}  // namespace lcmkit::detail
