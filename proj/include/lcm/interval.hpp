#pragma once

#include <functional>
#include <string>
#include <vector>

#include <mpfr.h>

#include "lcm/exact_arith.hpp"

namespace lcmkit {

inline constexpr int kDefaultPrecision = 128;
inline constexpr int kMaxPrecision = 1024;

// Closed interval [lo, hi] of MPFR numbers. Every operation rounds lo down and hi up,
// so the true value of an expression stays inside its enclosure.
class Interval {
public:
    explicit Interval(int prec = kDefaultPrecision);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_long(long v, int prec);
    static Interval from_z(const BigInt& v, int prec);
    static Interval from_q(const Rational& v, int prec);
    static Interval pi(int prec);

    int precision() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }
    double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid_d() const;
    bool contains_zero() const;
    bool positive() const { return mpfr_sgn(lo_) > 0; }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);
    Interval operator-() const;

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

    // Both throw std::domain_error when the enclosure leaves the domain.
    friend Interval log(const Interval& x);
    friend Interval sqrt(const Interval& x);
    friend Interval exp(const Interval& x);

    // Certified comparisons: true only when the enclosures prove it.
    bool certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
    bool certainly_lt(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }

    std::string to_string(int digits = 20) const;

private:
    int prec_;
    mpfr_t lo_, hi_;
};

// x^k for rational k and positive x.
Interval pow(const Interval& x, const Rational& k);

enum class Verdict { Holds, Fails, Inconclusive, Skipped };
const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

// Direction of the asserted inequality lhs REL rhs.
enum class Relation { LessEq, GreaterEq };

struct BoundVerdict {
    Verdict verdict = Verdict::Inconclusive;
    double margin = 0.0;  // signed slack; positive when the inequality holds
    int precision_bits = kDefaultPrecision;
};

// Verdict from two enclosures without any precision escalation.
BoundVerdict compare_enclosures(const Interval& lhs, const Interval& rhs, Relation rel);

// Real quantity that can be re-evaluated at any precision.
class LogExpr {
public:
    using Term = std::function<Interval(int)>;

    LogExpr() = default;

    // k * log(v), v > 0 (std::domain_error otherwise).
    static LogExpr log_of(const Rational& v, const Rational& k = 1);
    static LogExpr log_of(const BigInt& v, const Rational& k = 1);
    // sum of e_p * log p.
    static LogExpr log_of(const FactoredInteger& f);
    static LogExpr constant(const Rational& q);
    static LogExpr custom(Term t);

    LogExpr& operator+=(const LogExpr& o);
    LogExpr& operator-=(const LogExpr& o);
    friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
    friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
    LogExpr scaled(const Rational& k) const;

    Interval eval(int prec) const;

private:
    std::vector<Term> terms_;
};

// Evaluates both sides, doubling precision up to max_precision while the
// enclosures overlap. Raising precision never flips a decided verdict.
BoundVerdict log_compare(const LogExpr& lhs, const LogExpr& rhs, Relation rel,
                         int precision = kDefaultPrecision, int max_precision = kMaxPrecision);

// Log of primes cached at one precision. Not thread-safe; one per worker.
class LogCache {
public:
    explicit LogCache(int prec) : prec_(prec) {}
    int precision() const { return prec_; }
    const Interval& log_of(std::uint64_t v);
    Interval log_of(const FactoredInteger& f);

private:
    int prec_;
    std::map<std::uint64_t, Interval> cache_;
};

}  // namespace lcmkit
