#include "lcm/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcmkit {

Interval::Interval(int prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this == &o) return *this;
    if (prec_ != o.prec_) {
        prec_ = o.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_long(long v, int prec) {
    Interval out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
}

Interval Interval::from_z(const BigInt& v, int prec) {
    Interval out(prec);
    mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
    return out;
}

Interval Interval::from_q(const Rational& v, int prec) {
    Interval out(prec);
    mpfr_set_q(out.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(out.hi_, v.get_mpq_t(), MPFR_RNDU);
    return out;
}

Interval Interval::pi(int prec) {
    Interval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
}

double Interval::mid_d() const {
    mpfr_t m;
    mpfr_init2(m, prec_ + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

namespace {

int joint_prec(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Interval& Interval::operator+=(const Interval& o) {
    int p = joint_prec(*this, o);
    Interval out(p);
    mpfr_add(out.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, hi_, o.hi_, MPFR_RNDU);
    return *this = std::move(out);
}

Interval& Interval::operator-=(const Interval& o) {
    int p = joint_prec(*this, o);
    Interval out(p);
    mpfr_sub(out.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, hi_, o.lo_, MPFR_RNDU);
    return *this = std::move(out);
}

Interval& Interval::operator*=(const Interval& o) {
    int p = joint_prec(*this, o);
    Interval out(p);
    mpfr_t t;
    mpfr_init2(t, p);
    mpfr_srcptr xs[2] = {lo_, hi_};
    mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    bool first = true;
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return *this = std::move(out);
}

Interval& Interval::operator/=(const Interval& o) {
    if (o.contains_zero()) throw std::domain_error("interval division by an enclosure of zero");
    int p = joint_prec(*this, o);
    Interval inv(p);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this *= inv;
}

Interval Interval::operator-() const {
    Interval out(prec_);
    mpfr_neg(out.lo_, hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, lo_, MPFR_RNDU);
    return out;
}

Interval log(const Interval& x) {
    if (!x.positive()) throw std::domain_error("log of a non-positive enclosure");
    Interval out(x.prec_);
    mpfr_log(out.lo_, x.lo_, MPFR_RNDD);
    mpfr_log(out.hi_, x.hi_, MPFR_RNDU);
    return out;
}

Interval sqrt(const Interval& x) {
    if (mpfr_sgn(x.lo_) < 0) throw std::domain_error("sqrt of a negative enclosure");
    Interval out(x.prec_);
    mpfr_sqrt(out.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqrt(out.hi_, x.hi_, MPFR_RNDU);
    return out;
}

Interval exp(const Interval& x) {
    Interval out(x.prec_);
    mpfr_exp(out.lo_, x.lo_, MPFR_RNDD);
    mpfr_exp(out.hi_, x.hi_, MPFR_RNDU);
    return out;
}

Interval pow(const Interval& x, const Rational& k) {
    return exp(log(x) * Interval::from_q(k, x.precision()));
}

std::string Interval::to_string(int digits) const {
    auto render = [digits](mpfr_srcptr v, mpfr_rnd_t r) {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*R*g", digits, r, v);
        return std::string(buf);
    };
    return "[" + render(lo_, MPFR_RNDD) + ", " + render(hi_, MPFR_RNDU) + "]";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "HOLDS";
        case Verdict::Fails: return "FAILS";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

Verdict verdict_from_string(const std::string& s) {
    for (auto v : {Verdict::Holds, Verdict::Fails, Verdict::Inconclusive, Verdict::Skipped})
        if (s == to_string(v)) return v;
    throw std::invalid_argument("unknown verdict: " + s);
}

BoundVerdict compare_enclosures(const Interval& lhs, const Interval& rhs, Relation rel) {
    const Interval& small = rel == Relation::LessEq ? lhs : rhs;
    const Interval& large = rel == Relation::LessEq ? rhs : lhs;
    BoundVerdict out;
    out.precision_bits = std::max(lhs.precision(), rhs.precision());
    out.margin = (large - small).mid_d();
    if (small.certainly_le(large))
        out.verdict = Verdict::Holds;
    else if (large.certainly_lt(small))
        out.verdict = Verdict::Fails;
    else
        out.verdict = Verdict::Inconclusive;
    return out;
}

LogExpr LogExpr::log_of(const Rational& v, const Rational& k) {
    if (sgn(v) <= 0) throw std::domain_error("log of a non-positive value");
    LogExpr e;
    e.terms_.push_back([v, k](int prec) {
        return log(Interval::from_q(v, prec)) * Interval::from_q(k, prec);
    });
    return e;
}

LogExpr LogExpr::log_of(const BigInt& v, const Rational& k) { return log_of(Rational(v), k); }

LogExpr LogExpr::log_of(const FactoredInteger& f) {
    LogExpr e;
    e.terms_.push_back([f](int prec) {
        Interval acc(prec);
        for (auto [p, k] : f.powers())
            acc += log(Interval::from_z(BigInt(static_cast<unsigned long>(p)), prec)) *
                   Interval::from_long(static_cast<long>(k), prec);
        return acc;
    });
    return e;
}

LogExpr LogExpr::constant(const Rational& q) {
    LogExpr e;
    e.terms_.push_back([q](int prec) { return Interval::from_q(q, prec); });
    return e;
}

LogExpr LogExpr::custom(Term t) {
    LogExpr e;
    e.terms_.push_back(std::move(t));
    return e;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) { return *this += o.scaled(-1); }

LogExpr LogExpr::scaled(const Rational& k) const {
    LogExpr e;
    auto self = *this;
    e.terms_.push_back([self, k](int prec) { return self.eval(prec) * Interval::from_q(k, prec); });
    return e;
}

Interval LogExpr::eval(int prec) const {
    Interval acc(prec);
    for (const auto& t : terms_) acc += t(prec);
    return acc;
}

BoundVerdict log_compare(const LogExpr& lhs, const LogExpr& rhs, Relation rel, int precision,
                         int max_precision) {
    BoundVerdict out;
    for (int prec = precision;; prec *= 2) {
        out = compare_enclosures(lhs.eval(prec), rhs.eval(prec), rel);
        if (out.verdict != Verdict::Inconclusive || prec >= max_precision) return out;
    }
}

const Interval& LogCache::log_of(std::uint64_t v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    auto x = log(Interval::from_z(BigInt(static_cast<unsigned long>(v)), prec_));
    return cache_.emplace(v, std::move(x)).first->second;
}

Interval LogCache::log_of(const FactoredInteger& f) {
    Interval acc(prec_);
    for (auto [p, k] : f.powers()) acc += log_of(p) * Interval::from_long(static_cast<long>(k), prec_);
    return acc;
}

}  // namespace lcmkit
