#include "lcm/sequences.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcm/prime_toolkit.hpp"

namespace lcmkit {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::int64_t parse_i64(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + s + "' in sequence spec '" + ctx + "'");
    }
}

std::vector<std::int64_t> parse_args(const std::string& args, std::size_t want, const std::string& ctx) {
    auto parts = split(args, ',');
    if (want && parts.size() != want)
        throw std::invalid_argument("sequence spec '" + ctx + "' expects " + std::to_string(want) + " arguments");
    std::vector<std::int64_t> out;
    for (auto& p : parts) out.push_back(parse_i64(p, ctx));
    return out;
}

BigInt abs_big(const BigInt& x) { return abs(x); }

std::string join(const std::vector<std::int64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

}  // namespace

SequenceSpec parse_spec(const std::string& text) {
    auto colon = text.find(':');
    std::string tag = text.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto bad = [&](const std::string& why) { return std::invalid_argument("sequence spec '" + text + "': " + why); };

    if (tag == "nat" && args.empty()) return Naturals{};
    if (tag == "fib" && args.empty()) return Lucas{1, -1};
    if (tag == "ap") {
        auto v = parse_args(args, 2, text);
        if (v[0] <= 0 || v[1] <= 0) throw bad("u0 and r must be positive");
        return Arithmetic{v[0], v[1]};
    }
    if (tag == "quad") {
        auto v = parse_args(args, 1, text);
        if (v[0] <= 0) throw bad("c must be positive");
        return Quadratic{v[0]};
    }
    if (tag == "quadgen") {
        auto v = parse_args(args, 3, text);
        if (v[0] <= 0 || v[1] <= 0 || v[2] < 0) throw bad("need a, b > 0 and t >= 0");
        return QuadraticGeneral{v[0], v[1], v[2]};
    }
    if (tag == "lucas") {
        auto v = parse_args(args, 2, text);
        if (v[0] == 0 || v[1] == 0) throw bad("P and Q must be non-zero");
        return Lucas{v[0], v[1]};
    }
    if (tag == "qpow") {
        auto v = parse_args(args, 1, text);
        if (v[0] < 2) throw bad("q must be at least 2");
        return QPower{v[0]};
    }
    if (tag == "poly") {
        auto v = parse_args(args, 0, text);
        bool non_constant = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0) throw bad("coefficients must be non-negative");
            if (i > 0 && v[i] != 0) non_constant = true;
        }
        if (!non_constant) throw bad("polynomial must be non-constant");
        return Polynomial{v};
    }
    if (tag == "explicit") {
        Explicit e;
        for (auto x : parse_args(args, 0, text)) {
            if (x <= 0) throw bad("terms must be positive");
            e.terms.emplace_back(static_cast<long>(x));
        }
        if (e.terms.empty()) throw bad("no terms");
        return e;
    }
    throw bad("unknown family (nat, fib, ap, quad, quadgen, lucas, qpow, poly, explicit)");
}

std::string spec_to_string(const SequenceSpec& spec) {
    struct V {
        std::string operator()(const Naturals&) const { return "nat"; }
        std::string operator()(const Arithmetic& s) const { return "ap:" + join({s.u0, s.r}); }
        std::string operator()(const Quadratic& s) const { return "quad:" + std::to_string(s.c); }
        std::string operator()(const QuadraticGeneral& s) const { return "quadgen:" + join({s.a, s.b, s.t}); }
        std::string operator()(const Lucas& s) const {
            if (s.P == 1 && s.Q == -1) return "fib";
            return "lucas:" + join({s.P, s.Q});
        }
        std::string operator()(const QPower& s) const { return "qpow:" + std::to_string(s.q); }
        std::string operator()(const Polynomial& s) const { return "poly:" + join(s.coeffs); }
        std::string operator()(const Explicit& s) const {
            std::string out = "explicit:";
            for (std::size_t i = 0; i < s.terms.size(); ++i) out += (i ? "," : "") + s.terms[i].get_str();
            return out;
        }
    };
    return std::visit(V{}, spec);
}

bool zero_based(const SequenceSpec& spec) {
    return std::holds_alternative<Arithmetic>(spec) || std::holds_alternative<QuadraticGeneral>(spec);
}

bool strong_divisibility_family(const SequenceSpec& spec) {
    if (std::holds_alternative<Naturals>(spec) || std::holds_alternative<QPower>(spec)) return true;
    if (auto* l = std::get_if<Lucas>(&spec)) return std::gcd(l->P, l->Q) == 1;
    return false;
}

std::vector<BigInt> generate(const SequenceSpec& spec, std::size_t count) {
    std::vector<BigInt> out;
    out.reserve(count);
    struct V {
        std::vector<BigInt>& out;
        std::size_t count;
        void operator()(const Naturals&) {
            for (std::size_t k = 1; k <= count; ++k) out.emplace_back(static_cast<unsigned long>(k));
        }
        void operator()(const Arithmetic& s) {
            for (std::size_t k = 0; k < count; ++k)
                out.push_back(BigInt(static_cast<long>(s.u0)) + BigInt(static_cast<long>(s.r)) * static_cast<unsigned long>(k));
        }
        void operator()(const Quadratic& s) {
            for (std::size_t k = 1; k <= count; ++k) {
                BigInt kk = static_cast<unsigned long>(k);
                out.push_back(kk * kk + static_cast<long>(s.c));
            }
        }
        void operator()(const QuadraticGeneral& s) {
            for (std::size_t k = 0; k < count; ++k) {
                BigInt kk = static_cast<unsigned long>(k);
                out.push_back(static_cast<long>(s.a) * kk * (kk + static_cast<long>(s.t)) + static_cast<long>(s.b));
            }
        }
        void operator()(const Lucas& s) {
            BigInt prev = 0, cur = 1;
            for (std::size_t k = 1; k <= count; ++k) {
                out.push_back(cur);
                BigInt next = static_cast<long>(s.P) * cur - static_cast<long>(s.Q) * prev;
                prev = std::move(cur);
                cur = std::move(next);
            }
        }
        void operator()(const QPower& s) {
            BigInt acc = 0, qk = 1;
            for (std::size_t k = 1; k <= count; ++k) {
                acc += qk;
                qk *= static_cast<long>(s.q);
                out.push_back(acc);
            }
        }
        void operator()(const Polynomial& s) {
            for (std::size_t k = 1; k <= count; ++k) {
                BigInt v = 0;
                for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it)
                    v = v * static_cast<unsigned long>(k) + static_cast<long>(*it);
                out.push_back(v);
            }
        }
        void operator()(const Explicit& s) {
            if (count > s.terms.size()) throw std::out_of_range("explicit sequence has too few terms");
            out.assign(s.terms.begin(), s.terms.begin() + static_cast<std::ptrdiff_t>(count));
        }
    };
    std::visit(V{out, count}, spec);
    return out;
}

BigInt lucas_closed_form(std::int64_t P, std::int64_t Q, std::uint64_t n) {
    const long delta = static_cast<long>(P * P - 4 * Q);
    if (delta == 0) throw std::domain_error("lucas_closed_form: repeated root");
    // alpha^n * 2^n = X + Y sqrt(delta); U_n = 2Y / 2^n.
    BigInt X = 1, Y = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        BigInt nx = X * static_cast<long>(P) + Y * delta;
        BigInt ny = X + Y * static_cast<long>(P);
        X = std::move(nx);
        Y = std::move(ny);
    }
    if (n == 0) return 0;
    BigInt twoY = 2 * Y, out;
    if (!mpz_divisible_2exp_p(twoY.get_mpz_t(), n)) throw std::logic_error("lucas_closed_form: non-integral");
    mpz_fdiv_q_2exp(out.get_mpz_t(), twoY.get_mpz_t(), n);
    return out;
}

std::vector<BigInt> sylvester(std::size_t count) {
    if (count > 8) throw std::invalid_argument("sylvester: capped at 8 terms");
    std::vector<BigInt> out;
    BigInt b = 2;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(b);
        b = b * b - b + 1;
    }
    return out;
}

std::vector<BigInt> sylvester_by_product(std::size_t count) {
    if (count > 8) throw std::invalid_argument("sylvester: capped at 8 terms");
    std::vector<BigInt> out;
    BigInt prod = 1;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(prod + 1);
        prod *= out.back();
    }
    return out;
}

std::vector<BigInt> extract_u(const std::vector<BigInt>& terms, UMethod method) {
    std::vector<BigInt> u;
    u.reserve(terms.size());
    for (const auto& a : terms)
        if (a == 0) throw std::domain_error("extract_u: zero term");

    if (method == UMethod::Nowicki) {
        BigInt L = 1, next;
        for (const auto& a : terms) {
            BigInt aa = abs_big(a);
            mpz_lcm(next.get_mpz_t(), L.get_mpz_t(), aa.get_mpz_t());
            BigInt q;
            mpz_divexact(q.get_mpz_t(), next.get_mpz_t(), L.get_mpz_t());
            u.push_back(std::move(q));
            L = next;
        }
        return u;
    }

    for (std::size_t n = 1; n <= terms.size(); ++n) {
        BigInt num = 1, den = 1;
        for (auto d : divisors(n)) {
            int mu = moebius(d);
            if (mu == 1) num *= abs_big(terms[n / d - 1]);
            if (mu == -1) den *= abs_big(terms[n / d - 1]);
        }
        if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
            throw std::domain_error("extract_u: non-integral quotient at index " + std::to_string(n) +
                                    "; the terms are not a strong divisibility sequence");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        u.push_back(std::move(q));
    }
    return u;
}

std::vector<BigInt> extract_u_by_prime_quotients(const std::vector<BigInt>& terms) {
    std::vector<BigInt> u;
    u.reserve(terms.size());
    for (std::size_t n = 1; n <= terms.size(); ++n) {
        BigInt L = 1;
        const auto f = factor_small(n);
        for (auto [q, e] : f.powers())
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), abs_big(terms[n / q - 1]).get_mpz_t());
        BigInt a = abs_big(terms[n - 1]);
        if (a == 0 || !mpz_divisible_p(a.get_mpz_t(), L.get_mpz_t()))
            throw std::domain_error("extract_u_by_prime_quotients: non-integral quotient");
        BigInt q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), L.get_mpz_t());
        u.push_back(std::move(q));
    }
    return u;
}

StrongDivisibility is_strong_divisibility(const std::vector<BigInt>& terms) {
    BigInt g;
    for (std::size_t i = 1; i <= terms.size(); ++i) {
        for (std::size_t j = i + 1; j <= terms.size(); ++j) {
            mpz_gcd(g.get_mpz_t(), terms[i - 1].get_mpz_t(), terms[j - 1].get_mpz_t());
            if (g != abs_big(terms[std::gcd(i, j) - 1])) return {false, std::make_pair(i, j)};
        }
    }
    return {};
}

StrongDivisibility u_coprime_on_incomparable(const std::vector<BigInt>& u) {
    BigInt g;
    for (std::size_t i = 1; i <= u.size(); ++i) {
        for (std::size_t j = i + 1; j <= u.size(); ++j) {
            if (j % i == 0) continue;
            mpz_gcd(g.get_mpz_t(), u[i - 1].get_mpz_t(), u[j - 1].get_mpz_t());
            if (g != 1) return {false, std::make_pair(i, j)};
        }
    }
    return {};
}

StrongDivisibility strong_divisibility_via_u(const std::vector<BigInt>& terms) {
    std::vector<BigInt> u;
    try {
        u = extract_u(terms, UMethod::Moebius);
    } catch (const std::domain_error&) {
        return {false, std::nullopt};
    }
    return u_coprime_on_incomparable(u);
}

std::vector<BigInt> terms_from_u(const std::vector<BigInt>& u) {
    std::vector<BigInt> a(u.size(), 1);
    for (std::size_t d = 1; d <= u.size(); ++d)
        for (std::size_t n = d; n <= u.size(); n += d) a[n - 1] *= u[d - 1];
    return a;
}

std::vector<std::size_t> champions(const std::vector<BigInt>& terms, std::uint64_t p) {
    std::vector<std::size_t> out;
    std::uint32_t best = 0;
    for (std::size_t m = 1; m <= terms.size(); ++m) {
        std::uint32_t v = valuation(abs_big(terms[m - 1]), p);
        bool champion = (m == 1) ? v > 0 : v > best;
        if (champion) out.push_back(m);
        best = std::max(best, v);
    }
    return out;
}

BigInt lcm_via_u(const std::vector<BigInt>& terms) {
    BigInt out = 1;
    for (const auto& u : extract_u(terms)) out *= u;
    return out;
}

Rational myerson_divisor(const std::vector<BigInt>& terms, const std::vector<BigInt>& b, std::uint64_t n) {
    Rational sum = 0;
    for (const auto& bj : b) {
        if (bj <= 0) throw std::invalid_argument("myerson_divisor: b must be positive");
        Rational t(BigInt(1), bj);
        t.canonicalize();
        sum += t;
    }
    if (sum > 1) throw std::invalid_argument("myerson_divisor: sum of 1/b exceeds 1");
    if (n > terms.size()) throw std::out_of_range("myerson_divisor: not enough terms");
    std::vector<BigInt> prefix(n + 1, 1);
    for (std::uint64_t k = 1; k <= n; ++k) prefix[k] = prefix[k - 1] * abs_big(terms[k - 1]);
    BigInt den = 1;
    for (const auto& bj : b) {
        BigInt q = BigInt(static_cast<unsigned long>(n)) / bj;
        den *= prefix[q.get_ui()];
    }
    Rational out(prefix[n], den);
    out.canonicalize();
    return out;
}

}  // namespace lcmkit
