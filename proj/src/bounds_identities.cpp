#include <algorithm>

#include "catalog_detail.hpp"
#include "lcm/identities.hpp"
#include "lcm/sequences.hpp"

namespace lcmkit {
namespace detail {

namespace {

std::vector<BigInt> abs_terms(const SequenceSpec& spec, std::size_t n) {
    auto t = generate(spec, n);
    for (auto& x : t) x = abs(x);
    return t;
}

std::string strong_window(const Params& p) {
    if (int_param(p, "n") < 1) return "needs n >= 1";
    if (!strong_divisibility_family(parse_spec(text_param(p, "seq")))) return "needs a strong divisibility family";
    return {};
}

std::string prime_window(const Params& p) {
    auto q = int_param(p, "p");
    if (q < 2 || !is_prime_trial(static_cast<std::uint64_t>(q))) return "needs p prime";
    if (int_param(p, "n") < 0) return "needs n >= 0";
    return {};
}

CheckSpec seq_check(std::string id, std::string summary, std::string window,
                    std::function<BoundReport(const SequenceSpec&, std::uint64_t, const Params&)> body,
                    std::function<std::string(const Params&)> skip) {
    CheckSpec c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.params = {seq_spec("sequence spec, e.g. nat, fib, lucas:3,2, qpow:2"), int_spec("n", "row or prefix length")};
    c.window = std::move(window);
    c.exact = true;
    c.skip_reason = std::move(skip);
    c.run = [body](const Params& p, const CheckContext&) {
        return body(parse_spec(text_param(p, "seq")), static_cast<std::uint64_t>(int_param(p, "n")), p);
    };
    return c;
}

std::string row_window(const Params& p) {
    if (int_param(p, "n") < 0) return "needs n >= 0";
    if (!strong_divisibility_family(parse_spec(text_param(p, "seq")))) return "needs a strong divisibility family";
    return {};
}

BoundReport relabel(BoundReport r, const Params& p) {
    r.params = p;
    return r;
}

}  // namespace

void add_identity_checks(std::vector<CheckSpec>& out) {
    {
        CheckSpec c;
        c.id = "farhi_identity";
        c.summary = "(n+1) lcm(C(n,0), ..., C(n,n)) = lcm(1, ..., n+1)";
        c.params = {int_spec("n", "row index")};
        c.window = "n >= 0";
        c.exact = true;
        c.skip_reason = [](const Params& p) { return int_param(p, "n") < 0 ? std::string("needs n >= 0") : std::string(); };
        c.run = [](const Params& p, const CheckContext&) {
            return relabel(farhi_identity_check(static_cast<std::uint64_t>(int_param(p, "n"))), p);
        };
        out.push_back(std::move(c));
    }
    out.push_back(seq_check(
        "general_identity", "a_{n+1} lcm of the a-binomial row n = lcm(a_1, ..., a_{n+1})",
        "strong divisibility family, n >= 0",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) { return relabel(general_identity_check(s, n), p); },
        row_window));
    out.push_back(seq_check(
        "lcm_row_multiples", "lcm(a_1..a_n) = lcm{a_k C(n,k)_a : 1 <= k <= n}", "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) { return relabel(lcm_row_multiples_check(s, n), p); },
        strong_window));
    out.push_back(seq_check(
        "lcm_row_gcd", "lcm(a_1..a_n) = gcd{C(n,k)_a lcm(a_1..a_k) : ceil(n/2) <= k <= n}",
        "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) { return relabel(lcm_row_gcd_check(s, n), p); },
        strong_window));
    out.push_back(seq_check(
        "u_methods_agree", "u-sequence by Nowicki's recursion, Moebius inversion and prime quotients coincide",
        "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) {
            auto a = abs_terms(s, n);
            auto u1 = extract_u(a, UMethod::Nowicki);
            auto u2 = extract_u(a, UMethod::Moebius);
            auto u3 = extract_u_by_prime_quotients(a);
            bool ok = u1 == u2 && u1 == u3 && terms_from_u(u1) == a;
            return exact_report("u_methods_agree", p, ok, ok ? "" : "u-sequences differ");
        },
        strong_window));
    out.push_back(seq_check(
        "lcm_via_u", "lcm(a_1..a_n) = u_1 u_2 ... u_n", "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) {
            auto a = abs_terms(s, n);
            BigInt via_u = lcm_via_u(a), direct = lcm_big(a);
            return exact_report("lcm_via_u", p, via_u == direct, brief(via_u) + " vs " + brief(direct));
        },
        strong_window));
    out.push_back(seq_check(
        "strong_divisibility_criteria",
        "gcd(a_i, a_j) = a_gcd(i,j) for all pairs iff u is pairwise coprime at incomparable indices",
        "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) {
            auto a = abs_terms(s, n);
            bool direct = is_strong_divisibility(a).holds;
            bool via_u = strong_divisibility_via_u(a).holds;
            return exact_report("strong_divisibility_criteria", p, direct && via_u,
                                std::string("direct=") + (direct ? "yes" : "no") + " via_u=" + (via_u ? "yes" : "no"));
        },
        strong_window));
    out.push_back(seq_check(
        "myerson", "lcm(a_1..a_n) divides a_1...a_n / prod_j prod_{k <= n/b_j} a_k with Sylvester b",
        "strong divisibility family, n >= 1",
        [](const SequenceSpec& s, std::uint64_t n, const Params& p) {
            auto a = abs_terms(s, n);
            Rational q = myerson_divisor(a, sylvester(5), n);
            bool integral = q.get_den() == 1;
            BigInt L = lcm_big(a);
            bool divides = integral && mpz_divisible_p(q.get_num().get_mpz_t(), L.get_mpz_t()) != 0;
            return exact_report("myerson", p, integral && divides,
                                "quotient " + brief(q.get_num()) + (integral ? "" : " not integral") +
                                    (divides ? "" : ", lcm does not divide"));
        },
        strong_window));
    {
        CheckSpec c;
        c.id = "champions_match";
        c.summary = "champion indices for p are exactly the m with p | u_m, and each divides the next";
        c.params = {seq_spec("sequence spec"), int_spec("p", "prime"), int_spec("n", "prefix length")};
        c.window = "strong divisibility family, p prime, n >= 1";
        c.exact = true;
        c.skip_reason = [](const Params& p) {
            std::string why = prime_window(p);
            if (why.empty()) why = strong_window(p);
            return why;
        };
        c.run = [](const Params& p, const CheckContext&) {
            auto a = abs_terms(parse_spec(text_param(p, "seq")), static_cast<std::size_t>(int_param(p, "n")));
            auto q = static_cast<std::uint64_t>(int_param(p, "p"));
            auto champs = champions(a, q);
            auto u = extract_u(a);
            std::vector<std::size_t> from_u;
            for (std::size_t m = 1; m <= u.size(); ++m)
                if (mpz_divisible_ui_p(u[m - 1].get_mpz_t(), q)) from_u.push_back(m);
            bool chain = true;
            for (std::size_t i = 1; i < champs.size(); ++i) chain = chain && champs[i] % champs[i - 1] == 0;
            return exact_report("champions_match", p, champs == from_u && chain,
                                std::to_string(champs.size()) + " champions");
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "kummer_legendre";
        c.summary = "borrows of k + (n-k) in base p equal v_p(C(n,k)) for every 0 <= k <= n";
        c.params = {int_spec("p", "prime"), int_spec("n", "row index")};
        c.window = "p prime, n >= 0";
        c.exact = true;
        c.skip_reason = prime_window;
        c.run = [](const Params& p, const CheckContext&) {
            auto q = static_cast<std::uint64_t>(int_param(p, "p"));
            auto n = static_cast<std::uint64_t>(int_param(p, "n"));
            for (std::uint64_t k = 0; k <= n; ++k) {
                auto borrows = kummer_borrows(n, k, q);
                if (borrows != binomial_valuation(n, k, q) || borrows != valuation(binomial(n, k), q))
                    return exact_report("kummer_legendre", p, false, "mismatch at k=" + std::to_string(k));
            }
            return exact_report("kummer_legendre", p, true);
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "binomial_max_valuation";
        c.summary = "max_k v_p(C(n,k)) is attained at k = p^N - 1";
        c.params = {int_spec("p", "prime"), int_spec("n", "row index")};
        c.window = "p prime, n >= 0";
        c.exact = true;
        c.skip_reason = prime_window;
        c.run = [](const Params& p, const CheckContext&) {
            auto q = static_cast<std::uint64_t>(int_param(p, "p"));
            auto n = static_cast<std::uint64_t>(int_param(p, "n"));
            std::uint64_t best = 0;
            for (std::uint64_t k = 0; k <= n; ++k) best = std::max(best, binomial_valuation(n, k, q));
            auto [value, witness] = max_binomial_valuation(n, q);
            std::uint64_t pw = 1;
            while (pw * q <= witness + 1) pw *= q;
            bool ok = value == best && witness <= n && pw == witness + 1 &&
                      binomial_valuation(n, witness, q) == best;
            return exact_report("binomial_max_valuation", p, ok,
                                "max " + std::to_string(best) + " at k=" + std::to_string(witness));
        };
        out.push_back(std::move(c));
    }
    {
        CheckSpec c;
        c.id = "nair_divisor";
        c.summary = "l C(k, l) divides lcm(1, ..., k)";
        c.params = {int_spec("k", "row index"), int_spec("l", "1 <= l <= k")};
        c.window = "1 <= l <= k";
        c.exact = true;
        c.skip_reason = [](const Params& p) {
            auto k = int_param(p, "k"), l = int_param(p, "l");
            return (l >= 1 && l <= k) ? std::string() : std::string("needs 1 <= l <= k");
        };
        c.run = [](const Params& p, const CheckContext&) {
            return relabel(nair_divisor_check(static_cast<std::uint64_t>(int_param(p, "k")),
                                              static_cast<std::uint64_t>(int_param(p, "l"))),
                           p);
        };
        out.push_back(std::move(c));
    }
}

}  // namespace detail
}  // namespace lcmkit
